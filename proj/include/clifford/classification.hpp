#pragma once

#include <string>
#include <vector>

#include "clifford/qsqrt2.hpp"
#include "clifford/signature.hpp"

namespace clifford {

enum class Ring { R, C, H };

// Matrix algebra Mat(size, ring), doubled when the algebra is a direct sum of two copies.
struct CartanClass {
    Ring ring = Ring::R;
    int size = 1;
    bool doubled = false;

    std::string short_name() const;   // R(2), ²H, C(4)
    std::string matrix_name() const;  // Mat(2,H), Mat(1,R)+Mat(1,R)

    friend bool operator==(const CartanClass&, const CartanClass&) = default;
};

CartanClass cartan_class(const Signature& sig);

struct ExteriorSignature {
    long positive = 0;  // blades squaring to +e
    long negative = 0;  // blades squaring to -e

    friend bool operator==(const ExteriorSignature&, const ExteriorSignature&) = default;
};

// Counted over all basis blades.
ExteriorSignature exterior_signature(const Signature& sig);

// Closed form 2^{(n-1)/2}(2^{(n-1)/2} + sin(pi(p-q+1)/4)).
ExteriorSignature exterior_signature_closed_form(const Signature& sig);

// Isomorphism of real algebras decided by comparing dimension and exterior signature.
bool iso_test(const Signature& a, const Signature& b);

// Spin+(p,q) as a classical group, tabulated for n <= 6.
std::string spin_class_lookup(const Signature& sig);

struct LieGroupName {
    std::string symbolic;   // exponents left as expressions in n
    std::string evaluated;  // exponents evaluated for this signature
};

// The group {U even : reversion(U) U = e} as a classical group.
LieGroupName g2_class_lookup(const Signature& sig);

// The sixteen groups of the complexified algebra.
struct LieGroupRow {
    int id;
    std::string name;
    std::string lie_algebra;  // quaternion types, real part then imaginary part after 'i'
};

const std::vector<LieGroupRow>& lie_group_rows();

// Dimension of group `id` from its closed formula.
Rational lie_group_dimension(int id, int n);

// Dimension summed from the quaternion-type subspaces of its Lie algebra.
long lie_group_dimension_from_types(int id, int n);

}  // namespace clifford
