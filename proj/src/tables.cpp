#include <map>

#include "clifford/classification.hpp"
#include "clifford/conjugations.hpp"

namespace clifford {

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }

// 2^{(n-k)/2} in symbolic and evaluated form.
struct Power {
    std::string sym;
    std::string val;
};

Power power(int n, int k) {
    int e = n - k;
    if (e < 0 || e % 2) internal_fail("tabulated exponent is not a non-negative integer");
    return {"2^{(n-" + std::to_string(k) + ")/2}", std::to_string(1L << (e / 2))};
}

LieGroupName one_arg(const std::string& head, const Power& a, const std::string& tail = "") {
    return {head + "(" + a.sym + tail + ")", head + "(" + a.val + tail + ")"};
}

LieGroupName two_arg(const std::string& head, const Power& a) {
    return {head + "(" + a.sym + "," + a.sym + ")", head + "(" + a.val + "," + a.val + ")"};
}

}  // namespace

std::string spin_class_lookup(const Signature& sig) {
    if (sig.degenerate()) domain_fail("spin groups are tabulated for nondegenerate signatures only");
    static const std::map<std::pair<int, int>, std::string> table = {
        {{0, 0}, "O(1)"},       {{0, 1}, "O(1)"},       {{0, 2}, "U(1)"},       {{0, 3}, "SU(2)"},
        {{0, 4}, "²SU(2)"},     {{0, 5}, "Sp(2)"},      {{0, 6}, "SU(4)"},      {{1, 0}, "O(1)"},
        {{1, 1}, "GL(1,R)"},    {{1, 2}, "SU(1,1)"},    {{1, 3}, "Sp(1,C)"},    {{1, 4}, "Sp(1,1)"},
        {{1, 5}, "SL(2,H)"},    {{2, 0}, "U(1)"},       {{2, 1}, "SU(1,1)"},    {{2, 2}, "²SU(1,1)"},
        {{2, 3}, "Sp(2,R)"},    {{2, 4}, "SU(2,2)"},    {{3, 0}, "SU(2)"},      {{3, 1}, "Sp(1,C)"},
        {{3, 2}, "Sp(2,R)"},    {{3, 3}, "SL(4,R)"},    {{4, 0}, "²SU(2)"},     {{4, 1}, "Sp(1,1)"},
        {{4, 2}, "SU(2,2)"},    {{5, 0}, "Sp(2)"},      {{5, 1}, "SL(2,H)"},    {{6, 0}, "SU(4)"},
    };
    auto it = table.find({sig.p, sig.q});
    if (it == table.end()) domain_fail("Spin+ is tabulated for n <= 6 only");
    return it->second;
}

LieGroupName g2_class_lookup(const Signature& sig) {
    if (sig.degenerate()) domain_fail("the group is tabulated for nondegenerate signatures only");
    const int n = sig.n();
    if (n < 1) domain_fail("the group is tabulated for n >= 1");
    const int rn = mod8(n), rd = mod8(sig.p - sig.q);
    const bool mixed = sig.p != 0 && sig.q != 0;
    if (n % 2 == 0) {
        if (rn == 0) {
            if (rd == 0) return mixed ? two_arg("²O", power(n, 4)) : one_arg("²O", power(n, 2));
            if (rd == 4) return one_arg("²O", power(n, 4), ",H");
            return one_arg("O", power(n, 2), ",C");
        }
        if (rn == 4) {
            if (rd == 0) return one_arg("²Sp", power(n, 4), ",R");
            if (rd == 4) return mixed ? two_arg("²Sp", power(n, 6)) : one_arg("²Sp", power(n, 4));
            return one_arg("Sp", power(n, 4), ",C");
        }
        if (rd == 0) return one_arg("GL", power(n, 2), ",R");
        if (rd == 4) return one_arg("GL", power(n, 4), ",H");
        return mixed ? two_arg("U", power(n, 4)) : one_arg("U", power(n, 2));
    }
    const bool row_one = rn == 1 || rn == 7;
    const bool col_one = rd == 1 || rd == 7;
    if (row_one) {
        if (col_one) return mixed ? two_arg("O", power(n, 3)) : one_arg("O", power(n, 1));
        return one_arg("O", power(n, 3), ",H");
    }
    if (col_one) return one_arg("Sp", power(n, 3), ",R");
    return mixed ? two_arg("Sp", power(n, 5)) : one_arg("Sp", power(n, 3));
}

const std::vector<LieGroupRow>& lie_group_rows() {
    static const std::vector<LieGroupRow> rows = {
        {1, "(C(x)Cl)^x", "0123|0123"}, {2, "Cl^x", "0123|"},   {3, "Cl(0)^x", "02|"},
        {4, "(C(x)Cl(0))^x", "02|02"},  {5, "(Cl(0)+iCl(1))^x", "02|13"},
        {6, "G23i01", "23|01"},         {7, "G12i03", "12|03"}, {8, "G2i0", "2|0"},
        {9, "G23i23", "23|23"},         {10, "G12i12", "12|12"}, {11, "G2i2", "2|2"},
        {12, "G2i1", "2|1"},            {13, "G2i3", "2|3"},    {14, "G23", "23|"},
        {15, "G12", "12|"},             {16, "G2", "2|"},
    };
    return rows;
}

Rational lie_group_dimension(int id, int n) {
    auto p2 = [](int h) { return pow2_half(h); };
    QSqrt2 v;
    switch (id) {
        case 1: v = p2(2 * (n + 1)); break;
        case 2:
        case 4:
        case 5:
        case 6:
        case 7: v = p2(2 * n); break;
        case 3:
        case 8: v = p2(2 * (n - 1)); break;
        case 9: v = p2(2 * n) - p2(n + 1) * sin_quarter_pi(n + 1); break;
        case 10: v = p2(2 * n) - p2(n + 1) * cos_quarter_pi(n + 1); break;
        case 11: v = p2(2 * (n - 1)) - p2(n) * cos_quarter_pi(n); break;
        case 12:
        case 15: v = p2(2 * (n - 1)) - p2(n - 1) * cos_quarter_pi(n + 1); break;
        case 13:
        case 14: v = p2(2 * (n - 1)) - p2(n - 1) * sin_quarter_pi(n + 1); break;
        case 16: v = p2(2 * (n - 2)) - p2(n - 2) * cos_quarter_pi(n); break;
        default: domain_fail("group id must be 1..16");
    }
    return v.rational();
}

long lie_group_dimension_from_types(int id, int n) {
    if (id < 1 || id > 16) domain_fail("group id must be 1..16");
    const std::string& alg = lie_group_rows()[id - 1].lie_algebra;
    long s = 0;
    for (char c : alg)
        if (c >= '0' && c <= '3') s += quaternion_type_dimension_count(n, c - '0');
    return s;
}

}  // namespace clifford
