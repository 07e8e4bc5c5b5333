#pragma once

#include <optional>
#include <vector>

#include "clifford/scalar.hpp"

namespace clifford {

// Dense row-major matrix over K.
template <class K>
class Matrix {
public:
    using F = Field<K>;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix conj() const {
        Matrix t(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = F::conj(data_[k]);
        return t;
    }

    Matrix adjoint() const { return transpose().conj(); }

    K trace() const {
        K s = F::zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = K(-x);
        return c;
    }
    friend Matrix operator*(const K& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = K(s * x);
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) domain_fail("matrix shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        K tmp = F::zero();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a(i, k);
                if (F::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    tmp = x * b(k, j);
                    c(i, j) += tmp;
                }
            }
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<K>& data() const { return data_; }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) domain_fail("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <class To, class From>
Matrix<To> convert_matrix(const Matrix<From>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = convert_scalar<To>(m(i, j));
    return out;
}

template <class K>
bool matrix_approx_equal(const Matrix<K>& a, const Matrix<K>& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        if (Field<K>::magnitude(K(a.data()[k] - b.data()[k])) > tol) return false;
    return true;
}

namespace detail {

template <class K>
bool negligible(const K& x, double tol) {
    if constexpr (Field<K>::exact)
        return Field<K>::is_zero(x);
    else
        return Field<K>::magnitude(x) <= tol;
}

template <class K>
std::optional<std::size_t> choose_pivot(const Matrix<K>& m, std::size_t col, std::size_t from, double tol) {
    std::optional<std::size_t> best;
    double best_mag = 0.0;
    for (std::size_t i = from; i < m.rows(); ++i) {
        if (negligible(m(i, col), tol)) continue;
        if constexpr (Field<K>::exact) {
            return i;
        } else {
            double mag = Field<K>::magnitude(m(i, col));
            if (!best || mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
    }
    return best;
}

template <class K>
void swap_rows(Matrix<K>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m, double tol = 1e-10, std::size_t col_limit = SIZE_MAX) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    const std::size_t ncols = std::min(m.cols(), col_limit);
    K tmp = Field<K>::zero();
    for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
        auto piv = detail::choose_pivot(m, col, row, tol);
        if (!piv) continue;
        detail::swap_rows(m, row, *piv);
        K inv = Field<K>::one();
        inv /= m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || Field<K>::is_zero(m(i, col))) continue;
            K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                tmp = f * m(row, j);
                m(i, j) -= tmp;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m, double tol = 1e-10) {
    return rref_in_place(m, tol).size();
}

template <class K>
K determinant(Matrix<K> m, double tol = 0.0) {
    if (m.rows() != m.cols()) domain_fail("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    K det = Field<K>::one();
    K tmp = Field<K>::zero();
    for (std::size_t col = 0; col < n; ++col) {
        auto piv = detail::choose_pivot(m, col, col, tol);
        if (!piv) return Field<K>::zero();
        if (*piv != col) {
            detail::swap_rows(m, col, *piv);
            det = K(-det);
        }
        det *= m(col, col);
        K inv = Field<K>::one();
        inv /= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (Field<K>::is_zero(m(i, col))) continue;
            K f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                tmp = f * m(col, j);
                m(i, j) -= tmp;
            }
        }
    }
    return det;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) domain_fail("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Field<K>::one();
    }
    auto piv = rref_in_place(aug, tol, n);
    if (piv.size() < n) return std::nullopt;
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class K>
struct LinearSolution {
    bool consistent = false;
    std::vector<K> x;          // particular solution with free variables set to zero
    std::size_t nullity = 0;
};

template <class K>
LinearSolution<K> solve(const Matrix<K>& a, const std::vector<K>& b, double tol = 1e-10) {
    if (a.rows() != b.size()) domain_fail("right-hand side length mismatch");
    const std::size_t n = a.cols();
    Matrix<K> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref_in_place(aug, tol, n);
    LinearSolution<K> out;
    out.nullity = n - piv.size();
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        if (!detail::negligible(aug(i, n), tol)) return out;
    out.consistent = true;
    out.x.assign(n, Field<K>::zero());
    for (std::size_t r = 0; r < piv.size(); ++r) out.x[piv[r]] = aug(r, n);
    return out;
}

}  // namespace clifford
