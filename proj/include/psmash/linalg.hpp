// Dense exact linear algebra: matrices, rank-3 structure-constant tensors,
// row reduction, span bases, membership, inversion. Pivoting is first
// nonzero in column order; exact arithmetic needs nothing fancier.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "psmash/scalar.hpp"

namespace psmash {

template <Field K>
using Vec = std::vector<K>;

template <Field K>
Vec<K> zero_vec(size_t n) { return Vec<K>(n, K::zero()); }

template <Field K>
Vec<K> unit_vec(size_t n, size_t i) {
    Vec<K> v(n, K::zero());
    v[i] = K::one();
    return v;
}

template <Field K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <Field K>
void vec_add_scaled(Vec<K>& dst, const K& c, const Vec<K>& src) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

template <Field K>
Vec<K> vec_scale(const K& c, const Vec<K>& v) {
    Vec<K> r = v;
    for (auto& x : r) x = c * x;
    return r;
}

template <Field K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <Field K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <Field K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

template <Field K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t r, size_t c) : rows_(r), cols_(c), e_(r * c, K::zero()) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = K::one();
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw error("Matrix: ragged rows");
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const K& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Vec<K> row(size_t i) const {
        return Vec<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }
    Vec<K> col(size_t j) const {
        Vec<K> v(rows_, K::zero());
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_row(size_t i, const Vec<K>& v) {
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(size_t j, const Vec<K>& v) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw error("Matrix: shape mismatch in product");
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const K& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    // Column-vector application: w = M v.
    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_) throw error("Matrix: shape mismatch in apply");
        Vec<K> w(rows_, K::zero());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const K& a = (*this)(i, j);
                if (!a.is_zero()) w[i] += a * v[j];
            }
        return w;
    }

    // Row-vector application: w = v M (rows-as-basis convention).
    Vec<K> apply_left(const Vec<K>& v) const {
        if (v.size() != rows_) throw error("Matrix: shape mismatch in apply_left");
        Vec<K> w(cols_, K::zero());
        for (size_t i = 0; i < rows_; ++i) {
            if (v[i].is_zero()) continue;
            for (size_t j = 0; j < cols_; ++j) w[j] += v[i] * (*this)(i, j);
        }
        return w;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    const std::vector<K>& entries() const { return e_; }
    std::vector<K>& entries() { return e_; }

private:
    size_t rows_, cols_;
    std::vector<K> e_;
};

// Reduced row echelon form together with the ordered pivot column list.
template <Field K>
std::pair<Matrix<K>, std::vector<size_t>> rref(Matrix<K> m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { sel = i; break; }
        if (sel == m.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(sel, j));
        K inv = m(r, c).inverse();
        for (size_t j = 0; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            K f = m(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <Field K>
size_t rank(const Matrix<K>& m) { return rref(m).second.size(); }

// Basis (rref rows, zero rows dropped) of the span of the given vectors.
template <Field K>
Matrix<K> span_basis(const std::vector<Vec<K>>& vectors) {
    if (vectors.empty()) return Matrix<K>(0, 0);
    auto [red, pivots] = rref(Matrix<K>::from_rows(vectors));
    Matrix<K> b(pivots.size(), red.cols());
    for (size_t i = 0; i < pivots.size(); ++i) b.set_row(i, red.row(i));
    return b;
}

// Solves x A = b for a row vector x (i.e. expresses b in the rows of A).
template <Field K>
std::optional<Vec<K>> solve_row(const Matrix<K>& a, const Vec<K>& b) {
    if (b.size() != a.cols()) throw error("solve_row: length mismatch");
    // Gaussian elimination on [A^T | b^T].
    size_t n = a.rows(), m = a.cols();
    Matrix<K> aug(m, n + 1);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
        aug(i, n) = b[i];
    }
    auto [red, pivots] = rref(std::move(aug));
    Vec<K> x(n, K::zero());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == n) return std::nullopt; // inconsistent system
        x[pivots[i]] = red(i, n);
    }
    return x;
}

// Coordinates of v in the row space of `basis`, or nullopt when v is not in
// the span. Coordinates are unique when the rows are independent.
template <Field K>
std::optional<Vec<K>> membership(const Vec<K>& v, const Matrix<K>& basis) {
    if (basis.rows() == 0) {
        if (vec_is_zero(v)) return Vec<K>{};
        return std::nullopt;
    }
    return solve_row(basis, v);
}

// Exact two-sided inverse, or nullopt for a singular matrix.
template <Field K>
std::optional<Matrix<K>> invert(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw error("invert: matrix not square");
    size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K::one();
    }
    auto [red, pivots] = rref(std::move(aug));
    if (pivots.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix<K> inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

// Dense (d1, d2, d3) array of scalars; index meaning is documented by each
// owner (structure constants, coproducts, action tensors).
template <Field K>
class Tensor3 {
public:
    Tensor3() : d1_(0), d2_(0), d3_(0) {}
    Tensor3(size_t d1, size_t d2, size_t d3)
        : d1_(d1), d2_(d2), d3_(d3), e_(d1 * d2 * d3, K::zero()) {}

    size_t d1() const { return d1_; }
    size_t d2() const { return d2_; }
    size_t d3() const { return d3_; }

    K& operator()(size_t i, size_t j, size_t k) { return e_[(i * d2_ + j) * d3_ + k]; }
    const K& operator()(size_t i, size_t j, size_t k) const {
        return e_[(i * d2_ + j) * d3_ + k];
    }

    // Slice along the third index: t(i, j, .) as a vector.
    Vec<K> slice(size_t i, size_t j) const {
        auto it = e_.begin() + (i * d2_ + j) * d3_;
        return Vec<K>(it, it + d3_);
    }
    void set_slice(size_t i, size_t j, const Vec<K>& v) {
        for (size_t k = 0; k < d3_; ++k) (*this)(i, j, k) = v[k];
    }

    bool operator==(const Tensor3& o) const {
        return d1_ == o.d1_ && d2_ == o.d2_ && d3_ == o.d3_ && e_ == o.e_;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

    const std::vector<K>& entries() const { return e_; }
    std::vector<K>& entries() { return e_; }

private:
    size_t d1_, d2_, d3_;
    std::vector<K> e_;
};

} // namespace psmash
