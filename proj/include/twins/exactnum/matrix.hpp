#pragma once

#include "twins/exactnum/field.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twins {

struct SingularMatrix : std::domain_error {
    SingularMatrix(const std::string& det)
        : std::domain_error("singular matrix, determinant " + det), determinant(det) {}
    std::string determinant;
};

template <class K>
struct LinearSolution {
    bool consistent = false;
    std::vector<K> particular;             // valid when consistent
    std::vector<std::vector<K>> nullspace;  // basis of the homogeneous solutions
};

// Dense row-major matrix over a field with exact elimination.
template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, K(0)) {}
    Matrix(std::vector<std::vector<K>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows[0].size() : 0;
        a_.reserve(r_ * c_);
        for (auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix rows");
            for (auto& v : row) a_.push_back(std::move(v));
        }
    }
    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    K& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const K& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    std::vector<K> operator*(const std::vector<K>& v) const {
        if (v.size() != c_) throw std::invalid_argument("dimension mismatch");
        std::vector<K> out(r_, K(0));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("dimension mismatch");
        Matrix m(r_, o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < c_; ++k)
                for (size_t j = 0; j < o.c_; ++j) m(i, j) += (*this)(i, k) * o(k, j);
        return m;
    }
    Matrix transpose() const {
        Matrix m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    K determinant() const {
        if (r_ != c_) throw std::invalid_argument("determinant of non-square matrix");
        Matrix m = *this;
        K det(1);
        for (size_t col = 0; col < c_; ++col) {
            size_t piv = col;
            while (piv < r_ && twins::is_zero(m(piv, col))) ++piv;
            if (piv == r_) return K(0);
            if (piv != col) {
                m.swap_rows(piv, col);
                det = -det;
            }
            det *= m(col, col);
            K inv = K(1) / m(col, col);
            for (size_t i = col + 1; i < r_; ++i) {
                if (twins::is_zero(m(i, col))) continue;
                K f = m(i, col) * inv;
                for (size_t j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return det;
    }

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t row = 0;
        for (size_t col = 0; col < c_ && row < r_; ++col) {
            size_t piv = row;
            while (piv < r_ && twins::is_zero((*this)(piv, col))) ++piv;
            if (piv == r_) continue;
            swap_rows(piv, row);
            K inv = K(1) / (*this)(row, col);
            for (size_t j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (size_t i = 0; i < r_; ++i) {
                if (i == row || twins::is_zero((*this)(i, col))) continue;
                K f = (*this)(i, col);
                for (size_t j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    // Unique solution of a square nonsingular system.
    std::vector<K> solve(const std::vector<K>& rhs) const {
        if (r_ != c_) throw std::invalid_argument("solve requires a square matrix");
        K det = determinant();
        if (twins::is_zero(det)) throw SingularMatrix(to_string(det));
        LinearSolution<K> s = solve_general(rhs);
        return s.particular;
    }

    // Full solution set of A v = rhs for any shape.
    LinearSolution<K> solve_general(const std::vector<K>& rhs) const {
        if (rhs.size() != r_) throw std::invalid_argument("rhs dimension mismatch");
        Matrix aug(r_, c_ + 1);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_) = rhs[i];
        }
        std::vector<size_t> piv = aug.rref();
        LinearSolution<K> out;
        out.consistent = piv.empty() || piv.back() != c_;
        std::vector<bool> is_pivot(c_, false);
        for (size_t p : piv)
            if (p < c_) is_pivot[p] = true;
        if (out.consistent) {
            out.particular.assign(c_, K(0));
            for (size_t k = 0; k < piv.size(); ++k) out.particular[piv[k]] = aug(k, c_);
        }
        for (size_t free = 0; free < c_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(c_, K(0));
            v[free] = K(1);
            for (size_t k = 0; k < piv.size(); ++k)
                if (piv[k] < c_) v[piv[k]] = -aug(k, free);
            out.nullspace.push_back(std::move(v));
        }
        return out;
    }

    std::vector<std::vector<K>> nullspace() const { return solve_general(std::vector<K>(r_, K(0))).nullspace; }

private:
    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    size_t r_ = 0, c_ = 0;
    std::vector<K> a_;
};

}  // namespace twins
