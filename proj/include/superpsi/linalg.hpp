/*
   Copyright 2026 The superpsi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUPERPSI_LINALG_HPP
#define SUPERPSI_LINALG_HPP

#include "field.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace superpsi {

template <class K>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, K(0)) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    bool is_zero() const {
        for (auto& v : a_)
            if (!isZero(v)) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                if (isZero(x(i, k))) continue;
                for (int j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend std::vector<K> operator*(const Matrix& x, const std::vector<K>& v) {
        if (x.c_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix shape mismatch");
        std::vector<K> out(x.r_, K(0));
        for (int i = 0; i < x.r_; ++i)
            for (int j = 0; j < x.c_; ++j) out[i] += x(i, j) * v[j];
        return out;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix z = x;
        for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    friend Matrix operator*(const K& s, Matrix x) {
        for (auto& v : x.a_) v *= s;
        return x;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) { return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_; }

    // stack vertically
    Matrix over(const Matrix& below) const {
        if (c_ != below.c_) throw std::invalid_argument("matrix shape mismatch");
        Matrix z(r_ + below.r_, c_);
        std::copy(a_.begin(), a_.end(), z.a_.begin());
        std::copy(below.a_.begin(), below.a_.end(), z.a_.begin() + a_.size());
        return z;
    }

    // reduced row echelon form in place, returns pivot columns
    std::vector<int> rref() {
        std::vector<int> piv;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int sel = -1;
            for (int i = row; i < r_; ++i)
                if (!isZero((*this)(i, col))) {
                    sel = i;
                    break;
                }
            if (sel < 0) continue;
            for (int j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
            K inv = (*this)(row, col).inverse();
            for (int j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || isZero((*this)(i, col))) continue;
                K f = (*this)(i, col);
                for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        return piv;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    std::vector<std::vector<K>> nullspace() const {
        Matrix m = *this;
        auto piv = m.rref();
        std::vector<bool> isPiv(c_, false);
        for (int p : piv) isPiv[p] = true;
        std::vector<std::vector<K>> basis;
        for (int f = 0; f < c_; ++f) {
            if (isPiv[f]) continue;
            std::vector<K> v(c_, K(0));
            v[f] = K(1);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<K> a_;
};

template <class K>
K determinant(Matrix<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const int n = m.rows();
    K det(1);
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int r = c; r < n; ++r)
            if (!isZero(m(r, c))) {
                sel = r;
                break;
            }
        if (sel < 0) return K(0);
        if (sel != c) {
            for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        K inv = K(1) / m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (isZero(m(r, c))) continue;
            K f = m(r, c) * inv;
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

}  // namespace superpsi

#endif
