// Copyright 2026 The Magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "magiclab/errors.hpp"

namespace magiclab {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

/// Dense square complex matrix, row major. Every matrix in this library is
/// at most 16x16, so nothing clever is attempted.
class CMat {
  public:
    CMat() = default;
    explicit CMat(std::size_t n) : n_(n), a_(n * n) {}

    static CMat identity(std::size_t n) {
        CMat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return n_; }

    cplx& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    CMat operator*(const CMat& o) const {
        if (n_ != o.n_) throw DimMismatch(n_, o.n_);
        CMat out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < n_; ++j) out(i, j) += aik * o(k, j);
            }
        return out;
    }

    CMat operator*(cplx s) const {
        CMat out = *this;
        for (auto& z : out.a_) z *= s;
        return out;
    }

    Vec apply(const Vec& v) const {
        if (v.size() != n_) throw DimMismatch(n_, v.size());
        Vec out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            cplx acc{};
            for (std::size_t j = 0; j < n_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    CMat adjoint() const {
        CMat out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = std::conj((*this)(j, i));
        return out;
    }

    CMat pow(unsigned k) const {
        CMat out = identity(n_);
        for (unsigned i = 0; i < k; ++i) out = out * (*this);
        return out;
    }

    /// tr(A^dagger B)
    static cplx adjoint_trace(const CMat& a, const CMat& b) {
        if (a.n_ != b.n_) throw DimMismatch(a.n_, b.n_);
        cplx t{};
        for (std::size_t i = 0; i < a.a_.size(); ++i) t += std::conj(a.a_[i]) * b.a_[i];
        return t;
    }

    static CMat kron(const CMat& a, const CMat& b) {
        CMat out(a.n_ * b.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t j = 0; j < a.n_; ++j)
                for (std::size_t k = 0; k < b.n_; ++k)
                    for (std::size_t l = 0; l < b.n_; ++l)
                        out(i * b.n_ + k, j * b.n_ + l) = a(i, j) * b(k, l);
        return out;
    }

    static double max_abs_diff(const CMat& a, const CMat& b) {
        if (a.n_ != b.n_) throw DimMismatch(a.n_, b.n_);
        double m = 0;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            m = std::max(m, std::abs(a.a_[i] - b.a_[i]));
        return m;
    }

    double unitarity_defect() const {
        return max_abs_diff(adjoint() * (*this), identity(n_));
    }

  private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

/// Eigenvalues of a real symmetric matrix (row major, n x n) by cyclic Jacobi
/// rotations, returned in ascending order. Used for 6x6 Hessians only.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Solves the linear system a x = b (a row major n x n, overwritten) by
/// Gaussian elimination with partial pivoting. Returns false if singular.
inline bool solve_linear(std::vector<double> a, std::vector<double> b,
                         std::vector<double>& x, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-14) return false;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * n + j] * x[j];
        x[i] = acc / a[i * n + i];
    }
    return true;
}

}  // namespace magiclab
