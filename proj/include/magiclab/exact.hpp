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

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/errors.hpp"
#include "magiclab/states.hpp"

namespace magiclab {

/// Gaussian integer a + b i with arbitrary-precision components.
struct GaussianInt {
    mpz_class re, im;

    GaussianInt() = default;
    GaussianInt(long r, long i) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt times_i() const { return {-im, re}; }
    mpz_class norm2() const { return re * re + im * im; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }

    /// Multiplication by (1+i).
    GaussianInt times_one_plus_i() const { return {re - im, re + im}; }

    /// Exact division by (1+i); empty if not divisible.
    /// (a+bi)/(1+i) = ((a+b) + (b-a) i) / 2, integral iff a+b is even.
    std::optional<GaussianInt> div_one_plus_i() const {
        mpz_class s = re + im;
        if (mpz_odd_p(s.get_mpz_t())) return std::nullopt;
        return GaussianInt{s / 2, (im - re) / 2};
    }

    cplx to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// Amplitude vector over the ring Z[i, 1/sqrt(2)]: Gaussian-integer
/// numerators divided by sqrt(2)^k, with sum |num|^2 = 2^k (unit norm).
///
/// Clifford gates (H, S, CNOT) and two-qubit displacement operators act
/// exactly on this representation; H raises k by one. Reduction divides all
/// numerators by (1+i) and lowers k, which only changes the global phase, so
/// fully reduced vectors of projectively equal states differ exactly by a
/// unit in {1, i, -1, -i}. That makes up-to-phase deduplication exact.
class ExactState {
  public:
    ExactState() = default;

    /// From numerators over sqrt(2)^root2_exp; verifies exact unit norm.
    /// The numerators are preserved verbatim (no phase canonicalization).
    ExactState(std::vector<GaussianInt> nums, int root2_exp)
        : nums_(std::move(nums)), k_(root2_exp) {
        check_norm();
    }

    /// From Gaussian numerators over an integer denominator m (a power of 2).
    static ExactState over_integer_denominator(std::vector<GaussianInt> nums, long m) {
        long k = 0, v = m;
        while (v > 1 && v % 2 == 0) {
            v /= 2;
            k += 2;
        }
        if (v != 1) throw Error("denominator " + std::to_string(m) + " is not a power of 2");
        return ExactState(std::move(nums), static_cast<int>(k));
    }

    int dim() const { return static_cast<int>(nums_.size()); }
    int root2_exp() const { return k_; }
    const std::vector<GaussianInt>& numerators() const { return nums_; }

    /// Fully reduced representative: divides out every common (1+i) factor,
    /// which rotates the global phase by a power of e^{-i pi/4}. Two fully
    /// reduced vectors of projectively equal states differ exactly by a unit
    /// in {1, i, -1, -i}.
    ExactState reduced() const {
        ExactState out = *this;
        out.reduce();
        return out;
    }

    /// Storage form with an integer denominator: pads odd k by one (1+i)
    /// factor (a pure phase). Returns (numerators, m) with sum|num|^2 = m^2.
    std::pair<std::vector<GaussianInt>, mpz_class> integer_form() const {
        std::vector<GaussianInt> nums = nums_;
        int k = k_;
        if (k % 2 != 0) {
            for (auto& z : nums) z = z.times_one_plus_i();
            ++k;
        }
        mpz_class m = 1;
        for (int i = 0; i < k / 2; ++i) m *= 2;
        return {std::move(nums), m};
    }

    /// Representative with an even sqrt(2) exponent, i.e. an integer
    /// denominator (pads by one (1+i) factor when k is odd; a pure phase).
    ExactState with_integer_denominator() const {
        if (k_ % 2 == 0) return *this;
        std::vector<GaussianInt> nums = nums_;
        for (auto& z : nums) z = z.times_one_plus_i();
        return ExactState(std::move(nums), k_ + 1);
    }

    PureState to_pure() const {
        const double scale = std::pow(2.0, -0.5 * k_);
        Vec v(nums_.size());
        for (std::size_t i = 0; i < nums_.size(); ++i) v[i] = nums_[i].to_complex() * scale;
        return PureState{dim(), std::move(v)};
    }

    /// Canonical encoding up to global phase: lexicographic minimum over the
    /// four unit multiples of the fully reduced numerators.
    std::string canonical_encoding() const {
        const ExactState red = reduced();
        std::vector<GaussianInt> cur = red.nums_;
        std::string best;
        for (int t = 0; t < 4; ++t) {
            std::string enc = std::to_string(red.k_);
            for (const auto& z : cur) {
                enc += '|';
                enc += z.re.get_str();
                enc += ',';
                enc += z.im.get_str();
            }
            if (best.empty() || enc < best) best = std::move(enc);
            for (auto& z : cur) z = z.times_i();
        }
        return best;
    }

    bool equal_up_to_phase(const ExactState& o) const {
        return canonical_encoding() == o.canonical_encoding();
    }

    /// Applies a Gaussian-integer matrix (row major, dim x dim); the result
    /// keeps this state's sqrt(2) exponent plus extra_root2.
    ExactState apply_integer_matrix(const std::vector<GaussianInt>& mat, int extra_root2) const {
        const std::size_t n = nums_.size();
        std::vector<GaussianInt> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            GaussianInt acc{0, 0};
            for (std::size_t j = 0; j < n; ++j) {
                const auto& m = mat[i * n + j];
                if (m.is_zero()) continue;
                acc = acc + m * nums_[j];
            }
            out[i] = acc;
        }
        return ExactState(std::move(out), k_ + extra_root2);
    }

  private:
    void check_norm() const {
        mpz_class s = 0;
        for (const auto& z : nums_) s += z.norm2();
        mpz_class want = 1;
        for (int i = 0; i < k_; ++i) want *= 2;
        if (s != want)
            throw Error("exact state norm " + s.get_str() + " != 2^" + std::to_string(k_));
    }

    void reduce() {
        while (k_ > 0) {
            std::vector<GaussianInt> next;
            next.reserve(nums_.size());
            bool ok = true;
            for (const auto& z : nums_) {
                auto d = z.div_one_plus_i();
                if (!d) {
                    ok = false;
                    break;
                }
                next.push_back(std::move(*d));
            }
            if (!ok) break;
            nums_ = std::move(next);
            --k_;
        }
    }

    std::vector<GaussianInt> nums_;
    int k_ = 0;
};

/// <a|b> as a Gaussian integer over sqrt(2)^(k_a + k_b).
inline std::pair<GaussianInt, int> exact_inner_product(const ExactState& a, const ExactState& b) {
    if (a.dim() != b.dim()) throw DimMismatch(a.dim(), b.dim());
    GaussianInt acc{0, 0};
    for (int i = 0; i < a.dim(); ++i)
        acc = acc + a.numerators()[i].conj() * b.numerators()[i];
    return {acc, a.root2_exp() + b.root2_exp()};
}

/// |<a|b>|^2 as an exact rational.
inline mpq_class exact_overlap_sq(const ExactState& a, const ExactState& b) {
    auto [g, k] = exact_inner_product(a, b);
    mpz_class denom = 1;
    for (int i = 0; i < k; ++i) denom *= 2;
    mpq_class q(g.norm2(), denom);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace magiclab
