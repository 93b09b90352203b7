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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "magiclab/errors.hpp"
#include "magiclab/linalg.hpp"

namespace magiclab {

/// A pure state: unit-norm complex amplitude vector of dimension d.
/// Construct through normalize() (or from data known to be unit norm).
struct PureState {
    int dim = 0;
    Vec amps;

    double norm() const {
        double s = 0;
        for (const auto& c : amps) s += std::norm(c);
        return std::sqrt(s);
    }
};

constexpr double kZeroThreshold = 1e-14;
constexpr double kPivotThreshold = 1e-8;
constexpr double kKeyResolution = 1e-8;

/// Scales a raw amplitude vector to unit norm. Direction is preserved.
inline PureState normalize(const Vec& raw) {
    double s = 0;
    bool nonzero = false;
    for (const auto& c : raw) {
        s += std::norm(c);
        if (std::abs(c) >= kZeroThreshold) nonzero = true;
    }
    if (!nonzero) throw ZeroVector{};
    const double inv = 1.0 / std::sqrt(s);
    PureState out{static_cast<int>(raw.size()), raw};
    for (auto& c : out.amps) c *= inv;
    return out;
}

/// <a|b> with conjugation on the first argument.
inline cplx inner_product(const PureState& a, const PureState& b) {
    if (a.dim != b.dim) throw DimMismatch(a.dim, b.dim);
    cplx acc{};
    for (int k = 0; k < a.dim; ++k) acc += std::conj(a.amps[k]) * b.amps[k];
    return acc;
}

/// True iff min over phi of ||a - e^{i phi} b|| <= tol. The closed form
/// min-distance^2 = 2 (1 - |<a|b>|) rejects clear mismatches in one pass;
/// near the boundary (and for tol below the overlap's rounding floor ~1e-8)
/// the minimum distance is evaluated directly at the optimal phase, which
/// doubles resolve to ~1e-15.
inline bool equal_up_to_phase(const PureState& a, const PureState& b, double tol) {
    const cplx z = inner_product(a, b);
    const double az = std::abs(z);
    if (az < 1.0 - tol * tol / 2.0 - 1e-14) return false;
    const cplx phase = az > 0 ? std::conj(z) / az : cplx{1, 0};
    double dist2 = 0;
    for (int k = 0; k < a.dim; ++k) dist2 += std::norm(a.amps[k] - phase * b.amps[k]);
    return std::sqrt(dist2) <= tol;
}

/// Phase-canonical quantized fingerprint of a state. Two states equal up to a
/// global phase produce identical keys; the quantization grid is 1e-8, an
/// order of magnitude below the minimum separation of the catalogs this is
/// used to deduplicate.
struct CanonicalKey {
    std::vector<std::pair<std::int64_t, std::int64_t>> q;

    bool operator==(const CanonicalKey& o) const { return q == o.q; }
    bool operator<(const CanonicalKey& o) const { return q < o.q; }
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& [re, im] : k.q) {
            h = (h ^ static_cast<std::uint64_t>(re)) * 1099511628211ull;
            h = (h ^ static_cast<std::uint64_t>(im)) * 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// The pivot is the first amplitude with magnitude above 1e-8 (not the
/// largest): stable under tiny perturbations of non-pivot entries. It is
/// rotated to be real and positive before quantization.
inline CanonicalKey canonical_key(const PureState& a) {
    int pivot = -1;
    for (int k = 0; k < a.dim; ++k)
        if (std::abs(a.amps[k]) > kPivotThreshold) {
            pivot = k;
            break;
        }
    if (pivot < 0) throw ZeroVector{};
    const cplx phase = std::conj(a.amps[pivot]) / std::abs(a.amps[pivot]);
    CanonicalKey key;
    key.q.reserve(a.dim);
    for (int k = 0; k < a.dim; ++k) {
        const cplx z = a.amps[k] * phase;
        key.q.emplace_back(std::llround(z.real() / kKeyResolution),
                           std::llround(z.imag() / kKeyResolution));
    }
    return key;
}

/// Haar-random pure state (normalized complex Gaussian vector).
inline PureState haar_random_state(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(dim);
    for (auto& c : v) c = {g(rng), g(rng)};
    return normalize(v);
}

/// Derives an independent, reproducible stream for (seed, index) pairs.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return std::mt19937_64(z ^ (z >> 31));
}

/// A deduplicated set of states closed under some group action.
struct OrbitFamily {
    PureState seed;
    std::vector<PureState> states;
    // For WH orbits: the displacement index tuple that generated each state.
    std::vector<std::vector<std::pair<int, int>>> index_tuples;
    // For Clifford orbits: labels of the generating gate set.
    std::vector<std::string> generators;

    std::size_t size() const { return states.size(); }
};

}  // namespace magiclab
