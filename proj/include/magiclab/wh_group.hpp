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

#include <numbers>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magiclab/exact.hpp"
#include "magiclab/linalg.hpp"
#include "magiclab/states.hpp"

namespace magiclab {

/// Shift operator X |k> = |k+1 mod d>.
inline CMat shift_op(int d) {
    if (d < 2) throw InvalidDim(d);
    CMat x(d);
    for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
    return x;
}

/// Clock operator Z |k> = omega^k |k>, omega = exp(2 pi i / d).
inline CMat clock_op(int d) {
    if (d < 2) throw InvalidDim(d);
    CMat z(d);
    for (int k = 0; k < d; ++k)
        z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
    return z;
}

/// A displacement operator (or tensor product of them), with its index tuple.
struct WHOperator {
    std::vector<int> factor_dims;
    std::vector<std::pair<int, int>> index_tuple;  // one (a1, a2) per factor
    CMat matrix;

    int total_dim() const { return static_cast<int>(matrix.dim()); }
    bool is_identity_index() const {
        for (const auto& [a1, a2] : index_tuple)
            if (a1 != 0 || a2 != 0) return false;
        return true;
    }
};

/// D_{a1 a2} = omega^{a1 a2 / 2} X^{a1} Z^{a2}, with omega^{1/2} = exp(i pi / d).
/// For d = 2 this makes D_11 = i X Z = Y, i.e. the Pauli group representatives.
inline WHOperator displacement(int d, int a1, int a2) {
    if (d < 2) throw InvalidDim(d);
    if (a1 < 0 || a1 >= d || a2 < 0 || a2 >= d)
        throw IndexOutOfRange("displacement index (" + std::to_string(a1) + "," +
                              std::to_string(a2) + ") out of range for d=" + std::to_string(d));
    const cplx phase = std::polar(1.0, std::numbers::pi * a1 * a2 / d);
    CMat m = shift_op(d).pow(a1) * clock_op(d).pow(a2) * phase;
    return WHOperator{{d}, {{a1, a2}}, std::move(m)};
}

/// Phase-quotient Weyl-Heisenberg group: one representative per index tuple,
/// D^2 operators in lexicographic tuple order.
struct WHGroup {
    std::vector<int> factor_dims;
    std::vector<WHOperator> operators;

    int total_dim() const {
        int D = 1;
        for (int d : factor_dims) D *= d;
        return D;
    }
};

inline WHGroup wh_group(const std::vector<int>& factor_dims) {
    for (int d : factor_dims)
        if (d < 2) throw InvalidDim(d);
    std::vector<WHOperator> ops;
    ops.push_back(WHOperator{{}, {}, CMat::identity(1)});
    for (int d : factor_dims) {
        std::vector<WHOperator> next;
        next.reserve(ops.size() * d * d);
        for (const auto& base : ops)
            for (int a1 = 0; a1 < d; ++a1)
                for (int a2 = 0; a2 < d; ++a2) {
                    WHOperator factor = displacement(d, a1, a2);
                    WHOperator combined;
                    combined.factor_dims = base.factor_dims;
                    combined.factor_dims.push_back(d);
                    combined.index_tuple = base.index_tuple;
                    combined.index_tuple.emplace_back(a1, a2);
                    combined.matrix = CMat::kron(base.matrix, factor.matrix);
                    next.push_back(std::move(combined));
                }
        ops = std::move(next);
    }
    return WHGroup{factor_dims, std::move(ops)};
}

inline cplx expectation(const WHOperator& op, const PureState& psi) {
    if (op.total_dim() != psi.dim) throw DimMismatch(op.total_dim(), psi.dim);
    const Vec w = op.matrix.apply(psi.amps);
    cplx acc{};
    for (int i = 0; i < psi.dim; ++i) acc += std::conj(psi.amps[i]) * w[i];
    return acc;
}

/// Applies every group element to psi and deduplicates up to global phase.
/// The generating index tuple of each distinct state is recorded; ordering
/// follows the group's operator order (deterministic).
inline OrbitFamily wh_orbit(const PureState& psi, const WHGroup& group) {
    if (group.total_dim() != psi.dim) throw DimMismatch(group.total_dim(), psi.dim);
    OrbitFamily fam;
    fam.seed = psi;
    std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> seen;
    for (const auto& op : group.operators) {
        PureState out{psi.dim, op.matrix.apply(psi.amps)};
        CanonicalKey key = canonical_key(out);
        if (seen.emplace(std::move(key), fam.states.size()).second) {
            fam.states.push_back(std::move(out));
            fam.index_tuples.push_back(op.index_tuple);
        }
    }
    return fam;
}

// ---- Exact path (d = 2 factors only; entries stay Gaussian integers) ----

/// 2x2 Gaussian-integer matrix of i^{a1 a2} X^{a1} Z^{a2}.
inline std::vector<GaussianInt> exact_displacement_qubit(int a1, int a2) {
    // X^{a1} Z^{a2} maps |k> -> (-1)^{a2 k} |k + a1 mod 2>
    std::vector<GaussianInt> m(4, GaussianInt{0, 0});
    for (int k = 0; k < 2; ++k) {
        const int row = (k + a1) % 2;
        GaussianInt v{(a2 * k) % 2 == 0 ? 1 : -1, 0};
        if ((a1 * a2) % 2 != 0) v = v.times_i();
        m[row * 2 + k] = v;
    }
    return m;
}

/// Tensor product over qubit factors; tuple entries must have d = 2.
inline std::vector<GaussianInt> exact_wh_matrix(const std::vector<std::pair<int, int>>& tuple) {
    std::vector<GaussianInt> acc{GaussianInt{1, 0}};
    std::size_t n = 1;
    for (const auto& [a1, a2] : tuple) {
        const auto f = exact_displacement_qubit(a1, a2);
        std::vector<GaussianInt> next(n * 2 * n * 2, GaussianInt{0, 0});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t l = 0; l < 2; ++l)
                        next[(i * 2 + k) * (n * 2) + (j * 2 + l)] = acc[i * n + j] * f[k * 2 + l];
        acc = std::move(next);
        n *= 2;
    }
    return acc;
}

/// Exact expectation <psi|D|psi> for an n-qubit displacement, as a Gaussian
/// integer over 2^k (k = the state's sqrt(2) exponent).
inline std::pair<GaussianInt, int> exact_wh_expectation(
    const ExactState& psi, const std::vector<std::pair<int, int>>& tuple) {
    const auto mat = exact_wh_matrix(tuple);
    const auto& v = psi.numerators();
    const std::size_t n = v.size();
    GaussianInt acc{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        GaussianInt row{0, 0};
        for (std::size_t j = 0; j < n; ++j) {
            if (mat[i * n + j].is_zero()) continue;
            row = row + mat[i * n + j] * v[j];
        }
        acc = acc + v[i].conj() * row;
    }
    return {acc, 2 * psi.root2_exp()};
}

/// Exact WH orbit of an n-qubit exact state (deduplicated up to phase).
inline std::vector<ExactState> wh_orbit_exact(const ExactState& psi, int n_qubits) {
    std::vector<std::vector<std::pair<int, int>>> tuples{{}};
    for (int q = 0; q < n_qubits; ++q) {
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& t : tuples)
            for (int a1 = 0; a1 < 2; ++a1)
                for (int a2 = 0; a2 < 2; ++a2) {
                    auto tt = t;
                    tt.emplace_back(a1, a2);
                    next.push_back(std::move(tt));
                }
        tuples = std::move(next);
    }
    std::vector<ExactState> out;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& t : tuples) {
        ExactState s = psi.apply_integer_matrix(exact_wh_matrix(t), 0).reduced();
        std::string key = s.canonical_encoding();
        if (seen.emplace(std::move(key), out.size()).second) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace magiclab
