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

#include <deque>
#include <numbers>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "magiclab/exact.hpp"
#include "magiclab/linalg.hpp"
#include "magiclab/states.hpp"
#include "magiclab/wh_group.hpp"

namespace magiclab {

/// A gate acting on an n-qubit register, stored as its full-dimension matrix
/// plus enough structure to act exactly on ExactState (H/S/CNOT only).
struct Gate {
    enum class Kind { H, S, T, CNOT };

    std::string name;
    Kind kind;
    int q0 = 0;   // acted qubit (control for CNOT)
    int q1 = -1;  // target for CNOT
    int n_qubits = 1;
    CMat matrix;
    bool clifford = true;
};

namespace detail {

inline CMat embed_1q(const CMat& u, int qubit, int n) {
    CMat out = CMat::identity(1);
    for (int q = 0; q < n; ++q)
        out = CMat::kron(out, q == qubit ? u : CMat::identity(2));
    return out;
}

inline CMat cnot_matrix(int control, int target, int n) {
    const int dim = 1 << n;
    CMat m(dim);
    for (int i = 0; i < dim; ++i) {
        // leftmost tensor factor is qubit 0
        const int cbit = (i >> (n - 1 - control)) & 1;
        const int j = cbit ? i ^ (1 << (n - 1 - target)) : i;
        m(j, i) = 1.0;
    }
    return m;
}

inline CMat h_1q() {
    CMat h(2);
    const double r = 1.0 / std::numbers::sqrt2;
    h(0, 0) = r;
    h(0, 1) = r;
    h(1, 0) = r;
    h(1, 1) = -r;
    return h;
}

inline CMat s_1q() {
    CMat s(2);
    s(0, 0) = 1.0;
    s(1, 1) = cplx{0, 1};
    return s;
}

inline CMat t_1q() {
    CMat t(2);
    t(0, 0) = 1.0;
    t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
    return t;
}

}  // namespace detail

inline Gate make_gate(Gate::Kind kind, int q0, int n, int q1 = -1) {
    Gate g;
    g.kind = kind;
    g.q0 = q0;
    g.q1 = q1;
    g.n_qubits = n;
    switch (kind) {
        case Gate::Kind::H:
            g.name = n == 1 ? "H" : "H" + std::to_string(q0);
            g.matrix = detail::embed_1q(detail::h_1q(), q0, n);
            break;
        case Gate::Kind::S:
            g.name = n == 1 ? "S" : "S" + std::to_string(q0);
            g.matrix = detail::embed_1q(detail::s_1q(), q0, n);
            break;
        case Gate::Kind::T:
            g.name = n == 1 ? "T" : "T" + std::to_string(q0);
            g.matrix = detail::embed_1q(detail::t_1q(), q0, n);
            g.clifford = false;
            break;
        case Gate::Kind::CNOT:
            g.name = "CNOT" + std::to_string(q0) + std::to_string(q1);
            g.matrix = detail::cnot_matrix(q0, q1, n);
            break;
    }
    return g;
}

/// The conventional gate set: {H, S, T} per qubit plus both CNOTs for n = 2.
inline std::vector<Gate> standard_gates(int n) {
    if (n != 1 && n != 2) throw UnsupportedArity(n);
    std::vector<Gate> gates;
    for (int q = 0; q < n; ++q) gates.push_back(make_gate(Gate::Kind::H, q, n));
    for (int q = 0; q < n; ++q) gates.push_back(make_gate(Gate::Kind::S, q, n));
    for (int q = 0; q < n; ++q) gates.push_back(make_gate(Gate::Kind::T, q, n));
    if (n == 2) {
        gates.push_back(make_gate(Gate::Kind::CNOT, 0, n, 1));
        gates.push_back(make_gate(Gate::Kind::CNOT, 1, n, 0));
    }
    return gates;
}

/// Clifford generators only (the standard set minus T).
inline std::vector<Gate> clifford_generators(int n) {
    std::vector<Gate> gates;
    for (const auto& g : standard_gates(n))
        if (g.clifford) gates.push_back(g);
    return gates;
}

/// Applies gates in sequence order (first element acts first).
inline PureState apply_circuit(const PureState& psi, const std::vector<Gate>& gates) {
    Vec v = psi.amps;
    for (const auto& g : gates) {
        if (static_cast<int>(g.matrix.dim()) != psi.dim)
            throw DimMismatch(g.matrix.dim(), psi.dim);
        v = g.matrix.apply(v);
    }
    return normalize(v);
}

/// True iff g O g^dagger is proportional (unit modulus factor) to some group
/// representative for every representative O.
inline bool is_clifford(const Gate& gate, const WHGroup& group) {
    if (static_cast<int>(gate.matrix.dim()) != group.total_dim())
        throw DimMismatch(gate.matrix.dim(), group.total_dim());
    const CMat gdag = gate.matrix.adjoint();
    for (const auto& op : group.operators) {
        const CMat conj = gate.matrix * op.matrix * gdag;
        bool found = false;
        for (const auto& cand : group.operators) {
            const cplx t = CMat::adjoint_trace(cand.matrix, conj) /
                           static_cast<double>(group.total_dim());
            if (std::abs(std::abs(t) - 1.0) < 1e-10 &&
                CMat::max_abs_diff(conj, cand.matrix * t) < 1e-10) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

constexpr std::size_t kDefaultOrbitCap = 1000000;

/// Breadth-first closure of a seed state under a gate set, deduplicated up to
/// global phase, in deterministic discovery order.
inline OrbitFamily clifford_orbit(const PureState& seed, const std::vector<Gate>& generators,
                                  std::size_t cap = kDefaultOrbitCap) {
    for (const auto& g : generators)
        if (!g.clifford)
            throw Error("orbit generators must be Clifford gates; got " + g.name);
    OrbitFamily fam;
    fam.seed = seed;
    for (const auto& g : generators) fam.generators.push_back(g.name);
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    seen.insert(canonical_key(seed));
    fam.states.push_back(seed);
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            PureState next{seed.dim, g.matrix.apply(fam.states[idx].amps)};
            if (seen.insert(canonical_key(next)).second) {
                if (fam.states.size() >= cap) throw OrbitOverflow(cap);
                fam.states.push_back(std::move(next));
                frontier.push_back(fam.states.size() - 1);
            }
        }
    }
    return fam;
}

// ---- Exact Clifford action ----

/// H on qubit q of an n-qubit exact state: sums/differences of numerator
/// pairs with the sqrt(2) exponent raised by one.
inline ExactState exact_apply_h(const ExactState& s, int q, int n) {
    const auto& v = s.numerators();
    const int stride = 1 << (n - 1 - q);
    std::vector<GaussianInt> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (static_cast<int>(i) & stride)
            w[i] = v[i ^ stride] - v[i];
        else
            w[i] = v[i] + v[i ^ stride];
    }
    return ExactState(std::move(w), s.root2_exp() + 1);
}

inline ExactState exact_apply_s(const ExactState& s, int q, int n) {
    const auto& v = s.numerators();
    const int stride = 1 << (n - 1 - q);
    std::vector<GaussianInt> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = (static_cast<int>(i) & stride) ? v[i].times_i() : v[i];
    return ExactState(std::move(w), s.root2_exp());
}

inline ExactState exact_apply_cnot(const ExactState& s, int control, int target, int n) {
    const auto& v = s.numerators();
    const int cstride = 1 << (n - 1 - control);
    const int tstride = 1 << (n - 1 - target);
    std::vector<GaussianInt> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t src = (static_cast<int>(i) & cstride) ? (i ^ tstride) : i;
        w[i] = v[src];
    }
    return ExactState(std::move(w), s.root2_exp());
}

inline ExactState exact_apply_gate(const ExactState& s, const Gate& g) {
    switch (g.kind) {
        case Gate::Kind::H:
            return exact_apply_h(s, g.q0, g.n_qubits);
        case Gate::Kind::S:
            return exact_apply_s(s, g.q0, g.n_qubits);
        case Gate::Kind::CNOT:
            return exact_apply_cnot(s, g.q0, g.q1, g.n_qubits);
        case Gate::Kind::T:
            break;
    }
    throw Error("gate " + g.name + " has no exact action");
}

/// Exact BFS Clifford orbit; counts are exact integers, immune to tolerance
/// tuning. Discovery order is deterministic.
inline std::vector<ExactState> clifford_orbit_exact(const ExactState& seed, int n_qubits,
                                                    std::size_t cap = kDefaultOrbitCap) {
    const auto generators = clifford_generators(n_qubits);
    std::vector<ExactState> states{seed.reduced()};
    std::unordered_set<std::string> seen{seed.canonical_encoding()};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            ExactState next = exact_apply_gate(states[idx], g).reduced();
            if (seen.insert(next.canonical_encoding()).second) {
                if (states.size() >= cap) throw OrbitOverflow(cap);
                states.push_back(std::move(next));
                frontier.push_back(states.size() - 1);
            }
        }
    }
    return states;
}

}  // namespace magiclab
