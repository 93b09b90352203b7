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
#include <map>
#include <vector>

#include "magiclab/exact.hpp"
#include "magiclab/states.hpp"

namespace magiclab {

/// Two-qubit pure-state concurrence Delta = 2 |c1 c4 - c2 c3|.
inline double concurrence(const PureState& psi) {
    if (psi.dim != 4) throw DimMismatch(psi.dim, 4);
    return 2.0 * std::abs(psi.amps[0] * psi.amps[3] - psi.amps[1] * psi.amps[2]);
}

/// Delta^2 of an exact state as an exact rational.
inline mpq_class concurrence_sq_exact(const ExactState& psi) {
    if (psi.dim() != 4) throw DimMismatch(psi.dim(), 4);
    const auto& v = psi.numerators();
    const GaussianInt det = v[0] * v[3] - v[1] * v[2];
    mpz_class denom = 1;
    for (int i = 0; i < 2 * psi.root2_exp(); ++i) denom *= 2;
    mpq_class q(4 * det.norm2(), denom);
    q.canonicalize();
    return q;
}

constexpr double kOrbitConcurrenceTol = 1e-10;

/// Per-orbit concurrence (constant within each orbit, since the WH group
/// factorizes over the qubits) plus a histogram over orbits.
struct ConcurrenceProfile {
    std::vector<double> orbit_values;
    std::map<double, int> histogram;  // keyed by value rounded to 1e-9
};

inline ConcurrenceProfile orbit_concurrence_profile(
    const std::vector<std::vector<PureState>>& orbits) {
    ConcurrenceProfile out;
    for (const auto& orbit : orbits) {
        double lo = 2, hi = -1;
        for (const auto& s : orbit) {
            const double c = concurrence(s);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > kOrbitConcurrenceTol) throw NonConstantOrbit(hi - lo);
        out.orbit_values.push_back(hi);
        out.histogram[std::round(hi * 1e9) / 1e9] += 1;
    }
    return out;
}

}  // namespace magiclab
