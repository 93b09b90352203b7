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

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "magiclab/entanglement.hpp"
#include "magiclab/structure.hpp"

using namespace magiclab;
using Catch::Approx;

TEST_CASE("concurrence on known states", "[entanglement]") {
    REQUIRE(concurrence(normalize({{1, 0}, {0, 0}, {0, 0}, {0, 0}})) ==
            Approx(0.0).margin(1e-14));
    REQUIRE(concurrence(normalize({{1, 0}, {0, 0}, {0, 0}, {1, 0}})) ==
            Approx(1.0).margin(1e-14));
    // (0, i, -i, 1+i)/2
    REQUIRE(concurrence(normalize({{0, 0}, {0, 1}, {0, -1}, {1, 1}})) ==
            Approx(0.5).margin(1e-14));
    // (1, -1, -1, i)/2
    REQUIRE(concurrence(normalize({{1, 0}, {-1, 0}, {-1, 0}, {0, 1}})) ==
            Approx(1 / std::numbers::sqrt2).margin(1e-14));

    REQUIRE_THROWS_AS(concurrence(normalize({{1, 0}, {0, 0}})), DimMismatch);
}

TEST_CASE("exact concurrence squared", "[entanglement][exact]") {
    const ExactState e0({{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0);
    REQUIRE(concurrence_sq_exact(e0) == 0);

    const ExactState bell({{1, 0}, {0, 0}, {0, 0}, {1, 0}}, 1);
    REQUIRE(concurrence_sq_exact(bell) == 1);

    const ExactState eq20 = ExactState::over_integer_denominator(
        {{0, 0}, {0, 1}, {0, -1}, {1, 1}}, 2);
    REQUIRE(concurrence_sq_exact(eq20) == mpq_class(1, 4));

    const ExactState fid = ExactState::over_integer_denominator(
        {{1, 0}, {-1, 0}, {-1, 0}, {0, 1}}, 2);
    REQUIRE(concurrence_sq_exact(fid) == mpq_class(1, 2));
}

TEST_CASE("concurrence is WH invariant", "[entanglement][property]") {
    const WHGroup w22 = wh_group({2, 2});
    auto rng = stream_rng(43, 0);
    for (int i = 0; i < 100; ++i) {
        const PureState psi = haar_random_state(4, rng);
        const double c0 = concurrence(psi);
        for (const auto& op : w22.operators)
            REQUIRE(concurrence(normalize(op.matrix.apply(psi.amps))) ==
                    Approx(c0).margin(1e-12));
    }
}

TEST_CASE("orbit concurrence profile of the catalogs", "[entanglement]") {
    const auto stab = enumerate_stabilizers_2q();
    const auto magic = enumerate_maximal_magic_2q();

    auto orbit_states = [](const std::vector<ExactState>& states,
                           const std::vector<std::vector<int>>& orbits) {
        std::vector<std::vector<PureState>> out;
        for (const auto& o : orbits) {
            out.emplace_back();
            for (int i : o) out.back().push_back(states[i].to_pure());
        }
        return out;
    };
    const auto stab_orbits = orbit_states(stab, partition_by_wh_orbit_exact(stab, 2));
    const auto magic_orbits = orbit_states(magic, partition_by_wh_orbit_exact(magic, 2));

    const ConcurrenceProfile sp = orbit_concurrence_profile(stab_orbits);
    REQUIRE(sp.orbit_values.size() == 15);
    REQUIRE(sp.histogram.at(0.0) == 9);
    REQUIRE(sp.histogram.at(1.0) == 6);

    const ConcurrenceProfile mp = orbit_concurrence_profile(magic_orbits);
    REQUIRE(mp.orbit_values.size() == 30);
    REQUIRE(mp.histogram.size() == 2);
    const double inv_sqrt2 = std::round(1e9 / std::numbers::sqrt2) / 1e9;
    REQUIRE(mp.histogram.at(0.5) == 12);
    REQUIRE(mp.histogram.at(inv_sqrt2) == 18);

    // no maximal-magic state is maximally entangled
    double max_magic_conc = 0;
    for (const auto& orbit : magic_orbits)
        for (const auto& s : orbit) max_magic_conc = std::max(max_magic_conc, concurrence(s));
    REQUIRE(max_magic_conc == Approx(1 / std::numbers::sqrt2).margin(1e-12));
}

TEST_CASE("profile rejects non-constant orbits", "[entanglement]") {
    const std::vector<std::vector<PureState>> fake{
        {normalize({{1, 0}, {0, 0}, {0, 0}, {0, 0}}),    // concurrence 0
         normalize({{1, 0}, {0, 0}, {0, 0}, {1, 0}})}};  // concurrence 1
    REQUIRE_THROWS_AS(orbit_concurrence_profile(fake), NonConstantOrbit);
}
