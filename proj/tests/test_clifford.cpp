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
#include <unordered_set>

#include "magiclab/clifford.hpp"
#include "magiclab/magic.hpp"

using namespace magiclab;
using Catch::Approx;

TEST_CASE("standard gate sets", "[clifford]") {
    const auto g1 = standard_gates(1);
    REQUIRE(g1.size() == 3);  // H, S, T
    const auto g2 = standard_gates(2);
    REQUIRE(g2.size() == 8);  // 2H + 2S + 2T + 2CNOT
    REQUIRE_THROWS_AS(standard_gates(3), UnsupportedArity);
    REQUIRE_THROWS_AS(standard_gates(0), UnsupportedArity);

    // S^2 = Z
    const Gate s = make_gate(Gate::Kind::S, 0, 1);
    REQUIRE(CMat::max_abs_diff(s.matrix * s.matrix, clock_op(2)) < 1e-15);

    const Gate h = make_gate(Gate::Kind::H, 0, 1);
    REQUIRE(h.matrix(0, 0).real() == Approx(1 / std::numbers::sqrt2));
    REQUIRE(h.matrix(1, 1).real() == Approx(-1 / std::numbers::sqrt2));

    const Gate t = make_gate(Gate::Kind::T, 0, 1);
    REQUIRE_FALSE(t.clifford);
    REQUIRE(std::abs(t.matrix(1, 1) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("apply_circuit runs gates in sequence order", "[clifford]") {
    const PureState psi = normalize({{1, 0}, {0, 0}, {0, 0}, {0, 0}});
    REQUIRE(equal_up_to_phase(apply_circuit(psi, {}), psi, 1e-15));

    // H on qubit 0 of |00>: (1,0,1,0)/sqrt(2)
    const PureState h0 = apply_circuit(psi, {make_gate(Gate::Kind::H, 0, 2)});
    REQUIRE(h0.amps[0].real() == Approx(1 / std::numbers::sqrt2));
    REQUIRE(h0.amps[2].real() == Approx(1 / std::numbers::sqrt2));
    REQUIRE(std::abs(h0.amps[1]) < 1e-15);

    REQUIRE_THROWS_AS(apply_circuit(normalize({{1, 0}, {0, 0}}),
                                    {make_gate(Gate::Kind::H, 0, 2)}),
                      DimMismatch);
}

TEST_CASE("the T-CNOT-T circuit creates a maximal magic state", "[clifford]") {
    const std::vector<Gate> circ{make_gate(Gate::Kind::T, 0, 2),
                                 make_gate(Gate::Kind::T, 1, 2),
                                 make_gate(Gate::Kind::CNOT, 0, 2, 1),
                                 make_gate(Gate::Kind::T, 1, 2)};
    const PureState in = normalize({{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    const PureState want = normalize({{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    REQUIRE(equal_up_to_phase(apply_circuit(in, circ), want, 1e-12));
}

TEST_CASE("is_clifford distinguishes T", "[clifford]") {
    const WHGroup w22 = wh_group({2, 2});
    REQUIRE(is_clifford(make_gate(Gate::Kind::H, 0, 2), w22));
    REQUIRE(is_clifford(make_gate(Gate::Kind::S, 1, 2), w22));
    REQUIRE(is_clifford(make_gate(Gate::Kind::CNOT, 0, 2, 1), w22));
    REQUIRE_FALSE(is_clifford(make_gate(Gate::Kind::T, 0, 2), w22));

    Gate id;
    id.name = "I";
    id.kind = Gate::Kind::S;
    id.n_qubits = 2;
    id.matrix = CMat::identity(4);
    REQUIRE(is_clifford(id, w22));

    const WHGroup w2 = wh_group({2});
    REQUIRE(is_clifford(make_gate(Gate::Kind::H, 0, 1), w2));
    REQUIRE_FALSE(is_clifford(make_gate(Gate::Kind::T, 0, 1), w2));
}

TEST_CASE("orbit sizes: 480 magic, 60 stabilizer, 8 single-qubit fiducials", "[clifford]") {
    const ExactState mlex({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    REQUIRE(clifford_orbit_exact(mlex, 2).size() == 480);

    const ExactState e0({{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0);
    REQUIRE(clifford_orbit_exact(e0, 2).size() == 60);

    const double s2 = std::numbers::sqrt2;
    const PureState fid = normalize({{std::sqrt(6.0) + s2, 0}, {s2, -s2}});
    REQUIRE(clifford_orbit(fid, clifford_generators(1)).size() == 8);
}

TEST_CASE("float and exact orbits agree", "[clifford]") {
    const PureState mlex = normalize({{0, 1}, {0, 1}, {0, 1}, {1, 0}});
    const OrbitFamily fam = clifford_orbit(mlex, clifford_generators(2));
    REQUIRE(fam.size() == 480);
    REQUIRE(fam.generators.size() == 6);
}

TEST_CASE("orbit generators must exclude T", "[clifford]") {
    const PureState e0 = normalize({{1, 0}, {0, 0}, {0, 0}, {0, 0}});
    REQUIRE_THROWS_AS(clifford_orbit(e0, standard_gates(2)), Error);
}

TEST_CASE("orbit overflow cap", "[clifford]") {
    const PureState mlex = normalize({{0, 1}, {0, 1}, {0, 1}, {1, 0}});
    REQUIRE_THROWS_AS(clifford_orbit(mlex, clifford_generators(2), 100), OrbitOverflow);
    const ExactState m({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    REQUIRE_THROWS_AS(clifford_orbit_exact(m, 2, 100), OrbitOverflow);
}

TEST_CASE("the 480-orbit is closed under every generator", "[clifford][property]") {
    const ExactState mlex({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    const auto orbit = clifford_orbit_exact(mlex, 2);
    std::unordered_set<std::string> keys;
    for (const auto& s : orbit) keys.insert(s.canonical_encoding());
    for (const auto& s : orbit)
        for (const auto& g : clifford_generators(2))
            REQUIRE(keys.count(exact_apply_gate(s, g).canonical_encoding()) == 1);
}

TEST_CASE("xi2 is constant on the orbits", "[clifford][property]") {
    const WHGroup w22 = wh_group({2, 2});
    const ExactState mlex({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    for (const auto& s : clifford_orbit_exact(mlex, 2))
        REQUIRE(xi(2, s.to_pure(), w22) == Approx(7.0 / 16.0).margin(1e-11));
    const ExactState e0({{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0);
    for (const auto& s : clifford_orbit_exact(e0, 2))
        REQUIRE(xi(2, s.to_pure(), w22) == Approx(1.0).margin(1e-11));
}

TEST_CASE("orbit sizes are generator-set independent", "[clifford][property]") {
    // dropping the redundant CNOT10 must not change the generated group
    std::vector<Gate> gens;
    for (const auto& g : clifford_generators(2))
        if (g.name != "CNOT10") gens.push_back(g);
    REQUIRE(gens.size() == 5);
    const PureState mlex = normalize({{0, 1}, {0, 1}, {0, 1}, {1, 0}});
    REQUIRE(clifford_orbit(mlex, gens).size() == 480);
    const PureState e0 = normalize({{1, 0}, {0, 0}, {0, 0}, {0, 0}});
    REQUIRE(clifford_orbit(e0, gens).size() == 60);
}
