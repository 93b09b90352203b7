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

#include "magiclab/optimize.hpp"
#include "magiclab/structure.hpp"

using namespace magiclab;
using Catch::Approx;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("param_to_state", "[optimize]") {
    const PureState m = param_to_state(
        ParamPoint{{kPi / 4, kPi / 4, kPi / 4}, {kPi / 2, kPi / 2, kPi / 2}});
    REQUIRE(equal_up_to_phase(m, normalize({{0, 1}, {0, 1}, {0, 1}, {1, 0}}), 1e-12));

    const PureState e3 = param_to_state(ParamPoint{{0, 0.3, 0}, {1, 2, 3}});
    REQUIRE(std::abs(e3.amps[3] - cplx{1, 0}) < 1e-15);

    const PureState e1 = param_to_state(ParamPoint{{kPi / 2, 0, 0.7}, {0.5, 0, 1.0}});
    REQUIRE(std::abs(e1.amps[1] - cplx{1, 0}) < 1e-15);

    REQUIRE_THROWS_AS(param_to_state(ParamPoint{{-0.1, 0, 0}, {0, 0, 0}}), OutOfRange);
    REQUIRE_THROWS_AS(param_to_state(ParamPoint{{0.1, 0, 0}, {7.0, 0, 0}}), OutOfRange);
}

TEST_CASE("nelder_mead on a quadratic", "[optimize]") {
    auto quad = [](const std::vector<double>& x) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - 0.5 * i) * (x[i] - 0.5 * i);
        return s;
    };
    const NelderMeadResult res = nelder_mead(quad, {1.0, 1.0, 1.0, 1.0}, 0.4);
    REQUIRE(res.converged);
    REQUIRE(res.f < 1e-10);
    for (int i = 0; i < 4; ++i) REQUIRE(res.x[i] == Approx(0.5 * i).margin(1e-4));
}

TEST_CASE("two-qubit multistart reaches 7/16", "[optimize]") {
    const MultistartResult ms = multistart_minimize(two_qubit_objective(), 300, 42);
    REQUIRE(ms.best_value == Approx(7.0 / 16.0).margin(1e-9));
    REQUIRE(ms.n_converged + ms.n_failed == 300);
    REQUIRE(ms.n_converged > 250);
    for (const auto& rec : ms.records) REQUIRE(rec.gradient_norm < 1e-8);
}

TEST_CASE("one-qubit multistart reaches 2/3 with 8 minimizers", "[optimize]") {
    const MultistartResult ms = multistart_minimize(one_qubit_objective(), 200, 42);
    REQUIRE(ms.best_value == Approx(2.0 / 3.0).margin(1e-9));
    const CollectedMinimizers col = collect_minimizers(ms.records, 2.0 / 3.0, 1e-9);
    REQUIRE(col.family.size() == 8);
}

TEST_CASE("qudit multistart reaches 2/5", "[optimize]") {
    const MultistartResult ms = multistart_minimize(qudit4_objective(), 300, 42);
    REQUIRE(ms.best_value == Approx(0.4).margin(1e-9));
}

TEST_CASE("haar-start mode agrees with box sampling", "[optimize]") {
    const MultistartResult ms =
        multistart_minimize(one_qubit_objective(), 100, 42, StartMode::Haar);
    REQUIRE(ms.best_value == Approx(2.0 / 3.0).margin(1e-9));
    REQUIRE(collect_minimizers(ms.records, 2.0 / 3.0, 1e-9).family.size() == 8);

    // the inverse parameterization reproduces the state it came from
    const Objective obj = two_qubit_objective();
    auto rng = stream_rng(13, 0);
    for (int i = 0; i < 20; ++i) {
        const PureState psi = haar_random_state(4, rng);
        REQUIRE(equal_up_to_phase(obj.state(obj.from_state(psi)), psi, 1e-12));
    }
}

TEST_CASE("multistart is reproducible", "[optimize][property]") {
    const MultistartResult a = multistart_minimize(two_qubit_objective(), 40, 7);
    const MultistartResult b = multistart_minimize(two_qubit_objective(), 40, 7);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        REQUIRE(a.records[i].xi_value == b.records[i].xi_value);  // bit-identical
        REQUIRE(a.records[i].point == b.records[i].point);
        REQUIRE(a.records[i].basin == b.records[i].basin);
    }
    const MultistartResult c = multistart_minimize(two_qubit_objective(), 40, 8);
    bool any_diff = c.records.size() != a.records.size();
    for (std::size_t i = 0; !any_diff && i < c.records.size(); ++i)
        any_diff = !(c.records[i].point == a.records[i].point);
    REQUIRE(any_diff);
}

TEST_CASE("collected minimizers snap into the exact catalog", "[optimize]") {
    const auto magic = enumerate_maximal_magic_2q();
    const MultistartResult ms = multistart_minimize(two_qubit_objective(), 250, 42);
    const CollectedMinimizers col =
        collect_minimizers(ms.records, 7.0 / 16.0, 1e-9, magic);
    REQUIRE(col.family.size() > 50);
    REQUIRE(col.family.size() <= 480);
    for (std::size_t i = 0; i < col.family.size(); ++i) {
        REQUIRE(col.snap_index[i] >= 0);  // every minimizer is a catalog member
        REQUIRE(equal_up_to_phase(col.family.states[i],
                                  magic[col.snap_index[i]].to_pure(), 1e-12));
    }

    // snapped states are exact: their xi2 is exactly 7/16
    REQUIRE(xi2_exact(magic[col.snap_index[0]]) == mpq_class(7, 16));
}

TEST_CASE("collected one-qubit minimizers pass SIC certification", "[optimize][property]") {
    const MultistartResult ms = multistart_minimize(one_qubit_objective(), 200, 42);
    const CollectedMinimizers col = collect_minimizers(ms.records, 2.0 / 3.0, 1e-9);
    const WHGroup w2 = wh_group({2});
    for (const auto& s : col.family.states) {
        const OrbitFamily orb = wh_orbit(s, w2);
        REQUIRE(orb.size() == 4);
        REQUIRE(certify_sic(orb.states).worst_dev < 1e-9);
    }
}

TEST_CASE("collected two-qubit minimizers are WH MUB fiducials", "[optimize][property]") {
    const WHGroup w22 = wh_group({2, 2});
    const auto magic = enumerate_maximal_magic_2q();
    const MultistartResult ms = multistart_minimize(two_qubit_objective(), 60, 11);
    const CollectedMinimizers col = collect_minimizers(ms.records, 7.0 / 16.0, 1e-9, magic);
    REQUIRE(col.family.size() > 10);
    for (const auto& s : col.family.states)
        REQUIRE(certify_wh_mub_fiducial(s, w22).ok);
}

TEST_CASE("certify_isolated_minimum", "[optimize]") {
    const MinimizerRecord rec = certify_isolated_minimum(
        ParamPoint{{kPi / 4, kPi / 4, kPi / 4}, {kPi / 2, kPi / 2, kPi / 2}});
    REQUIRE(rec.xi_value == Approx(7.0 / 16.0).margin(1e-12));
    REQUIRE(rec.gradient_norm < 1e-8);
    REQUIRE(rec.hessian_min_eigen == Approx(0.25).margin(1e-4));

    // the stabilizer point (1,1,1,1)/2 is a maximum, not a minimum
    REQUIRE_THROWS_AS(
        certify_isolated_minimum(ParamPoint{{kPi / 4, kPi / 4, kPi / 4}, {0, 0, 0}}),
        NotAMinimum);

    // a generic non-stationary point fails on the gradient
    try {
        certify_isolated_minimum(ParamPoint{{0.3, 0.7, 1.1}, {0.2, 1.3, 2.4}});
        FAIL("expected NotAMinimum");
    } catch (const NotAMinimum& e) {
        REQUIRE(e.gradient_norm >= 1e-8);
    }
}

// Full-coverage sweep of all 480 minimizers; slow, run explicitly via
// [.extended].
TEST_CASE("extended: the scan recovers all 480 maximal-magic states", "[.][extended]") {
    const auto magic = enumerate_maximal_magic_2q();
    const MultistartResult ms = multistart_minimize(two_qubit_objective(), 100000, 42);
    const CollectedMinimizers col =
        collect_minimizers(ms.records, 7.0 / 16.0, 1e-9, magic);
    REQUIRE(col.family.size() == 480);
    for (int snap : col.snap_index) REQUIRE(snap >= 0);
}

TEST_CASE("extended: the qudit scan recovers all 256 fiducials in 16 SICs", "[.][extended]") {
    const MultistartResult ms = multistart_minimize(qudit4_objective(), 20000, 42);
    const CollectedMinimizers col = collect_minimizers(ms.records, 0.4, 1e-9);
    REQUIRE(col.family.size() == 256);
    const WHGroup w4 = wh_group({4});
    const auto orbits = partition_by_wh_orbit(col.family.states, w4, 1e-6);
    REQUIRE(orbits.size() == 16);
    for (const auto& orb : orbits) {
        REQUIRE(orb.states.size() == 16);
        REQUIRE(certify_sic(orb.states).ok);
    }
}
