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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "magiclab/claims.hpp"
#include "magiclab/io.hpp"

using namespace magiclab;
using Catch::Approx;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / "magiclab_cli_out.txt";
    const std::string cmd =
        std::string(MAGICLAB_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return RunResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, text};
}

fs::path write_state(const std::string& name, const json& j) {
    const fs::path p = fs::temp_directory_path() / name;
    write_json_file(p.string(), j);
    return p;
}

json mlex_json() {
    const ExactState mlex({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    return state_to_json(mlex);
}

}  // namespace

TEST_CASE("state json round trip", "[io]") {
    const PureState psi = normalize({{0.3, 0.1}, {0.2, -0.7}, {0, 0}, {0.55, 0.1}});
    const PureState back = state_from_json(state_to_json(psi));
    for (int i = 0; i < 4; ++i) REQUIRE(std::abs(psi.amps[i] - back.amps[i]) < 1e-15);

    const json j = mlex_json();
    REQUIRE(j.at("denominator") == 2);
    const auto exact = exact_state_from_json(j);
    REQUIRE(exact.has_value());
    REQUIRE(exact->equal_up_to_phase(ExactState({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2)));

    REQUIRE_FALSE(exact_state_from_json(state_to_json(psi)).has_value());
    REQUIRE_THROWS_AS(state_from_json(json{{"dim", 4}}), Error);
}

TEST_CASE("circuit json parsing", "[io]") {
    const json circ = json::array({{{"gate", "T"}, {"qubit", 0}},
                                   {{"gate", "T"}, {"qubit", 1}},
                                   {{"gate", "CNOT"}, {"control", 0}, {"target", 1}},
                                   {{"gate", "T"}, {"qubit", 1}}});
    const auto gates = circuit_from_json(circ, 2);
    REQUIRE(gates.size() == 4);
    const PureState in = normalize({{1, 0}, {1, 0}, {1, 0}, {1, 0}});
    const PureState want = normalize({{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    REQUIRE(equal_up_to_phase(apply_circuit(in, gates), want, 1e-12));

    REQUIRE_THROWS_AS(circuit_from_json(json::array({{{"gate", "Q"}, {"qubit", 0}}}), 2),
                      Error);
    REQUIRE_THROWS_AS(circuit_from_json(json::array({{{"gate", "H"}, {"qubit", 5}}}), 2),
                      Error);
}

TEST_CASE("cli sre", "[cli]") {
    const fs::path state = write_state("mlex.json", mlex_json());
    const RunResult r = run_cli("sre --state " + state.string() + " --alpha 2");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.output);
    REQUIRE(out.at("xi").get<double>() == Approx(7.0 / 16.0).margin(1e-12));
    REQUIRE(out.at("m").get<double>() == Approx(std::log(16.0 / 7.0)).margin(1e-12));

    const RunResult ex = run_cli("sre --state " + state.string() + " --exact");
    REQUIRE(ex.exit_code == 0);
    REQUIRE(json::parse(ex.output).at("xi").get<std::string>() == "7/16");
}

TEST_CASE("cli orbit and wh-orbit", "[cli]") {
    const fs::path state = write_state("mlex.json", mlex_json());
    const fs::path out = fs::temp_directory_path() / "orbit.json";

    RunResult r = run_cli("orbit --seed " + state.string() + " --gates clifford --out " +
                          out.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(read_json_file(out.string()).at("orbit_size") == 480);

    r = run_cli("wh-orbit --state " + state.string() + " --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const json wh = read_json_file(out.string());
    REQUIRE(wh.at("orbit_size") == 16);
    REQUIRE(wh.at("index_tuples").size() == 16);

    // a circuit file also works as the generator set, if it is Clifford-only
    const fs::path circ = write_state(
        "gens.json", json::array({{{"gate", "H"}, {"qubit", 0}},
                                  {{"gate", "S"}, {"qubit", 0}},
                                  {{"gate", "H"}, {"qubit", 1}},
                                  {{"gate", "S"}, {"qubit", 1}},
                                  {{"gate", "CNOT"}, {"control", 0}, {"target", 1}}}));
    r = run_cli("orbit --seed " + state.string() + " --gates " + circ.string() + " --out " +
                out.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(read_json_file(out.string()).at("orbit_size") == 480);
}

TEST_CASE("cli search", "[cli]") {
    const fs::path out = fs::temp_directory_path() / "search.json";
    const RunResult r =
        run_cli("--seed 42 search --dim 2 --starts 60 --out " + out.string());
    REQUIRE(r.exit_code == 0);
    const json j = read_json_file(out.string());
    REQUIRE(j.at("global_min").get<double>() == Approx(2.0 / 3.0).margin(1e-9));
    REQUIRE(j.at("n_distinct_minimizers").get<int>() >= 4);
}

TEST_CASE("cli catalog, structure, concurrence", "[cli]") {
    const fs::path dir = fs::temp_directory_path() / "magiclab_cli_catalog";
    fs::remove_all(dir);

    RunResult r = run_cli("catalog build --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(fs::exists(dir / "stabilizers.jsonl"));
    REQUIRE(fs::exists(dir / "magic2q.jsonl"));
    REQUIRE(fs::exists(dir / "pairings.json"));

    const fs::path state = write_state("fig1.json", state_to_json(ExactState(
        {{1, 0}, {0, 1}, {0, 1}, {0, 1}}, 2)));
    r = run_cli("catalog lookup --state " + state.string() + " --catalog " + dir.string());
    REQUIRE(r.exit_code == 0);
    json hit = json::parse(r.output);
    REQUIRE(hit.at("found") == true);
    REQUIRE(hit.at("kind") == "magic2q");
    REQUIRE(hit.at("xi2_exact") == "7/16");

    const fs::path report = fs::temp_directory_path() / "structure.json";
    r = run_cli("structure --catalog " + dir.string() + " --report " + report.string());
    REQUIRE(r.exit_code == 0);
    const json rep = read_json_file(report.string());
    REQUIRE(rep.at("stab_orbits") == 15);
    REQUIRE(rep.at("magic_orbits") == 30);
    REQUIRE(rep.at("families_of_5") == 30);
    REQUIRE(rep.at("stab_families_of_5") == 0);
    REQUIRE(rep.at("stab_complete_mub_families") == 6);
    REQUIRE(rep.at("pairings").size() == 30);

    r = run_cli("concurrence --profile --catalog " + dir.string());
    REQUIRE(r.exit_code == 0);
    const json prof = json::parse(r.output);
    REQUIRE(prof.at("stabilizer").at("0") == 9);
    REQUIRE(prof.at("stabilizer").at("1") == 6);
    REQUIRE(prof.at("magic2q").at("0.5") == 12);

    r = run_cli("concurrence --state " + state.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(json::parse(r.output).at("concurrence").get<double>() ==
            Approx(1 / std::numbers::sqrt2).margin(1e-12));

    fs::remove_all(dir);
}

TEST_CASE("cli verify-claims exit code reflects the known-failing claim", "[cli]") {
    const fs::path out = fs::temp_directory_path() / "claims.json";
    const RunResult r = run_cli("--json verify-claims --starts 200 --out " + out.string());
    REQUIRE(r.exit_code == 1);  // claim 04d is red by design
    const json arr = read_json_file(out.string());
    int failed = 0;
    for (const auto& c : arr)
        if (!c.at("pass").get<bool>()) ++failed;
    REQUIRE(failed == 1);
    bool found = false;
    for (const auto& c : arr)
        if (c.at("claimId") == "04d-stabilizer-three-families") {
            found = true;
            REQUIRE_FALSE(c.at("pass").get<bool>());
        }
    REQUIRE(found);
}

TEST_CASE("verify_claims is deterministic for fixed seed and starts", "[cli]") {
    ClaimConfig cfg;
    cfg.starts_2q = 60;
    cfg.starts_1q = 60;
    cfg.starts_qudit = 60;
    const auto a = verify_claims(cfg);
    const auto b = verify_claims(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].claim_id == b[i].claim_id);
        REQUIRE(a[i].pass == b[i].pass);
        REQUIRE(a[i].computed.dump() == b[i].computed.dump());
    }
}

TEST_CASE("cli usage errors exit with 2", "[cli]") {
    REQUIRE(run_cli("sre --state missing.json --bogus-flag").exit_code == 2);
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("no-such-command").exit_code == 2);
}
