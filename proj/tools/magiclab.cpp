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

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magiclab/magiclab.hpp"

namespace {

using namespace magiclab;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out_path, j);
}

int cmd_sre(const std::string& state_path, double alpha, bool exact) {
    const json j = read_json_file(state_path);
    const PureState psi = state_from_json(j);
    json out;
    out["alpha"] = alpha;
    if (exact) {
        const auto es = exact_state_from_json(j);
        if (!es) throw Error("--exact requires 'gaussian_numerators' and 'denominator'");
        if (alpha != 2.0) throw InvalidAlpha(alpha);
        const mpq_class x = xi2_exact(*es);
        out["xi"] = rational_str(x);
        out["m"] = -std::log(x.get_d());
    } else {
        std::vector<int> factors;
        for (int d = psi.dim; d > 1; d /= 2) factors.push_back(2);
        if ((1 << factors.size()) != psi.dim) factors = {psi.dim};
        const SreValue v = sre(alpha, psi, wh_group(factors));
        out["xi"] = v.xi;
        out["m"] = v.m;
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_search(int dim, const std::string& mode, int starts, std::uint64_t seed,
               bool haar_starts, const std::string& out_path) {
    if (dim != 2 && dim != 4) throw UsageError("--dim must be 2 or 4");
    Objective obj;
    if (dim == 2)
        obj = one_qubit_objective();
    else if (mode == "two-qubit")
        obj = two_qubit_objective();
    else if (mode == "qudit")
        obj = qudit4_objective();
    else
        throw UsageError("--mode must be two-qubit or qudit");
    const MultistartResult ms = multistart_minimize(
        obj, starts, seed, haar_starts ? StartMode::Haar : StartMode::Box);
    const CollectedMinimizers col = collect_minimizers(ms.records, ms.best_value, 1e-9);

    // distinct-minimizer count as a function of spent starts
    json coverage = json::array();
    for (int frac = 1; frac <= 4; ++frac) {
        const auto upto = static_cast<std::ptrdiff_t>(ms.records.size()) * frac / 4;
        const std::vector<MinimizerRecord> prefix(ms.records.begin(),
                                                  ms.records.begin() + upto);
        coverage.push_back({{"converged_starts", upto},
                            {"distinct",
                             collect_minimizers(prefix, ms.best_value, 1e-9).family.size()}});
    }

    json states = json::array();
    for (const auto& s : col.family.states) states.push_back(state_to_json(s));
    const json out{{"objective", obj.name},
                   {"starts", ms.n_starts},
                   {"converged", ms.n_converged},
                   {"failed", ms.n_failed},
                   {"global_min", ms.best_value},
                   {"n_distinct_minimizers", col.family.size()},
                   {"coverage", coverage},
                   {"states", states}};
    emit(out, out_path);
    return 0;
}

int cmd_orbit(const std::string& seed_path, const std::string& gates, std::size_t cap,
              const std::string& out_path) {
    const json j = read_json_file(seed_path);
    const PureState seed = state_from_json(j);
    int n_qubits = 0;
    for (int d = seed.dim; d > 1; d /= 2) ++n_qubits;
    if ((1 << n_qubits) != seed.dim) throw Error("orbit seeds must have power-of-2 dimension");

    std::vector<Gate> gens;
    if (gates == "clifford")
        gens = clifford_generators(n_qubits);
    else
        gens = circuit_from_json(read_json_file(gates), n_qubits);

    const auto exact_seed = exact_state_from_json(j);
    bool all_clifford = true;
    for (const auto& g : gens) all_clifford = all_clifford && g.clifford;
    json out;
    if (exact_seed && gates == "clifford") {
        const auto orbit = clifford_orbit_exact(*exact_seed, n_qubits, cap);
        json states = json::array();
        for (const auto& s : orbit) states.push_back(state_to_json(s));
        out = json{{"orbit_size", orbit.size()}, {"states", states}, {"exact", true}};
    } else {
        if (!all_clifford)
            throw Error("orbit generators must be Clifford gates (no T)");
        const OrbitFamily orbit = clifford_orbit(seed, gens, cap);
        out = orbit_to_json(orbit);
    }
    emit(out, out_path);
    return 0;
}

int cmd_wh_orbit(const std::string& state_path, const std::string& factors,
                 const std::string& out_path) {
    const PureState psi = state_from_json(read_json_file(state_path));
    std::vector<int> dims;
    if (!factors.empty()) {
        try {
            std::size_t pos = 0;
            std::string rest = factors;
            while (!rest.empty()) {
                dims.push_back(std::stoi(rest, &pos));
                rest = rest.substr(pos);
                if (!rest.empty() && rest[0] == ',') rest = rest.substr(1);
            }
        } catch (const std::exception&) {
            throw UsageError("--factors must be a comma-separated dimension list");
        }
    } else {
        int d = psi.dim;
        while (d > 1 && d % 2 == 0) {
            dims.push_back(2);
            d /= 2;
        }
        if (d != 1) dims = {psi.dim};
    }
    const OrbitFamily fam = wh_orbit(psi, wh_group(dims));
    emit(orbit_to_json(fam), out_path);
    return 0;
}

int cmd_structure(const std::string& catalog_dir, const std::string& report_path) {
    const Catalog c = Catalog::load(catalog_dir);
    emit(structure_report(c), report_path);
    return 0;
}

int cmd_concurrence(const std::string& state_path, bool profile,
                    const std::string& catalog_dir) {
    if (!profile) {
        const json j = read_json_file(state_path);
        const PureState psi = state_from_json(j);
        json out{{"concurrence", concurrence(psi)}};
        if (const auto es = exact_state_from_json(j))
            out["concurrence_sq"] = rational_str(concurrence_sq_exact(*es));
        std::cout << out.dump() << "\n";
        return 0;
    }
    const Catalog c = Catalog::load(catalog_dir);
    auto hist = [](const std::vector<double>& vals) {
        json h = json::object();
        std::map<double, int> m;
        for (double v : vals) m[std::round(v * 1e9) / 1e9] += 1;
        for (const auto& [v, n] : m) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", v);
            h[buf] = n;
        }
        return h;
    };
    json detail = json::array();
    auto detail_of = [&](const std::string& kind, const std::vector<std::vector<int>>& orbits) {
        for (std::size_t oid = 0; oid < orbits.size(); ++oid) {
            const CatalogEntry& e = c.entries[orbits[oid][0]];
            json d{{"kind", kind}, {"orbit_id", oid}, {"concurrence", e.concurrence}};
            if (e.concurrence_sq) d["concurrence_sq"] = rational_str(*e.concurrence_sq);
            detail.push_back(std::move(d));
        }
    };
    detail_of("stabilizer", c.stab_orbits);
    detail_of("magic2q", c.magic_orbits);
    const json out{{"stabilizer", hist(c.stab_orbit_concurrence)},
                   {"magic2q", hist(c.magic_orbit_concurrence)},
                   {"orbits", detail}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const ClaimConfig& cfg, bool as_json, const std::string& out_path) {
    const auto reports = verify_claims(cfg);
    json arr = json::array();
    int failed = 0;
    for (const auto& r : reports) {
        arr.push_back(claim_report_to_json(r));
        if (!r.pass) ++failed;
    }
    if (as_json) {
        emit(arr, out_path);
    } else {
        for (const auto& r : reports) {
            std::printf("[%s] %-36s %6lld ms  %s\n", r.pass ? "PASS" : "FAIL",
                        r.claim_id.c_str(), static_cast<long long>(r.runtime_ms),
                        r.description.c_str());
            if (!r.pass)
                std::printf("       target %s, computed %s\n", r.target.dump().c_str(),
                            r.computed.dump().c_str());
        }
        std::printf("%zu/%zu claims pass\n", reports.size() - failed, reports.size());
        if (!out_path.empty()) write_json_file(out_path, arr);
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magiclab: stabilizer Renyi entropy, maximal-magic state search, and "
                 "WH MUB/SIC structure checks for qubits and qudits"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    double tol = 1e-9;
    bool as_json = false;
    app.add_option("--seed", seed, "RNG seed for searches")->capture_default_str();
    app.add_option("--tol", tol, "tolerance for lookups and comparisons")
        ->capture_default_str();
    app.add_flag("--json", as_json, "machine-readable output where applicable");

    auto* sre_cmd = app.add_subcommand("sre", "stabilizer Renyi entropy of a state");
    std::string state_path, out_path;
    double alpha = 2.0;
    bool exact = false;
    sre_cmd->add_option("--state", state_path, "state JSON file")->required();
    sre_cmd->add_option("--alpha", alpha, "Renyi order")->capture_default_str();
    sre_cmd->add_flag("--exact", exact, "rational arithmetic (alpha = 2, exact states only)");

    auto* search_cmd = app.add_subcommand("search", "multistart minimization of Xi_2");
    int dim = 4, starts = 2000;
    std::string mode = "two-qubit";
    bool haar_starts = false;
    search_cmd->add_option("--dim", dim, "state dimension (2 or 4)")->capture_default_str();
    search_cmd->add_option("--mode", mode, "two-qubit or qudit (dim 4 only)")
        ->capture_default_str();
    search_cmd->add_option("--starts", starts, "number of random starts")
        ->capture_default_str();
    search_cmd->add_flag("--haar-starts", haar_starts,
                         "draw starts from Haar-random states instead of the parameter box");
    search_cmd->add_option("--out", out_path, "write the result JSON here");

    auto* orbit_cmd = app.add_subcommand("orbit", "gate-set closure of a seed state");
    std::string orbit_seed_path, gates = "clifford";
    std::size_t cap = kDefaultOrbitCap;
    orbit_cmd->add_option("--seed", orbit_seed_path, "seed state JSON file")->required();
    orbit_cmd->add_option("--gates", gates, "clifford, or a circuit JSON file of Clifford gates")
        ->capture_default_str();
    orbit_cmd->add_option("--cap", cap, "orbit size cap")->capture_default_str();
    orbit_cmd->add_option("--out", out_path, "write the orbit JSON here");

    auto* wh_cmd = app.add_subcommand("wh-orbit", "Weyl-Heisenberg orbit of a state");
    std::string factors;
    wh_cmd->add_option("--state", state_path, "state JSON file")->required();
    wh_cmd->add_option("--factors", factors, "factor dimensions, e.g. 2,2 or 4");
    wh_cmd->add_option("--out", out_path, "write the orbit JSON here");

    auto* struct_cmd = app.add_subcommand("structure", "orbit/pairing report from a catalog");
    std::string catalog_dir, report_path;
    struct_cmd->add_option("--catalog", catalog_dir, "catalog directory")->required();
    struct_cmd->add_option("--report", report_path, "write the report JSON here");

    auto* conc_cmd = app.add_subcommand("concurrence", "two-qubit concurrence");
    bool profile = false;
    conc_cmd->add_option("--state", state_path, "state JSON file");
    conc_cmd->add_flag("--profile", profile, "per-orbit profile over a catalog");
    conc_cmd->add_option("--catalog", catalog_dir, "catalog directory (with --profile)");

    auto* cat_cmd = app.add_subcommand("catalog", "build or query the state catalogs");
    cat_cmd->require_subcommand(1);
    auto* cat_build = cat_cmd->add_subcommand("build", "generate and write the catalogs");
    bool extended = false;
    cat_build->add_option("--out", catalog_dir, "output directory")->required();
    cat_build->add_flag("--extended", extended, "also scan the 256 d=4 qudit fiducials");
    auto* cat_lookup = cat_cmd->add_subcommand("lookup", "find a state in the catalogs");
    cat_lookup->add_option("--state", state_path, "state JSON file")->required();
    cat_lookup->add_option("--catalog", catalog_dir, "catalog directory")->required();

    auto* verify_cmd = app.add_subcommand("verify-claims", "recompute the full claim suite");
    ClaimConfig cfg;
    verify_cmd->add_flag("--extended", extended, "include the d=4 qudit fiducial sweep");
    int verify_starts = 0;
    verify_cmd->add_option("--starts", verify_starts,
                           "multistart budget for the search claims (default 2000)");
    verify_cmd->add_option("--out", out_path, "write the report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sre_cmd) return cmd_sre(state_path, alpha, exact);
        if (*search_cmd) return cmd_search(dim, mode, starts, seed, haar_starts, out_path);
        if (*orbit_cmd) return cmd_orbit(orbit_seed_path, gates, cap, out_path);
        if (*wh_cmd) return cmd_wh_orbit(state_path, factors, out_path);
        if (*struct_cmd) return cmd_structure(catalog_dir, report_path);
        if (*conc_cmd) return cmd_concurrence(state_path, profile, catalog_dir);
        if (*cat_build) {
            Catalog::build(seed, extended).save(catalog_dir);
            std::cout << "catalog written to " << catalog_dir << "\n";
            return 0;
        }
        if (*cat_lookup) {
            const Catalog c = Catalog::load(catalog_dir);
            const PureState psi = state_from_json(read_json_file(state_path));
            const CatalogEntry* e = c.lookup(psi, tol);
            if (!e) {
                std::cout << json{{"found", false}}.dump() << "\n";
                return 0;
            }
            json out{{"found", true}, {"kind", e->kind}, {"orbit_id", e->orbit_id},
                     {"family_id", e->family_id}, {"xi2", e->xi2}};
            if (e->xi2_exact) out["xi2_exact"] = rational_str(*e->xi2_exact);
            if (e->concurrence >= 0) out["concurrence"] = e->concurrence;
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (*verify_cmd) {
            cfg.seed = seed;
            cfg.extended = extended;
            if (verify_starts > 0) {
                cfg.starts_2q = verify_starts;
                cfg.starts_qudit = verify_starts;
            }
            return cmd_verify(cfg, as_json, out_path);
        }
    } catch (const magiclab::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
