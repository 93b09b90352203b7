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
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "magiclab/entanglement.hpp"
#include "magiclab/io.hpp"
#include "magiclab/magic.hpp"
#include "magiclab/optimize.hpp"
#include "magiclab/structure.hpp"

namespace magiclab {

constexpr int kCatalogVersion = 1;

/// One catalog state with its orbit, pairing, and concurrence metadata.
/// Exact fields are present for the Gaussian-rational families (stabilizer
/// and two-qubit maximal magic); the SIC fiducials are irrational and carry
/// float data only.
struct CatalogEntry {
    std::string kind;  // "stabilizer" | "magic2q" | "sic1q" | "sic4d"
    int orbit_id = -1;
    int family_id = -1;  // for magic2q: the paired stabilizer orbit
    PureState state;
    std::optional<ExactState> exact;
    double concurrence = -1;  // dim-4 kinds only
    std::optional<mpq_class> concurrence_sq;
    double xi2 = 0;
    std::optional<mpq_class> xi2_exact;
};

/// Number of multistart runs used to sweep out all 256 qudit fiducials in
/// extended builds (calibrated: ~85% of starts land in a fiducial basin and
/// coupon collection over 256 basins needs a few thousand hits).
constexpr int kExtendedQuditStarts = 20000;

class Catalog {
  public:
    std::vector<CatalogEntry> entries;

    // Index lists into `entries`, orbit-major per kind.
    std::vector<std::vector<int>> stab_orbits;   // 15 x 4
    std::vector<std::vector<int>> magic_orbits;  // 30 x 16
    std::vector<std::vector<int>> sic1q_orbits;  // 2 x 4
    std::vector<std::vector<int>> sic4d_orbits;  // 16 x 16 (extended builds)

    PairingTable pairings;
    FamilyGrouping stab_grouping;
    std::vector<double> stab_orbit_concurrence;   // 15
    std::vector<double> magic_orbit_concurrence;  // 30

    bool extended = false;

    static Catalog build(std::uint64_t seed, bool with_extended = false);

    const CatalogEntry* lookup(const PureState& psi, double tol = 1e-9) const {
        auto it = key_index_.find(canonical_key(psi));
        if (it != key_index_.end()) return &entries[it->second];
        for (const auto& e : entries)
            if (e.state.dim == psi.dim && equal_up_to_phase(e.state, psi, tol)) return &e;
        return nullptr;
    }

    std::vector<const CatalogEntry*> of_kind(const std::string& kind) const {
        std::vector<const CatalogEntry*> out;
        for (const auto& e : entries)
            if (e.kind == kind) out.push_back(&e);
        return out;
    }

    std::vector<ExactState> exact_of_kind(const std::string& kind) const {
        std::vector<ExactState> out;
        for (const auto& e : entries)
            if (e.kind == kind && e.exact) out.push_back(*e.exact);
        return out;
    }

    void save(const std::filesystem::path& dir) const;
    static Catalog load(const std::filesystem::path& dir);

    void rebuild_index() {
        key_index_.clear();
        for (std::size_t i = 0; i < entries.size(); ++i)
            key_index_.emplace(canonical_key(entries[i].state), i);
    }

  private:
    std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> key_index_;
};

namespace detail {

inline json entry_to_json(const CatalogEntry& e) {
    json j = e.exact ? state_to_json(*e.exact) : state_to_json(e.state);
    j["kind"] = e.kind;
    j["orbit_id"] = e.orbit_id;
    j["family_id"] = e.family_id;
    if (e.concurrence >= 0) j["concurrence"] = e.concurrence;
    if (e.concurrence_sq) j["concurrence_sq"] = rational_str(*e.concurrence_sq);
    j["xi2"] = e.xi2;
    if (e.xi2_exact) j["xi2_exact"] = rational_str(*e.xi2_exact);
    return j;
}

inline CatalogEntry entry_from_json(const json& j) {
    CatalogEntry e;
    e.kind = j.at("kind").get<std::string>();
    e.orbit_id = j.at("orbit_id").get<int>();
    e.family_id = j.at("family_id").get<int>();
    e.exact = exact_state_from_json(j);
    e.state = e.exact ? e.exact->to_pure() : state_from_json_verbatim(j);
    if (j.contains("concurrence")) e.concurrence = j.at("concurrence").get<double>();
    if (j.contains("concurrence_sq"))
        e.concurrence_sq = mpq_class(j.at("concurrence_sq").get<std::string>());
    e.xi2 = j.at("xi2").get<double>();
    if (j.contains("xi2_exact")) e.xi2_exact = mpq_class(j.at("xi2_exact").get<std::string>());
    return e;
}

inline void write_jsonl(const std::filesystem::path& path, const std::vector<CatalogEntry>& all,
                        const std::string& kind) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    for (const auto& e : all)
        if (e.kind == kind) out << entry_to_json(e).dump() << "\n";
}

}  // namespace detail

/// The first fiducial of the d=2 WH SIC, generated from its known Bloch
/// parameters theta = -2 arccot sqrt(2 + sqrt 3), phi = 3 pi / 4.
inline PureState sic1q_fiducial() {
    const double theta = -2.0 * std::atan(1.0 / std::sqrt(2.0 + std::numbers::sqrt3));
    return bloch_state(theta, 3 * std::numbers::pi / 4);
}

inline Catalog Catalog::build(std::uint64_t seed, bool with_extended) {
    Catalog c;
    c.extended = with_extended;

    const auto stab_exact = enumerate_stabilizers_2q();
    const auto magic_exact = enumerate_maximal_magic_2q();
    const auto stab_orbit_idx = partition_by_wh_orbit_exact(stab_exact, 2);
    const auto magic_orbit_idx = partition_by_wh_orbit_exact(magic_exact, 2);

    const mpq_class one(1), seven_sixteenths(7, 16);

    // Stabilizer entries: Xi_2 must be exactly 1 (zero magic).
    std::vector<Basis> stab_bases;
    for (std::size_t oid = 0; oid < stab_orbit_idx.size(); ++oid) {
        std::vector<PureState> basis_states;
        std::vector<int> members;
        for (int idx : stab_orbit_idx[oid]) {
            CatalogEntry e;
            e.kind = "stabilizer";
            e.orbit_id = static_cast<int>(oid);
            e.exact = stab_exact[idx].with_integer_denominator();
            e.state = e.exact->to_pure();
            e.xi2_exact = xi2_exact(*e.exact);
            if (*e.xi2_exact != one)
                throw Error("stabilizer state has nonzero magic: Xi_2 = " +
                            rational_str(*e.xi2_exact));
            e.xi2 = e.xi2_exact->get_d();
            e.concurrence_sq = concurrence_sq_exact(*e.exact);
            e.concurrence = std::sqrt(e.concurrence_sq->get_d());
            basis_states.push_back(e.state);
            members.push_back(static_cast<int>(c.entries.size()));
            c.entries.push_back(std::move(e));
        }
        c.stab_orbits.push_back(std::move(members));
        stab_bases.push_back(make_basis(std::move(basis_states)));
    }

    // Magic entries: Xi_2 must be exactly 7/16, and every orbit must certify
    // as a WH MUB fiducial family.
    const WHGroup w22 = wh_group({2, 2});
    std::vector<MubFamily> magic_mubs;
    for (std::size_t oid = 0; oid < magic_orbit_idx.size(); ++oid) {
        std::vector<int> members;
        for (int idx : magic_orbit_idx[oid]) {
            CatalogEntry e;
            e.kind = "magic2q";
            e.orbit_id = static_cast<int>(oid);
            e.exact = magic_exact[idx].with_integer_denominator();
            e.state = e.exact->to_pure();
            e.xi2_exact = xi2_exact(*e.exact);
            if (*e.xi2_exact != seven_sixteenths)
                throw Error("maximal-magic state has Xi_2 = " + rational_str(*e.xi2_exact));
            e.xi2 = e.xi2_exact->get_d();
            e.concurrence_sq = concurrence_sq_exact(*e.exact);
            e.concurrence = std::sqrt(e.concurrence_sq->get_d());
            members.push_back(static_cast<int>(c.entries.size()));
            c.entries.push_back(std::move(e));
        }
        const FiducialCertificate cert =
            certify_wh_mub_fiducial(c.entries[members[0]].state, w22);
        if (!cert.ok)
            throw Error("magic orbit " + std::to_string(oid) +
                        " failed MUB fiducial certification: " + cert.reason);
        magic_mubs.push_back(MubFamily{cert.bases, "magic-orbit"});
        c.magic_orbits.push_back(std::move(members));
    }

    c.pairings = assemble_five_mub_families(stab_bases, magic_mubs);
    for (std::size_t mi = 0; mi < c.magic_orbits.size(); ++mi)
        for (int idx : c.magic_orbits[mi])
            c.entries[idx].family_id = c.pairings.stab_for_magic[mi];

    // Orbit-constant concurrence and the pairing rule: orbits augmented by a
    // product stabilizer basis sit at 1/sqrt(2), the rest at 1/2.
    {
        std::vector<std::vector<PureState>> so, mo;
        for (const auto& orbit : c.stab_orbits) {
            so.emplace_back();
            for (int idx : orbit) so.back().push_back(c.entries[idx].state);
        }
        for (const auto& orbit : c.magic_orbits) {
            mo.emplace_back();
            for (int idx : orbit) mo.back().push_back(c.entries[idx].state);
        }
        c.stab_orbit_concurrence = orbit_concurrence_profile(so).orbit_values;
        c.magic_orbit_concurrence = orbit_concurrence_profile(mo).orbit_values;
        for (std::size_t mi = 0; mi < c.magic_orbits.size(); ++mi) {
            const double stab_c = c.stab_orbit_concurrence[c.pairings.stab_for_magic[mi]];
            const double want = stab_c < 0.5 ? 1.0 / std::numbers::sqrt2 : 0.5;
            if (std::abs(c.magic_orbit_concurrence[mi] - want) > 1e-10)
                throw Error("concurrence pairing rule violated at magic orbit " +
                            std::to_string(mi));
        }
    }

    c.stab_grouping = find_family_grouping(stab_bases);

    // Single-qubit SIC fiducials: Clifford orbit of the known fiducial, split
    // into its two WH orbits, each a SIC.
    {
        const WHGroup w2 = wh_group({2});
        const OrbitFamily orb8 = clifford_orbit(sic1q_fiducial(), clifford_generators(1));
        if (orb8.size() != 8) throw Error("single-qubit fiducial orbit has size " +
                                          std::to_string(orb8.size()));
        const auto sic_idx = partition_by_wh_orbit_indices(orb8.states, w2);
        for (std::size_t oid = 0; oid < sic_idx.size(); ++oid) {
            std::vector<PureState> sic_states;
            std::vector<int> members;
            for (int idx : sic_idx[oid]) {
                CatalogEntry e;
                e.kind = "sic1q";
                e.orbit_id = static_cast<int>(oid);
                e.state = orb8.states[idx];
                e.xi2 = xi(2, e.state, w2);
                sic_states.push_back(e.state);
                members.push_back(static_cast<int>(c.entries.size()));
                c.entries.push_back(std::move(e));
            }
            const SicCertificate sic = certify_sic(sic_states);
            if (!sic.ok)
                throw Error("single-qubit WH orbit " + std::to_string(oid) +
                            " failed SIC certification (dev " + std::to_string(sic.worst_dev) +
                            ")");
            c.sic1q_orbits.push_back(std::move(members));
        }
    }

    if (with_extended) {
        const Objective obj = qudit4_objective();
        const MultistartResult ms = multistart_minimize(obj, kExtendedQuditStarts, seed);
        const CollectedMinimizers col = collect_minimizers(ms.records, 0.4, 1e-9);
        const WHGroup w4 = wh_group({4});
        const auto orbit_idx = partition_by_wh_orbit_indices(col.family.states, w4, 1e-6);
        for (std::size_t oid = 0; oid < orbit_idx.size(); ++oid) {
            std::vector<PureState> sic_states;
            std::vector<int> members;
            for (int idx : orbit_idx[oid]) {
                CatalogEntry e;
                e.kind = "sic4d";
                e.orbit_id = static_cast<int>(oid);
                e.state = col.family.states[idx];
                e.xi2 = xi(2, e.state, w4);
                sic_states.push_back(e.state);
                members.push_back(static_cast<int>(c.entries.size()));
                c.entries.push_back(std::move(e));
            }
            const SicCertificate sic = certify_sic(sic_states);
            if (!sic.ok)
                throw Error("qudit fiducial orbit " + std::to_string(oid) +
                            " failed SIC certification (dev " + std::to_string(sic.worst_dev) +
                            ")");
            c.sic4d_orbits.push_back(std::move(members));
        }
    }

    c.rebuild_index();
    return c;
}

inline void Catalog::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    detail::write_jsonl(dir / "stabilizers.jsonl", entries, "stabilizer");
    detail::write_jsonl(dir / "magic2q.jsonl", entries, "magic2q");
    detail::write_jsonl(dir / "sic1q.jsonl", entries, "sic1q");
    if (extended) detail::write_jsonl(dir / "sic4d.jsonl", entries, "sic4d");

    json pair = json::array();
    for (std::size_t mi = 0; mi < pairings.stab_for_magic.size(); ++mi)
        pair.push_back({{"magic_orbit", mi}, {"stab_orbit", pairings.stab_for_magic[mi]}});
    json fams = json::array();
    for (const auto& f : stab_grouping.complete_families) fams.push_back(f);
    json hist_stab = json::object(), hist_magic = json::object();
    auto hist_of = [](const std::vector<double>& vals) {
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
    const json meta{{"version", kCatalogVersion},
                    {"stab_orbits", stab_orbits.size()},
                    {"magic_orbits", magic_orbits.size()},
                    {"pairings", pair},
                    {"families_of_5", pairings.families_of_5},
                    {"stab_families_of_5", stab_grouping.n_valid_partitions == 0
                                               ? 0
                                               : static_cast<int>(stab_grouping.families.size())},
                    {"stab_valid_partitions", stab_grouping.n_valid_partitions},
                    {"stab_complete_mub_families", fams},
                    {"stab_concurrence_histogram", hist_of(stab_orbit_concurrence)},
                    {"magic_concurrence_histogram", hist_of(magic_orbit_concurrence)},
                    {"extended", extended}};
    write_json_file((dir / "pairings.json").string(), meta);
}

inline Catalog Catalog::load(const std::filesystem::path& dir) {
    Catalog c;
    auto read_jsonl = [&](const std::filesystem::path& p, bool required) {
        std::ifstream in(p);
        if (!in) {
            if (required) throw Error("cannot open " + p.string());
            return;
        }
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            c.entries.push_back(detail::entry_from_json(json::parse(line)));
        }
    };
    read_jsonl(dir / "stabilizers.jsonl", true);
    read_jsonl(dir / "magic2q.jsonl", true);
    read_jsonl(dir / "sic1q.jsonl", false);
    read_jsonl(dir / "sic4d.jsonl", false);

    const json meta = read_json_file((dir / "pairings.json").string());
    if (meta.at("version").get<int>() != kCatalogVersion)
        throw Error("catalog version mismatch");
    c.extended = meta.value("extended", false);
    c.stab_orbits.resize(meta.at("stab_orbits").get<std::size_t>());
    c.magic_orbits.resize(meta.at("magic_orbits").get<std::size_t>());
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        const auto& e = c.entries[i];
        auto place = [&](std::vector<std::vector<int>>& orbits) {
            if (e.orbit_id >= static_cast<int>(orbits.size()))
                orbits.resize(e.orbit_id + 1);
            orbits[e.orbit_id].push_back(static_cast<int>(i));
        };
        if (e.kind == "stabilizer") place(c.stab_orbits);
        else if (e.kind == "magic2q") place(c.magic_orbits);
        else if (e.kind == "sic1q") place(c.sic1q_orbits);
        else if (e.kind == "sic4d") place(c.sic4d_orbits);
    }
    c.pairings.magics_for_stab.resize(c.stab_orbits.size());
    c.pairings.stab_for_magic.resize(c.magic_orbits.size());
    for (const auto& p : meta.at("pairings")) {
        const int mi = p.at("magic_orbit").get<int>(), si = p.at("stab_orbit").get<int>();
        c.pairings.stab_for_magic[mi] = si;
        c.pairings.magics_for_stab[si].push_back(mi);
    }
    c.pairings.families_of_5 = meta.at("families_of_5").get<int>();
    c.stab_grouping.n_valid_partitions = meta.at("stab_valid_partitions").get<int>();
    for (const auto& f : meta.at("stab_complete_mub_families"))
        c.stab_grouping.complete_families.push_back(f.get<std::vector<int>>());
    for (const auto& orbit : c.stab_orbits)
        c.stab_orbit_concurrence.push_back(c.entries[orbit[0]].concurrence);
    for (const auto& orbit : c.magic_orbits)
        c.magic_orbit_concurrence.push_back(c.entries[orbit[0]].concurrence);
    c.rebuild_index();
    return c;
}

/// Structure report consumed by the CLI: orbit counts, the 30->15 pairing
/// table, and the stabilizer-family diagnostics.
inline json structure_report(const Catalog& c) {
    json pair = json::array();
    for (std::size_t mi = 0; mi < c.pairings.stab_for_magic.size(); ++mi)
        pair.push_back({{"magic_orbit", mi}, {"stab_orbit", c.pairings.stab_for_magic[mi]}});
    return json{{"stab_orbits", c.stab_orbits.size()},
                {"magic_orbits", c.magic_orbits.size()},
                {"pairings", pair},
                {"families_of_5", c.pairings.families_of_5},
                {"stab_families_of_5", c.stab_grouping.n_valid_partitions == 0 ? 0 : 3},
                {"stab_valid_partitions", c.stab_grouping.n_valid_partitions},
                {"stab_complete_mub_families", c.stab_grouping.complete_families.size()}};
}

}  // namespace magiclab
