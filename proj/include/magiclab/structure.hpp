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

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "magiclab/clifford.hpp"
#include "magiclab/exact.hpp"
#include "magiclab/magic.hpp"
#include "magiclab/states.hpp"
#include "magiclab/wh_group.hpp"

namespace magiclab {

struct Basis {
    std::vector<PureState> states;
    double orthonormality_dev = 0;
};

struct MubFamily {
    std::vector<Basis> bases;
    std::string kind;  // "stabilizer", "magic-orbit", "mixed-five"
};

constexpr double kOrthonormalTol = 1e-10;
constexpr double kMubTol = 1e-10;
constexpr double kSicTol = 1e-9;

/// Orthonormality defect max_ij | <psi_i|psi_j> - delta_ij |.
inline double basis_deviation(const std::vector<PureState>& states) {
    double worst = 0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(std::abs(inner_product(states[i], states[j])) - target));
        }
    return worst;
}

inline Basis make_basis(std::vector<PureState> states) {
    if (states.empty()) throw NotABasis("empty basis");
    const int d = states[0].dim;
    if (static_cast<int>(states.size()) != d)
        throw NotABasis("basis has " + std::to_string(states.size()) + " states in dimension " +
                        std::to_string(d));
    Basis b{std::move(states), 0};
    b.orthonormality_dev = basis_deviation(b.states);
    if (b.orthonormality_dev > kOrthonormalTol)
        throw NotABasis("orthonormality deviation " + std::to_string(b.orthonormality_dev));
    return b;
}

struct MubCertificate {
    bool ok = false;
    double worst_dev = 0;  // max | |<psi|chi>|^2 - 1/D | over cross pairs
};

/// Checks all cross overlaps between the bases against 1/D.
inline MubCertificate certify_mub(const std::vector<Basis>& bases) {
    if (bases.empty()) throw NotABasis("no bases given");
    const int d = bases[0].states[0].dim;
    for (const auto& b : bases) {
        if (static_cast<int>(b.states.size()) != d || b.states[0].dim != d)
            throw NotABasis("bases must be complete and share one dimension");
        if (basis_deviation(b.states) > kOrthonormalTol)
            throw NotABasis("input basis is not orthonormal");
    }
    double worst = 0;
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b)
            for (const auto& x : bases[a].states)
                for (const auto& y : bases[b].states)
                    worst = std::max(worst,
                                     std::abs(std::norm(inner_product(x, y)) - 1.0 / d));
    return MubCertificate{worst <= kMubTol, worst};
}

struct SicCertificate {
    bool ok = false;
    double worst_dev = 0;  // max | |<psi_i|psi_j>|^2 - 1/(D+1) |, i != j
};

/// Pairwise overlap check of D^2 states against 1/(D+1).
inline SicCertificate certify_sic(const std::vector<PureState>& states) {
    if (states.empty()) throw WrongCount(0, 0);
    const int d = states[0].dim;
    if (states.size() != static_cast<std::size_t>(d) * d)
        throw WrongCount(states.size(), static_cast<std::size_t>(d) * d);
    double worst = 0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            worst = std::max(worst, std::abs(std::norm(inner_product(states[i], states[j])) -
                                             1.0 / (d + 1)));
    return SicCertificate{worst <= kSicTol, worst};
}

namespace detail {

/// Exact cover of n states by disjoint orthogonal cliques of size d
/// (backtracking over the orthogonality graph; n <= 16 so this is cheap).
inline bool orthogonal_clique_cover(const std::vector<PureState>& states, int d,
                                    std::vector<std::vector<int>>& cover) {
    const int n = static_cast<int>(states.size());
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            orth[i][j] = orth[j][i] =
                std::abs(inner_product(states[i], states[j])) < 1e-9;
    std::vector<bool> used(n, false);
    std::vector<int> current;
    std::function<bool(int)> extend = [&](int start) -> bool {
        if (static_cast<int>(current.size()) == d) {
            cover.push_back(current);
            int next = 0;
            while (next < n && used[next]) ++next;
            if (next == n) return true;
            std::vector<int> saved;
            std::swap(saved, current);
            used[next] = true;
            current.push_back(next);
            if (extend(next + 1)) return true;
            current = std::move(saved);
            used[next] = false;
            cover.pop_back();
            return false;
        }
        for (int cand = start; cand < n; ++cand) {
            if (used[cand]) continue;
            bool ok = true;
            for (int m : current)
                if (!orth[m][cand]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[cand] = true;
            current.push_back(cand);
            if (extend(cand + 1)) return true;
            current.pop_back();
            used[cand] = false;
        }
        return false;
    };
    if (n == 0 || n % d != 0) return false;
    used[0] = true;
    current.push_back(0);
    return extend(1);
}

}  // namespace detail

struct FiducialCertificate {
    bool ok = false;
    std::string reason;  // set when ok == false
    std::vector<Basis> bases;
    double worst_dev = 0;
};

/// A state is a WH MUB fiducial iff its WH orbit has D^2 distinct states that
/// partition into D mutually unbiased bases.
inline FiducialCertificate certify_wh_mub_fiducial(const PureState& psi, const WHGroup& group) {
    const int d = group.total_dim();
    FiducialCertificate cert;
    const OrbitFamily orbit = wh_orbit(psi, group);
    if (orbit.size() != static_cast<std::size_t>(d) * d) {
        cert.reason = "orbit size " + std::to_string(orbit.size()) + " != " + std::to_string(d * d);
        return cert;
    }
    std::vector<std::vector<int>> cover;
    if (!detail::orthogonal_clique_cover(orbit.states, d, cover)) {
        cert.reason = "orbit does not split into " + std::to_string(d) + " orthonormal bases";
        return cert;
    }
    for (const auto& grp : cover) {
        Basis b;
        for (int i : grp) b.states.push_back(orbit.states[i]);
        b.orthonormality_dev = basis_deviation(b.states);
        if (b.orthonormality_dev > kOrthonormalTol) {
            cert.reason = "orbit bases miss orthonormality by " +
                          std::to_string(b.orthonormality_dev);
            cert.bases.clear();
            return cert;
        }
        cert.bases.push_back(std::move(b));
    }
    const MubCertificate mub = certify_mub(cert.bases);
    cert.worst_dev = mub.worst_dev;
    if (!mub.ok) {
        cert.reason = "bases are not mutually unbiased (worst dev " +
                      std::to_string(mub.worst_dev) + ")";
        cert.bases.clear();
        return cert;
    }
    cert.ok = true;
    return cert;
}

/// All 60 two-qubit stabilizer states, by exact Clifford closure of |00>.
inline std::vector<ExactState> enumerate_stabilizers_2q() {
    const ExactState seed({{1, 0}, {0, 0}, {0, 0}, {0, 0}}, 0);
    return clifford_orbit_exact(seed, 2);
}

/// The exact 480-state maximal-magic family: Clifford closure of (i,i,i,1)/2.
inline std::vector<ExactState> enumerate_maximal_magic_2q() {
    const ExactState seed({{0, 1}, {0, 1}, {0, 1}, {1, 0}}, 2);
    return clifford_orbit_exact(seed, 2);
}

/// Partitions a deduplicated state list into disjoint WH orbits covering it.
/// Orbits are ordered by their smallest canonical key; members keep input
/// indexing via the returned index lists.
inline std::vector<std::vector<int>> partition_by_wh_orbit_indices(
    const std::vector<PureState>& states, const WHGroup& group, double match_tol = 1e-7) {
    std::vector<bool> assigned(states.size(), false);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (assigned[i]) continue;
        const OrbitFamily orb = wh_orbit(states[i], group);
        std::vector<int> members;
        for (const auto& w : orb.states) {
            int hit = -1;
            for (std::size_t j = 0; j < states.size(); ++j)
                if (equal_up_to_phase(states[j], w, match_tol)) {
                    hit = static_cast<int>(j);
                    break;
                }
            if (hit < 0)
                throw NotClosed("a WH-orbit member of input state " + std::to_string(i) +
                                " is absent from the input");
            members.push_back(hit);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int j : members) assigned[j] = true;
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
        CanonicalKey ka = canonical_key(states[a[0]]);
        for (int i : a) ka = std::min(ka, canonical_key(states[i]));
        CanonicalKey kb = canonical_key(states[b[0]]);
        for (int i : b) kb = std::min(kb, canonical_key(states[i]));
        return ka < kb;
    });
    return orbits;
}

inline std::vector<OrbitFamily> partition_by_wh_orbit(const std::vector<PureState>& states,
                                                      const WHGroup& group,
                                                      double match_tol = 1e-7) {
    std::vector<OrbitFamily> out;
    for (const auto& idxs : partition_by_wh_orbit_indices(states, group, match_tol)) {
        OrbitFamily fam;
        fam.seed = states[idxs[0]];
        for (int i : idxs) fam.states.push_back(states[i]);
        out.push_back(std::move(fam));
    }
    return out;
}

/// Exact-arithmetic partition (qubit factors only): membership by exact keys.
inline std::vector<std::vector<int>> partition_by_wh_orbit_exact(
    const std::vector<ExactState>& states, int n_qubits) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < states.size(); ++i)
        index.emplace(states[i].canonical_encoding(), static_cast<int>(i));
    std::vector<bool> assigned(states.size(), false);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<int> members;
        for (const auto& w : wh_orbit_exact(states[i], n_qubits)) {
            auto it = index.find(w.canonical_encoding());
            if (it == index.end())
                throw NotClosed("exact WH-orbit member of state " + std::to_string(i) +
                                " is absent from the input");
            members.push_back(it->second);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int j : members) assigned[j] = true;
        orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const auto& a, const auto& b) {
        auto key = [&](const std::vector<int>& o) {
            std::string k = states[o[0]].canonical_encoding();
            for (int i : o) k = std::min(k, states[i].canonical_encoding());
            return k;
        };
        return key(a) < key(b);
    });
    return orbits;
}

/// WH representatives (indices into the group) fixing every basis member up
/// to sign; for a stabilizer basis this is a maximal Abelian subgroup of
/// order D, returned with a commutation check.
struct StabilizerSubgroup {
    std::vector<int> op_indices;
    bool abelian = false;
};

inline StabilizerSubgroup stabilizer_subgroup(const Basis& basis, const WHGroup& group) {
    StabilizerSubgroup out;
    for (std::size_t k = 0; k < group.operators.size(); ++k) {
        bool stabilizes = true;
        for (const auto& psi : basis.states)
            if (std::abs(std::abs(expectation(group.operators[k], psi)) - 1.0) > 1e-9) {
                stabilizes = false;
                break;
            }
        if (stabilizes) out.op_indices.push_back(static_cast<int>(k));
    }
    out.abelian = true;
    for (std::size_t a = 0; a < out.op_indices.size() && out.abelian; ++a)
        for (std::size_t b = a + 1; b < out.op_indices.size(); ++b) {
            const CMat& oa = group.operators[out.op_indices[a]].matrix;
            const CMat& ob = group.operators[out.op_indices[b]].matrix;
            if (CMat::max_abs_diff(oa * ob, ob * oa) > 1e-9) {
                out.abelian = false;
                break;
            }
        }
    return out;
}

/// Association table of the 5-MUB assembly: each magic orbit gets its unique
/// compatible stabilizer basis.
struct PairingTable {
    std::vector<int> stab_for_magic;               // size = #magic orbits
    std::vector<std::vector<int>> magics_for_stab; // size = #stab bases
    int families_of_5 = 0;
};

/// For every magic orbit (given as its D MUBs), finds the unique stabilizer
/// basis whose addition still certifies as mutually unbiased, and verifies
/// each stabilizer basis is used exactly twice.
inline PairingTable assemble_five_mub_families(const std::vector<Basis>& stab_bases,
                                               const std::vector<MubFamily>& magic_families) {
    PairingTable table;
    table.magics_for_stab.resize(stab_bases.size());
    for (std::size_t mi = 0; mi < magic_families.size(); ++mi) {
        std::vector<int> compatible;
        for (std::size_t si = 0; si < stab_bases.size(); ++si) {
            std::vector<Basis> five = magic_families[mi].bases;
            five.push_back(stab_bases[si]);
            if (certify_mub(five).ok) compatible.push_back(static_cast<int>(si));
        }
        if (compatible.size() != 1)
            throw AssociationFailure("magic orbit " + std::to_string(mi) + " has " +
                                     std::to_string(compatible.size()) +
                                     " compatible stabilizer bases (want 1)");
        table.stab_for_magic.push_back(compatible[0]);
        table.magics_for_stab[compatible[0]].push_back(static_cast<int>(mi));
        ++table.families_of_5;
    }
    for (std::size_t si = 0; si < stab_bases.size(); ++si)
        if (table.magics_for_stab[si].size() != 2)
            throw AssociationFailure("stabilizer basis " + std::to_string(si) + " is used " +
                                     std::to_string(table.magics_for_stab[si].size()) +
                                     " times (want 2)");
    return table;
}

/// Result of the exhaustive search for a partition of the stabilizer bases
/// into disjoint complete MUB families.
struct FamilyGrouping {
    std::vector<std::vector<int>> families;          // a valid partition, if any
    int n_valid_partitions = 0;                      // count over unordered partitions
    std::vector<std::vector<int>> complete_families; // all maximal 5-MUB cliques
};

/// Exhaustively searches for partitions of the 15 stabilizer bases into 3
/// groups of 5, each group pairwise mutually unbiased. Also reports every
/// complete 5-MUB family found, whether or not a partition exists. Throws
/// NoValidPartition when no partition exists (the diagnostics ride along in
/// the exception message; use find_family_grouping for the raw result).
inline FamilyGrouping find_family_grouping(const std::vector<Basis>& stab_bases) {
    const int n = static_cast<int>(stab_bases.size());
    const int d = stab_bases.empty() ? 0 : stab_bases[0].states[0].dim;
    const int family_size = d + 1;
    std::vector<std::vector<bool>> mu(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            mu[i][j] = mu[j][i] = certify_mub({stab_bases[i], stab_bases[j]}).ok;

    FamilyGrouping out;
    std::vector<int> combo(family_size);
    std::function<void(int, int)> cliques = [&](int start, int depth) {
        if (depth == family_size) {
            out.complete_families.emplace_back(combo.begin(), combo.end());
            return;
        }
        for (int c = start; c < n; ++c) {
            bool ok = true;
            for (int k = 0; k < depth; ++k)
                if (!mu[combo[k]][c]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            combo[depth] = c;
            cliques(c + 1, depth + 1);
        }
    };
    cliques(0, 0);

    // Partition search over the clique list: the first group must contain
    // basis 0; recurse on the smallest uncovered basis.
    const int n_groups = n / family_size;
    std::vector<std::vector<int>> chosen;
    std::function<void(std::vector<bool>&)> search = [&](std::vector<bool>& used) {
        int lowest = 0;
        while (lowest < n && used[lowest]) ++lowest;
        if (lowest == n) {
            ++out.n_valid_partitions;
            if (out.families.empty()) out.families = chosen;
            return;
        }
        if (static_cast<int>(chosen.size()) == n_groups) return;
        for (const auto& fam : out.complete_families) {
            if (fam[0] != lowest) continue;
            bool free = true;
            for (int b : fam)
                if (used[b]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int b : fam) used[b] = true;
            chosen.push_back(fam);
            search(used);
            chosen.pop_back();
            for (int b : fam) used[b] = false;
        }
    };
    std::vector<bool> used(n, false);
    search(used);
    return out;
}

inline FamilyGrouping group_stabilizer_bases_into_families(const std::vector<Basis>& stab_bases) {
    FamilyGrouping g = find_family_grouping(stab_bases);
    if (g.n_valid_partitions == 0)
        throw NoValidPartition(
            "no partition of the " + std::to_string(stab_bases.size()) +
            " stabilizer bases into disjoint complete MUB families exists; found " +
            std::to_string(g.complete_families.size()) +
            " complete families, pairwise overlapping");
    return g;
}

}  // namespace magiclab
