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

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "magiclab/clifford.hpp"
#include "magiclab/exact.hpp"
#include "magiclab/states.hpp"

namespace magiclab {

using nlohmann::json;

/// State file schema: {"dim": d, "amplitudes": [[re, im], ...]}; exact states
/// add {"denominator": m, "gaussian_numerators": [[a, b], ...]}.
inline json state_to_json(const PureState& s) {
    json amps = json::array();
    for (const auto& c : s.amps) amps.push_back({c.real(), c.imag()});
    return json{{"dim", s.dim}, {"amplitudes", amps}};
}

/// Both the float amplitudes and the Gaussian numerators describe the same
/// integer-denominator representative (division by a power of 2 is exact).
inline json state_to_json(const ExactState& s) {
    json j = state_to_json(s.with_integer_denominator().to_pure());
    const auto [nums, denom] = s.integer_form();
    auto to_long = [](const mpz_class& z) {
        if (!z.fits_slong_p()) throw Error("exact value " + z.get_str() + " overflows JSON");
        return z.get_si();
    };
    json gn = json::array();
    for (const auto& z : nums) gn.push_back({to_long(z.re), to_long(z.im)});
    j["denominator"] = to_long(denom);
    j["gaussian_numerators"] = gn;
    return j;
}

/// Reads amplitudes exactly as stored (already unit norm).
inline PureState state_from_json_verbatim(const json& j) {
    if (!j.contains("dim") || !j.contains("amplitudes"))
        throw Error("state file must contain 'dim' and 'amplitudes'");
    Vec amps;
    for (const auto& pair : j.at("amplitudes"))
        amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    if (static_cast<int>(amps.size()) != j.at("dim").get<int>())
        throw Error("amplitude count does not match 'dim'");
    return PureState{static_cast<int>(amps.size()), std::move(amps)};
}

/// Reads a state file, normalizing the amplitudes (user inputs need not be
/// exactly unit norm).
inline PureState state_from_json(const json& j) {
    return normalize(state_from_json_verbatim(j).amps);
}

inline std::optional<ExactState> exact_state_from_json(const json& j) {
    if (!j.contains("denominator") || !j.contains("gaussian_numerators")) return std::nullopt;
    std::vector<GaussianInt> nums;
    for (const auto& pair : j.at("gaussian_numerators"))
        nums.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
    return ExactState::over_integer_denominator(std::move(nums), j.at("denominator").get<long>());
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j, int indent = 2) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(indent) << "\n";
}

/// Circuit file schema: JSON list of {"gate":"H"|"S"|"T","qubit":q} and
/// {"gate":"CNOT","control":c,"target":t}; qubit indices are 0-based with the
/// leftmost tensor factor as qubit 0.
inline std::vector<Gate> circuit_from_json(const json& j, int n_qubits) {
    if (!j.is_array()) throw Error("circuit file must be a JSON array");
    std::vector<Gate> gates;
    for (const auto& g : j) {
        const std::string name = g.at("gate").get<std::string>();
        if (name == "CNOT") {
            const int c = g.at("control").get<int>(), t = g.at("target").get<int>();
            if (c < 0 || c >= n_qubits || t < 0 || t >= n_qubits || c == t)
                throw Error("bad CNOT qubits in circuit file");
            gates.push_back(make_gate(Gate::Kind::CNOT, c, n_qubits, t));
            continue;
        }
        const int q = g.at("qubit").get<int>();
        if (q < 0 || q >= n_qubits) throw Error("bad qubit index in circuit file");
        if (name == "H")
            gates.push_back(make_gate(Gate::Kind::H, q, n_qubits));
        else if (name == "S")
            gates.push_back(make_gate(Gate::Kind::S, q, n_qubits));
        else if (name == "T")
            gates.push_back(make_gate(Gate::Kind::T, q, n_qubits));
        else
            throw Error("unknown gate '" + name + "' in circuit file");
    }
    return gates;
}

inline json orbit_to_json(const OrbitFamily& fam) {
    json states = json::array();
    for (const auto& s : fam.states) states.push_back(state_to_json(s));
    json j{{"orbit_size", fam.size()}, {"states", states}};
    if (!fam.index_tuples.empty()) {
        json tuples = json::array();
        for (const auto& t : fam.index_tuples) {
            json tt = json::array();
            for (const auto& [a1, a2] : t) tt.push_back({a1, a2});
            tuples.push_back(tt);
        }
        j["index_tuples"] = tuples;
    }
    if (!fam.generators.empty()) j["generators"] = fam.generators;
    return j;
}

}  // namespace magiclab
