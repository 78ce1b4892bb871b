// Copyright 2026 The slicckit Authors
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

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slicckit/audit.hpp"
#include "slicckit/classifier.hpp"
#include "slicckit/oracle.hpp"
#include "slicckit/sio.hpp"

namespace slicckit::io {

using Json = nlohmann::ordered_json;

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json amplitudes_json(const ThreeQubitPureState &s) {
    Json out = Json::array();
    for (int k = 0; k < 8; ++k) out.push_back(complex_json(s[k]));
    return out;
}

inline Json mask_json(FlipMask m) { return Json{{"mask", m.to_string()}, {"number", m.family_number()}}; }

// ---------------------------------------------------------------------------
// Input documents
// ---------------------------------------------------------------------------

inline Complex parse_complex(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorCode::Parse, "amplitude must be a [re, im] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

/// {"amplitudes": [[re, im] x 8], "label": optional string}.
inline ThreeQubitPureState parse_state_document(const Json &j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "state document must be a JSON object");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw Error(ErrorCode::Parse, "missing \"amplitudes\" array");
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw Error(ErrorCode::Parse, "\"label\" must be a string");
        label = j["label"].get<std::string>();
    }
    std::vector<Complex> amp;
    for (const auto &a : j["amplitudes"]) amp.push_back(parse_complex(a));
    return parse_state(amp, std::move(label));
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

inline ThreeQubitPureState parse_state_text(std::string_view text) { return parse_state_document(parse_json(text)); }

inline Json state_document(const ThreeQubitPureState &s) {
    Json j{{"amplitudes", amplitudes_json(s)}};
    if (!s.label().empty()) j["label"] = s.label();
    return j;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json composition_json(const MixtureComposition &m) {
    Json comps = Json::array();
    for (const auto &c : m.components) {
        Json v = Json::array();
        for (auto z : c.state) v.push_back(complex_json(z));
        comps.push_back({{"weight", c.weight}, {"coherent", c.coherent}, {"state", v}});
    }
    return {{"coherent", m.n_coherent}, {"incoherent", m.n_incoherent}, {"components", comps}};
}

inline Json fine_json(const FineDescriptor &f) {
    Json single = Json::object();
    for (Party p : kParties) {
        const int i = static_cast<int>(p);
        Json entry{{"nature", to_string(f.single_nature[i])}};
        entry.update(composition_json(f.single_mix[i]));
        single[std::string(1, party_name(p))] = entry;
    }
    Json bipartite = Json::object();
    for (std::size_t i = 0; i < kBipartitions.size(); ++i) bipartite[kBipartitions[i].to_string()] = composition_json(f.bipartite_mix[i]);
    return {{"single", single}, {"bipartite", bipartite}};
}

inline Json classification_json(const Classification &c) {
    Json deltas = Json::object();
    for (const auto &d : c.deltas) deltas[d.name] = complex_json(d.value);
    return {{"label", c.normalized.label()},
            {"row", c.row->id},
            {"flip", mask_json(c.flip)},
            {"normalized", amplitudes_json(c.normalized)},
            {"deltas", deltas},
            {"local_ranks", c.ranks},
            {"three_tangle", c.tangle},
            {"slocc", to_string(c.slocc)},
            {"fine", fine_json(c.fine)},
            {"warnings", c.warnings}};
}

inline Json operator_json(const SIOLocalOperator &op) {
    return {{"kind", op.kind() == OperatorKind::Diagonal ? "diagonal" : "antidiagonal"},
            {"u", complex_json(op.u())},
            {"v", complex_json(op.v())}};
}

inline Json equivalence_json(const EquivalenceResult &r, std::string_view mode) {
    if (!r) return {{"equivalent", false}, {"mode", mode}, {"reason", to_string(r.reason)}};
    const auto &w = *r.witness;
    Json witness = Json::object();
    for (Party p : kParties) witness[std::string(1, party_name(p))] = operator_json(w.triple[p]);
    return {{"equivalent", true},
            {"mode", mode},
            {"family", mask_json(w.family())},
            {"witness", witness},
            {"global_scale", complex_json(w.global_scale)}};
}

inline Json consistency_json(const ConsistencyReport &r) {
    Json list = Json::array();
    for (const auto &d : r.disagreements) {
        Json j{{"trial", d.trial},
               {"check", d.check},
               {"detail", d.detail},
               {"psi", amplitudes_json(d.psi)},
               {"phi", amplitudes_json(d.phi)},
               {"solver", d.solver},
               {"table", d.table},
               {"row", d.row}};
        j["family"] = d.family ? mask_json(*d.family) : Json(nullptr);
        list.push_back(std::move(j));
    }
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"trials", r.trials},
            {"agreements", r.agreements},
            {"skipped", r.skipped},
            {"disagreements", list},
            {"elapsed_seconds", r.elapsed_seconds}};
}

inline Json error_json(std::string_view code, std::string_view message) { return {{"code", code}, {"message", message}}; }

// ---------------------------------------------------------------------------
// Registry export
// ---------------------------------------------------------------------------

inline std::string subscript(int n) {
    static constexpr std::string_view digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string s;
    for (char c : std::to_string(n)) s += digits[c - '0'];
    return s;
}

inline std::string condition_string(const DeltaCondition &c) {
    const std::string d = "Δ" + subscript(c.delta);
    return d + "'=" + (c.exponent > 0 ? d : "1/" + d);
}

inline std::string disjunct_string(const ConditionDisjunct &d) {
    std::string s;
    for (const auto &c : d) s += (s.empty() ? "" : ", ") + condition_string(c);
    return s;
}

inline std::vector<std::string> disjunct_strings(const std::vector<ConditionDisjunct> &ds) {
    std::vector<std::string> out;
    for (const auto &d : ds) out.push_back(disjunct_string(d));
    return out;
}

/// "a|000⟩+b|001⟩+…" over the representative support.
inline std::string representative_string(const TableRow &row) {
    std::string s;
    char letter = 'a';
    for (int k : row.letters()) {
        if (!s.empty()) s += "+";
        s += std::string(1, letter++) + "|" + std::to_string((k >> 2) & 1) + std::to_string((k >> 1) & 1) + std::to_string(k & 1) + "⟩";
    }
    return s;
}

inline std::vector<std::string> kernel_strings(const TableRow &row) {
    std::vector<std::string> out;
    for (const auto &c : kernel_conditions(row, FlipMask(0))) out.push_back(c.to_string());
    return out;
}

inline Json ratio_conditions_json(const std::vector<RatioCondition> &cs) {
    Json out = Json::array();
    for (const auto &c : cs) out.push_back(c.to_string());
    return out;
}

inline Json registry_json() {
    Json rows = Json::array();
    for (const auto &row : row_registry()) {
        Json j{{"id", row.id},
               {"terms", row.terms()},
               {"support", row.letters()},
               {"representative", representative_string(row)},
               {"infinite_classes", row.infinite_classes()},
               {"printed_conditions", disjunct_strings(row.printed_conditions)},
               {"conditions", disjunct_strings(row.conditions)},
               {"kernel_conditions", kernel_strings(row)}};
        if (!row.erratum.empty()) j["erratum"] = row.erratum;
        if (row.uses_appendix) {
            Json cases = Json::array();
            for (const auto &c : appendix_cases())
                cases.push_back({{"case", c.number},
                                 {"printed_operator", c.printed_operator.to_string()},
                                 {"operator", mask_json(c.operator_mask)},
                                 {"printed_conditions", ratio_conditions_json(c.printed)},
                                 {"conditions", ratio_conditions_json(c.conditions)},
                                 {"kernel_conditions", ratio_conditions_json(kernel_conditions(row, c.operator_mask))}});
            j["operator_cases"] = cases;
        }
        rows.push_back(std::move(j));
    }
    return rows;
}

inline std::string registry_markdown() {
    auto join = [](const std::vector<std::string> &v, std::string_view sep) {
        std::string s;
        for (const auto &x : v) s += (s.empty() ? "" : std::string(sep)) + x;
        return s;
    };
    std::ostringstream out;
    out << "| Row | Representative | Conditions | Kernel conditions (diagonal family) |\n";
    out << "|---|---|---|---|\n";
    for (const auto &row : row_registry()) {
        std::string cond = row.uses_appendix ? "operator cases below" : row.conditions.empty() ? "No" : join(disjunct_strings(row.conditions), " or ");
        if (!row.erratum.empty()) cond += " (erratum: " + row.erratum + ")";
        out << "| " << row.id << " | " << representative_string(row) << " | " << cond << " | " << join(kernel_strings(row), "; ") << " |\n";
    }
    out << "\n| Case | Operator | Conditions |\n|---|---|---|\n";
    for (const auto &c : appendix_cases()) {
        std::vector<std::string> s;
        for (const auto &r : c.conditions) s.push_back(r.to_string());
        out << "| " << c.number << " | " << c.operator_mask.to_string() << " | " << join(s, "; ") << " |\n";
    }
    return out.str();
}

}  // namespace slicckit::io
