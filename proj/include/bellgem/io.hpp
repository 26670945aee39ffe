// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>

#include <json.hpp>

#include "bellgem/gem.hpp"
#include "bellgem/registry.hpp"
#include "bellgem/state.hpp"
#include "bellgem/tangle.hpp"

namespace bellgem {

using nlohmann::json;

inline json amp_to_json(const ExactAmp& a) {
    return {{"re", a.re()}, {"im", a.im()}, {"half_pow", a.half_pow()}};
}

// Loose ingestion: any integer triple is accepted and re-canonicalized.
inline ExactAmp amp_from_json(const json& j) {
    return ExactAmp(j.at("re").get<std::int64_t>(), j.at("im").get<std::int64_t>(),
                    j.at("half_pow").get<std::uint32_t>());
}

inline json state_to_json(const SparseState& s) {
    json terms = json::array();
    for (const auto& [x, v] : s.terms()) {
        terms.push_back({{"basis", basis_to_string(x, s.qubits())}, {"amp", amp_to_json(v)}});
    }
    return {{"qubits", s.qubits()}, {"terms", terms}};
}

inline BasisIndex basis_from_string(const std::string& bits, std::uint32_t qubits) {
    if (bits.size() != qubits) {
        throw std::invalid_argument("basis bitstring length does not match qubit count");
    }
    BasisIndex x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("basis bitstring must be binary");
        x = (x << 1) | BasisIndex(c == '1');
    }
    return x;
}

inline SparseState state_from_json(const json& j) {
    std::uint32_t qubits = j.at("qubits").get<std::uint32_t>();
    std::vector<SparseState::Term> terms;
    for (const json& t : j.at("terms")) {
        terms.emplace_back(basis_from_string(t.at("basis").get<std::string>(), qubits),
                           amp_from_json(t.at("amp")));
    }
    return SparseState(qubits, std::move(terms));
}

inline json e_table_json() {
    json table = json::array();
    for (int k = 1; k <= 16; ++k) {
        PaperE e = paper_e_index(k);
        table.push_back(
            {{"e", k}, {"index", e.canonical_index}, {"phase", amp_to_json(e.phase)}});
    }
    return table;
}

inline json gem_to_json(const Gem& g) {
    json elements = json::array();
    for (std::uint64_t k = 0; k < g.size(); ++k) {
        elements.push_back({{"index", k}, {"state", state_to_json(g.element(k))}});
    }
    json out = {{"level", g.level()},
                {"qubits", g.qubits()},
                {"count", g.size()},
                {"elements", elements}};
    if (g.level() == 2) out["e_table"] = e_table_json();
    return out;
}

inline json ortho_report_to_json(const OrthoReport& r) {
    json violations = json::array();
    for (const GramViolation& v : r.violations) {
        violations.push_back({{"i", v.i}, {"j", v.j}, {"value", amp_to_json(v.value)}});
    }
    return {{"level", r.level},
            {"element_count", r.element_count},
            {"expected_count", r.expected_count},
            {"checked_inner_products", r.checked_inner_products},
            {"sampled", r.sampled},
            {"all_equal_magnitude", r.all_equal_magnitude},
            {"violations", violations},
            {"pass", r.pass()}};
}

inline json tangle_report_to_json(const TangleReport& r, bool per_element) {
    json out = {{"level", r.level},
                {"checked_elements", r.entries.size()},
                {"all_maximal", r.all_maximal}};
    json failures = json::array();
    for (std::uint64_t i : r.failing_indices()) failures.push_back(i);
    out["failing_indices"] = failures;
    if (per_element) {
        json entries = json::array();
        for (const TangleEntry& e : r.entries) {
            json je = {{"index", e.index}, {"tau", e.tau.str()}};
            if (e.self_phase) je["self_phase"] = amp_to_json(*e.self_phase);
            entries.push_back(je);
        }
        out["elements"] = entries;
    }
    return out;
}

inline json task_report_to_json(const TaskReport& r, std::uint32_t width) {
    json pairs = json::array();
    for (const PairResult& p : r.pairs) {
        json jp = {{"input", basis_to_string(p.input, width)}, {"pass", p.phase.has_value()}};
        if (p.phase) jp["phase"] = amp_to_json(*p.phase);
        pairs.push_back(jp);
    }
    return {{"all_pass", r.all_pass}, {"pairs", pairs}};
}

inline json registry_entry_to_json(const RegistryEntry& e) {
    json pairs = json::array();
    for (std::size_t i = 0; i < e.verification.pairs.size(); ++i) {
        const PairResult& p = e.verification.pairs[i];
        json jp = {{"input", basis_to_string(p.input, e.task.width)},
                   {"e", e.e_labels[i]},
                   {"pass", p.phase.has_value()}};
        if (p.phase) jp["phase"] = amp_to_json(*p.phase);
        pairs.push_back(jp);
    }
    return {{"figure", e.figure},
            {"circuit", serialize(e.circuit)},
            {"gate_count", e.circuit.gates.size()},
            {"h_count", e.circuit.count(GateKind::H)},
            {"cnot_count", e.circuit.count(GateKind::CNOT)},
            {"cp_count", e.circuit.count(GateKind::CP)},
            {"pairs", pairs}};
}

}  // namespace bellgem
