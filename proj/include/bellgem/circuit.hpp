// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bellgem/state.hpp"

namespace bellgem {

// Gate set named by the circuit fixtures: Hadamard, controlled-NOT, and the
// controlled phase shift of pi/2, CP = diag(1, 1, 1, i). CP is symmetric in
// its operands; the stored order is conventional only.
enum class GateKind : std::uint8_t { H, CNOT, CP };

struct Gate {
    GateKind kind;
    std::uint32_t q1;      // H operand, or control
    std::uint32_t q2 = 0;  // target for two-qubit gates

    bool operator==(const Gate&) const = default;
};

inline Gate gate_h(std::uint32_t q) { return {GateKind::H, q, 0}; }
inline Gate gate_cnot(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CNOT, control, target};
}
inline Gate gate_cp(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CP, control, target};
}

struct Circuit {
    std::uint32_t width = 0;
    std::vector<Gate> gates;

    bool operator==(const Circuit&) const = default;

    std::size_t count(GateKind k) const {
        std::size_t c = 0;
        for (const Gate& g : gates) {
            if (g.kind == k) ++c;
        }
        return c;
    }
};

inline void validate_gate(const Gate& g, std::uint32_t width) {
    if (g.q1 < 1 || g.q1 > width) throw std::out_of_range("gate operand out of range");
    if (g.kind != GateKind::H) {
        if (g.q2 < 1 || g.q2 > width) throw std::out_of_range("gate operand out of range");
        if (g.q1 == g.q2) throw std::invalid_argument("two-qubit gate operands must differ");
    }
}

inline SparseState apply_gate(const Gate& g, const SparseState& s) {
    validate_gate(g, s.qubits());
    const std::uint32_t w = s.qubits();
    switch (g.kind) {
        case GateKind::H: {
            const BasisIndex bit = BasisIndex(1) << qubit_shift(w, g.q1);
            const ExactAmp h = ExactAmp::inv_sqrt2();
            std::vector<SparseState::Term> out;
            out.reserve(2 * s.term_count());
            for (const auto& [x, v] : s.terms()) {
                ExactAmp hv = v * h;
                out.emplace_back(x & ~bit, hv);
                out.emplace_back(x | bit, (x & bit) ? -hv : hv);
            }
            return SparseState(w, std::move(out));
        }
        case GateKind::CNOT: {
            const BasisIndex cbit = BasisIndex(1) << qubit_shift(w, g.q1);
            const BasisIndex tbit = BasisIndex(1) << qubit_shift(w, g.q2);
            std::vector<SparseState::Term> out;
            out.reserve(s.term_count());
            for (const auto& [x, v] : s.terms()) {
                out.emplace_back((x & cbit) ? (x ^ tbit) : x, v);
            }
            return SparseState(w, std::move(out));
        }
        case GateKind::CP: {
            const BasisIndex bits = (BasisIndex(1) << qubit_shift(w, g.q1)) |
                                    (BasisIndex(1) << qubit_shift(w, g.q2));
            std::vector<SparseState::Term> out;
            out.reserve(s.term_count());
            for (const auto& [x, v] : s.terms()) {
                out.emplace_back(x, (x & bits) == bits ? v * ExactAmp::i() : v);
            }
            return SparseState(w, std::move(out));
        }
    }
    throw std::logic_error("unreachable gate kind");
}

inline SparseState simulate(const Circuit& c, BasisIndex input) {
    SparseState s = basis_state(c.width, input);
    for (const Gate& g : c.gates) s = apply_gate(g, s);
    return s;
}

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CP: return "CP";
    }
    return "?";
}

// Text format: first line "qubits N", one gate per line with 1-based
// operands, '#' comments and blank lines ignored.
inline std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.width << "\n";
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind) << " " << g.q1;
        if (g.kind != GateKind::H) out << " " << g.q2;
        out << "\n";
    }
    return out.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + msg);
}

inline bool parse_u32(const std::string& tok, std::uint32_t& out) {
    if (tok.empty()) return false;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + std::uint64_t(c - '0');
        if (v > 0xffffffffull) return false;
    }
    out = std::uint32_t(v);
    return true;
}

}  // namespace detail

inline Circuit parse_circuit(const std::string& text) {
    Circuit c;
    bool have_width = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_width) {
            if (tok[0] != "qubits" || tok.size() != 2) {
                detail::parse_fail(line_no, "expected 'qubits N' header");
            }
            if (!detail::parse_u32(tok[1], c.width) || c.width < 1 || c.width > kMaxQubits) {
                detail::parse_fail(line_no, "invalid qubit count '" + tok[1] + "'");
            }
            have_width = true;
            continue;
        }
        Gate g{};
        std::size_t want_ops;
        if (tok[0] == "H") {
            g.kind = GateKind::H;
            want_ops = 1;
        } else if (tok[0] == "CNOT") {
            g.kind = GateKind::CNOT;
            want_ops = 2;
        } else if (tok[0] == "CP") {
            g.kind = GateKind::CP;
            want_ops = 2;
        } else {
            detail::parse_fail(line_no, "unknown gate '" + tok[0] + "'");
        }
        if (tok.size() != want_ops + 1) {
            detail::parse_fail(line_no, std::string(gate_name(g.kind)) + " expects " +
                                            std::to_string(want_ops) + " operand(s)");
        }
        if (!detail::parse_u32(tok[1], g.q1)) {
            detail::parse_fail(line_no, "invalid operand '" + tok[1] + "'");
        }
        if (want_ops == 2 && !detail::parse_u32(tok[2], g.q2)) {
            detail::parse_fail(line_no, "invalid operand '" + tok[2] + "'");
        }
        try {
            validate_gate(g, c.width);
        } catch (const std::invalid_argument&) {
            detail::parse_fail(line_no, "duplicate operand");
        } catch (const std::out_of_range&) {
            detail::parse_fail(line_no, "operand out of range for width " +
                                            std::to_string(c.width));
        }
        c.gates.push_back(g);
    }
    if (!have_width) throw std::runtime_error("line 1: missing 'qubits N' header");
    return c;
}

}  // namespace bellgem
