// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellgem/exact.hpp"

namespace bellgem {

// Computational basis label. Qubit 1 is the leftmost ket symbol and the most
// significant bit, so the ket |1,0,1,1> is simply the integer 0b1011.
using BasisIndex = std::uint64_t;

constexpr std::uint32_t kMaxQubits = 63;

inline BasisIndex basis_mask(std::uint32_t qubits) {
    return (qubits >= 64) ? ~BasisIndex(0) : ((BasisIndex(1) << qubits) - 1);
}

// Bit position of 1-based qubit q in a width-w register.
inline std::uint32_t qubit_shift(std::uint32_t width, std::uint32_t q) {
    return width - q;
}

inline std::string basis_to_string(BasisIndex x, std::uint32_t qubits) {
    std::string s(qubits, '0');
    for (std::uint32_t q = 0; q < qubits; ++q) {
        if ((x >> (qubits - 1 - q)) & 1) s[q] = '1';
    }
    return s;
}

// Sparse exact state vector: sorted (basis index, amplitude) terms with no
// zero amplitudes stored. Immutable value type; all operations are pure.
class SparseState {
  public:
    using Term = std::pair<BasisIndex, ExactAmp>;

    explicit SparseState(std::uint32_t qubits) : qubits_(qubits) { check_qubits(qubits); }

    // Accumulates arbitrary terms: sorts, merges duplicates, drops exact zeros.
    SparseState(std::uint32_t qubits, std::vector<Term> terms) : qubits_(qubits) {
        check_qubits(qubits);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        terms_.reserve(terms.size());
        for (auto& t : terms) {
            if (t.first > basis_mask(qubits_)) {
                throw std::out_of_range("basis index out of range for qubit count");
            }
            if (!terms_.empty() && terms_.back().first == t.first) {
                terms_.back().second = terms_.back().second + t.second;
                if (terms_.back().second.is_zero()) terms_.pop_back();
            } else if (!t.second.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
#ifdef BELLGEM_AUDIT
        audit();
#endif
    }

    std::uint32_t qubits() const { return qubits_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero_state() const { return terms_.empty(); }
    std::span<const Term> terms() const { return terms_; }

    ExactAmp amplitude(BasisIndex x) const {
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), x,
            [](const Term& t, BasisIndex v) { return t.first < v; });
        if (it != terms_.end() && it->first == x) return it->second;
        return ExactAmp::zero();
    }

    bool operator==(const SparseState&) const = default;

    // Invariant audit: sorted unique indices, in range, no stored zeros.
    void audit() const {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].second.is_zero()) throw std::logic_error("stored zero amplitude");
            if (terms_[i].first > basis_mask(qubits_)) {
                throw std::logic_error("stored index out of range");
            }
            if (i > 0 && terms_[i - 1].first >= terms_[i].first) {
                throw std::logic_error("terms not sorted");
            }
        }
    }

  private:
    static void check_qubits(std::uint32_t qubits) {
        if (qubits == 0 || qubits > kMaxQubits) {
            throw std::out_of_range("qubit count out of supported range");
        }
    }

    std::uint32_t qubits_;
    std::vector<Term> terms_;
};

inline SparseState basis_state(std::uint32_t qubits, BasisIndex index) {
    if (index > basis_mask(qubits)) {
        throw std::out_of_range("basis index out of range for qubit count");
    }
    return SparseState(qubits, {{index, ExactAmp::one()}});
}

// Tensor product; a occupies the high-order (left) bits.
inline SparseState tensor(const SparseState& a, const SparseState& b) {
    if (a.qubits() + b.qubits() > kMaxQubits) {
        throw std::overflow_error("tensor product exceeds qubit capacity");
    }
    std::vector<SparseState::Term> out;
    out.reserve(a.term_count() * b.term_count());
    for (const auto& [ia, va] : a.terms()) {
        BasisIndex high = ia << b.qubits();
        for (const auto& [ib, vb] : b.terms()) {
            out.emplace_back(high | ib, va * vb);
        }
    }
    // a and b are sorted, so the products come out already sorted and unique.
    return SparseState(a.qubits() + b.qubits(), std::move(out));
}

// a + c*b, with exact cancellation of vanishing terms.
inline SparseState add_scaled(const SparseState& a, const SparseState& b, const ExactAmp& c) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("qubit counts differ in state addition");
    }
    std::vector<SparseState::Term> out;
    out.reserve(a.term_count() + b.term_count());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            ExactAmp v = c * ib->second;
            if (!v.is_zero()) out.emplace_back(ib->first, v);
            ++ib;
        } else {
            ExactAmp v = ia->second + c * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, v);
            ++ia;
            ++ib;
        }
    }
    return SparseState(a.qubits(), std::move(out));
}

inline SparseState scale(const SparseState& a, const ExactAmp& c) {
    std::vector<SparseState::Term> out;
    if (!c.is_zero()) {
        out.reserve(a.term_count());
        for (const auto& [x, v] : a.terms()) out.emplace_back(x, c * v);
    }
    return SparseState(a.qubits(), std::move(out));
}

// <a|b> = sum over shared support of conj(a_x) * b_x.
inline ExactAmp inner_product(const SparseState& a, const SparseState& b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("qubit counts differ in inner product");
    }
    ExactAmp acc = ExactAmp::zero();
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc = acc + conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

inline DyadicRational norm_sq(const SparseState& a) {
    DyadicRational acc;
    for (const auto& [x, v] : a.terms()) acc = acc + abs_sq(v);
    return acc;
}

inline bool is_normalized(const SparseState& a) { return norm_sq(a) == 1; }

// If a = u*b for a unit phase u from the ring's unit group, returns u.
// Supports must coincide exactly; inequality is a normal (empty) result.
inline std::optional<ExactAmp> equal_up_to_global_phase(const SparseState& a,
                                                        const SparseState& b) {
    if (a.qubits() != b.qubits() || a.term_count() != b.term_count()) return std::nullopt;
    if (a.is_zero_state()) return ExactAmp::one();
    const auto& a0 = a.terms()[0];
    const auto& b0 = b.terms()[0];
    if (a0.first != b0.first) return std::nullopt;
    for (const ExactAmp& u : phase_units()) {
        if (a0.second == u * b0.second) {
            for (std::size_t k = 1; k < a.term_count(); ++k) {
                if (a.terms()[k].first != b.terms()[k].first) return std::nullopt;
                if (!(a.terms()[k].second == u * b.terms()[k].second)) return std::nullopt;
            }
            return u;
        }
    }
    return std::nullopt;
}

}  // namespace bellgem
