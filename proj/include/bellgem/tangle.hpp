// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bellgem/gem.hpp"
#include "bellgem/state.hpp"

namespace bellgem {

// The spin flip: conjugate entrywise, then apply sigma_y on every qubit.
// With sigma_y|0> = i|1> and sigma_y|1> = -i|0>, each term maps as
// |x> -> i^n * (-1)^popcount(x) * |~x| with the amplitude conjugated.
inline SparseState spin_flip(const SparseState& s) {
    const std::uint32_t n = s.qubits();
    const BasisIndex mask = basis_mask(n);
    const ExactAmp in = i_power(n);
    std::vector<SparseState::Term> out;
    out.reserve(s.term_count());
    for (const auto& [x, v] : s.terms()) {
        ExactAmp amp = conj(v) * in;
        if (std::popcount(x) % 2 == 1) amp = -amp;
        out.emplace_back(~x & mask, amp);
    }
    return SparseState(n, std::move(out));
}

// tau = |<s|s~>|^2, exact. Defined for any qubit count; the measure is used
// on even counts in the verification flows.
inline DyadicRational n_tangle(const SparseState& s) {
    if (!is_normalized(s)) {
        throw std::invalid_argument("n-tangle requires a normalized state");
    }
    return abs_sq(inner_product(s, spin_flip(s)));
}

struct TangleEntry {
    std::uint64_t index = 0;
    DyadicRational tau;
    // Global phase of spin_flip(element) relative to the element, when the
    // element maps to a unit multiple of itself.
    std::optional<ExactAmp> self_phase;
};

struct TangleReport {
    std::uint32_t level = 0;
    std::vector<TangleEntry> entries;
    bool all_maximal = true;  // tau = 1 for every checked element

    std::vector<std::uint64_t> failing_indices() const {
        std::vector<std::uint64_t> out;
        for (const auto& e : entries) {
            if (!(e.tau == 1)) out.push_back(e.index);
        }
        return out;
    }
};

inline TangleEntry tangle_entry(std::uint64_t index, const SparseState& s) {
    TangleEntry entry;
    entry.index = index;
    SparseState flipped = spin_flip(s);
    entry.tau = abs_sq(inner_product(s, flipped));
    entry.self_phase = equal_up_to_global_phase(flipped, s);
    return entry;
}

// Checks tau for every element and records the observed self-map phases.
inline TangleReport verify_maximal_tangle(const Gem& g) {
    TangleReport rep;
    rep.level = g.level();
    rep.entries.reserve(g.size());
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        rep.entries.push_back(tangle_entry(i, g.element(i)));
        if (!(rep.entries.back().tau == 1)) rep.all_maximal = false;
    }
    return rep;
}

// Sampled variant for one level above a materialized predecessor.
inline TangleReport verify_maximal_tangle_sampled(const Gem& predecessor,
                                                          std::uint64_t samples,
                                                          std::uint64_t seed) {
    TangleReport rep;
    rep.level = predecessor.level() + 1;
    std::uint64_t d = predecessor.size() * predecessor.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, d - 1);
    rep.entries.reserve(samples);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t i = pick(rng);
        rep.entries.push_back(tangle_entry(i, successor_element(predecessor, i)));
        if (!(rep.entries.back().tau == 1)) rep.all_maximal = false;
    }
    return rep;
}

}  // namespace bellgem
