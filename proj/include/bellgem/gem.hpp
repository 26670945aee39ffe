// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bellgem/state.hpp"

namespace bellgem {

// Levels above 4 would need 2^32-dimensional indexing and ~4e9 elements;
// the bound is a validated input constraint, not a silent truncation.
constexpr std::uint32_t kMaxGemLevel = 4;

inline std::uint32_t gem_qubits(std::uint32_t n) { return 1u << n; }

// 2^(2^n), the cardinality proved by the counting argument
// d' + d'(d'-1) = d'^2 over the predecessor cardinality d'.
inline std::uint64_t expected_cardinality(std::uint32_t n) {
    if (n < 1) throw std::out_of_range("gem level must be at least 1");
    if (n > 5) throw std::overflow_error("gem cardinality exceeds 64-bit range");
    return std::uint64_t(1) << (std::uint64_t(1) << n);
}

// The four entangler maps. P/N build the symmetric-diagonal form
// (aa +/- bb)/sqrt2, S/A the exchange form (ab +/- ba)/sqrt2.
enum class EntanglerMap : std::uint8_t { P, N, S, A };

inline SparseState apply_entangler(EntanglerMap m, const SparseState& a, const SparseState& b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument("entangler inputs must have equal qubit counts");
    }
    if (a == b) {
        throw std::invalid_argument("entangler inputs must be distinct elements");
    }
    if (!is_normalized(a) || !is_normalized(b)) {
        throw std::invalid_argument("entangler inputs must be normalized");
    }
    ExactAmp sign = (m == EntanglerMap::P || m == EntanglerMap::S) ? ExactAmp::one()
                                                                   : -ExactAmp::one();
    SparseState sum = (m == EntanglerMap::P || m == EntanglerMap::N)
                          ? add_scaled(tensor(a, a), tensor(b, b), sign)
                          : add_scaled(tensor(a, b), tensor(b, a), sign);
    return scale(sum, ExactAmp::inv_sqrt2());
}

inline SparseState map_p(const SparseState& a, const SparseState& b) {
    return apply_entangler(EntanglerMap::P, a, b);
}
inline SparseState map_n(const SparseState& a, const SparseState& b) {
    return apply_entangler(EntanglerMap::N, a, b);
}
inline SparseState map_s(const SparseState& a, const SparseState& b) {
    return apply_entangler(EntanglerMap::S, a, b);
}
inline SparseState map_a(const SparseState& a, const SparseState& b) {
    return apply_entangler(EntanglerMap::A, a, b);
}

// Ordered orthonormal basis at one recursion level.
class Gem {
  public:
    Gem(std::uint32_t level, std::vector<SparseState> elements)
        : level_(level), elements_(std::move(elements)) {}

    std::uint32_t level() const { return level_; }
    std::uint32_t qubits() const { return gem_qubits(level_); }
    std::uint64_t size() const { return elements_.size(); }
    const SparseState& element(std::uint64_t k) const { return elements_.at(k); }
    const std::vector<SparseState>& elements() const { return elements_; }

  private:
    std::uint32_t level_;
    std::vector<SparseState> elements_;
};

// The Bell basis in canonical order [Phi+, Phi-, Psi+, Psi-].
inline Gem bell_basis() {
    const ExactAmp h = ExactAmp::inv_sqrt2();
    std::vector<SparseState> e;
    e.push_back(SparseState(2, {{0b00, h}, {0b11, h}}));
    e.push_back(SparseState(2, {{0b00, h}, {0b11, -h}}));
    e.push_back(SparseState(2, {{0b01, h}, {0b10, h}}));
    e.push_back(SparseState(2, {{0b01, h}, {0b10, -h}}));
    return Gem(1, std::move(e));
}

// How canonical element k of a successor gem is built from predecessor
// elements i and j (i < j for the exchange forms).
struct ElementRecipe {
    EntanglerMap map;
    std::uint64_t i;
    std::uint64_t j;
};

// Canonical ordering: the symmetric-diagonal block first, pairing consecutive
// predecessor indices (2m, 2m+1) with '+' before '-', then the exchange block
// over all pairs i < j in lexicographic order, again '+' before '-'. The
// consecutive pairing partitions the predecessor set, which is what makes the
// diagonal-form states mutually orthogonal.
inline ElementRecipe element_recipe(std::uint64_t predecessor_count, std::uint64_t k) {
    if (k < predecessor_count) {
        std::uint64_t m = k / 2;
        return {k % 2 == 0 ? EntanglerMap::P : EntanglerMap::N, 2 * m, 2 * m + 1};
    }
    std::uint64_t t = k - predecessor_count;
    std::uint64_t rank = t / 2;
    // Unrank the lexicographic pair (i, j), i < j.
    std::uint64_t i = 0;
    std::uint64_t row = predecessor_count - 1;
    while (rank >= row) {
        rank -= row;
        --row;
        ++i;
    }
    std::uint64_t j = i + 1 + rank;
    return {t % 2 == 0 ? EntanglerMap::S : EntanglerMap::A, i, j};
}

inline SparseState successor_element(const Gem& predecessor, std::uint64_t k) {
    ElementRecipe r = element_recipe(predecessor.size(), k);
    return apply_entangler(r.map, predecessor.element(r.i), predecessor.element(r.j));
}

// Builds the full successor gem, optionally over an explicit diagonal-form
// pairing (which must partition the predecessor indices).
inline Gem successor(const Gem& predecessor,
                     const std::vector<std::pair<std::uint64_t, std::uint64_t>>* pairing = nullptr) {
    std::uint64_t dp = predecessor.size();
    std::vector<SparseState> out;
    out.reserve(dp * dp);
    if (pairing) {
        if (pairing->size() != dp / 2) {
            throw std::invalid_argument("diagonal-form pairing must cover all predecessor elements");
        }
        std::vector<bool> seen(dp, false);
        for (auto [i, j] : *pairing) {
            if (i >= dp || j >= dp || i == j || seen[i] || seen[j]) {
                throw std::invalid_argument("diagonal-form pairing must partition the predecessor");
            }
            seen[i] = seen[j] = true;
            out.push_back(map_p(predecessor.element(i), predecessor.element(j)));
            out.push_back(map_n(predecessor.element(i), predecessor.element(j)));
        }
        for (std::uint64_t i = 0; i < dp; ++i) {
            for (std::uint64_t j = i + 1; j < dp; ++j) {
                out.push_back(map_s(predecessor.element(i), predecessor.element(j)));
                out.push_back(map_a(predecessor.element(i), predecessor.element(j)));
            }
        }
    } else {
        for (std::uint64_t k = 0; k < dp * dp; ++k) {
            out.push_back(successor_element(predecessor, k));
        }
    }
    return Gem(predecessor.level() + 1, std::move(out));
}

inline Gem generate(std::uint32_t n) {
    if (n < 1 || n > kMaxGemLevel) {
        throw std::out_of_range("level exceeds supported range");
    }
    Gem g = bell_basis();
    for (std::uint32_t lvl = 2; lvl <= n; ++lvl) g = successor(g);
    return g;
}

struct GramViolation {
    std::uint64_t i;
    std::uint64_t j;
    ExactAmp value;  // <i|j>, expected 1 on the diagonal and 0 elsewhere
};

struct OrthoReport {
    std::uint32_t level = 0;
    std::uint64_t element_count = 0;
    std::uint64_t expected_count = 0;
    std::uint64_t checked_inner_products = 0;
    bool sampled = false;
    std::vector<GramViolation> violations;
    // Observed, not asserted: whether every element's nonzero amplitudes share
    // a single squared magnitude.
    bool all_equal_magnitude = true;

    bool pass() const { return element_count == expected_count && violations.empty(); }
};

inline bool has_equal_magnitudes(const SparseState& s) {
    if (s.is_zero_state()) return true;
    DyadicRational first = abs_sq(s.terms()[0].second);
    for (const auto& [x, v] : s.terms()) {
        if (!(abs_sq(v) == first)) return false;
    }
    return true;
}

// Exhaustive Gram-matrix check: all d(d+1)/2 exact inner products.
inline OrthoReport verify_orthonormal(const Gem& g) {
    OrthoReport rep;
    rep.level = g.level();
    rep.element_count = g.size();
    rep.expected_count = expected_cardinality(g.level());
    for (std::uint64_t i = 0; i < g.size(); ++i) {
        if (!has_equal_magnitudes(g.element(i))) rep.all_equal_magnitude = false;
        for (std::uint64_t j = i; j < g.size(); ++j) {
            ExactAmp v = inner_product(g.element(i), g.element(j));
            ++rep.checked_inner_products;
            ExactAmp want = (i == j) ? ExactAmp::one() : ExactAmp::zero();
            if (!(v == want)) rep.violations.push_back({i, j, v});
        }
    }
    return rep;
}

// Sampled check for one level above a materialized predecessor: the diagonal
// of `samples` random elements plus `samples` random off-diagonal pairs.
inline OrthoReport verify_orthonormal_sampled(const Gem& predecessor, std::uint64_t samples,
                                              std::uint64_t seed) {
    OrthoReport rep;
    rep.level = predecessor.level() + 1;
    rep.sampled = true;
    std::uint64_t d = predecessor.size() * predecessor.size();
    rep.element_count = d;
    rep.expected_count = expected_cardinality(rep.level);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, d - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t i = pick(rng);
        SparseState e = successor_element(predecessor, i);
        if (!has_equal_magnitudes(e)) rep.all_equal_magnitude = false;
        ExactAmp v = inner_product(e, e);
        ++rep.checked_inner_products;
        if (!(v == ExactAmp::one())) rep.violations.push_back({i, i, v});
    }
    for (std::uint64_t s = 0; s < samples; ++s) {
        std::uint64_t i = pick(rng);
        std::uint64_t j = pick(rng);
        if (i == j) j = (j + 1) % d;
        ExactAmp v = inner_product(successor_element(predecessor, i),
                                   successor_element(predecessor, j));
        ++rep.checked_inner_products;
        if (!(v == ExactAmp::zero())) rep.violations.push_back({i, j, v});
    }
    return rep;
}

// The printed level-2 element list: e_k built from Bell states, expanding
// each displayed pair with '+' before '-'.
inline SparseState paper_e_state(int k) {
    if (k < 1 || k > 16) throw std::out_of_range("e-label must be in 1..16");
    struct Entry {
        EntanglerMap even_map;  // map for odd k ('+'); '-' variant for even k
        int a;
        int b;
    };
    // Row r covers e_{2r+1}, e_{2r+2}; Bell indices in canonical order.
    static constexpr Entry rows[8] = {
        {EntanglerMap::P, 0, 1},  // (Phi+ Phi+ +/- Phi- Phi-)
        {EntanglerMap::P, 2, 3},  // (Psi+ Psi+ +/- Psi- Psi-)
        {EntanglerMap::S, 0, 1},  // (Phi+ Phi- +/- Phi- Phi+)
        {EntanglerMap::S, 2, 3},  // (Psi+ Psi- +/- Psi- Psi+)
        {EntanglerMap::S, 2, 1},  // (Psi+ Phi- +/- Phi- Psi+)
        {EntanglerMap::S, 0, 3},  // (Phi+ Psi- +/- Psi- Phi+)
        {EntanglerMap::S, 0, 2},  // (Phi+ Psi+ +/- Psi+ Phi+)
        {EntanglerMap::S, 3, 1},  // (Psi- Phi- +/- Phi- Psi-)
    };
    static const Gem bell = bell_basis();
    const Entry& row = rows[(k - 1) / 2];
    bool plus = (k % 2 == 1);
    EntanglerMap m = row.even_map;
    if (!plus) m = (m == EntanglerMap::P) ? EntanglerMap::N : EntanglerMap::A;
    return apply_entangler(m, bell.element(row.a), bell.element(row.b));
}

struct PaperE {
    std::uint64_t canonical_index;  // position in generate(2)
    ExactAmp phase;                 // e_k = phase * canonical element
};

// Locates e_k inside the canonical level-2 gem; validated by the phase-aware
// equality check on every call path.
inline PaperE paper_e_index(int k) {
    static const Gem g2 = generate(2);
    SparseState e = paper_e_state(k);
    for (std::uint64_t idx = 0; idx < g2.size(); ++idx) {
        if (auto u = equal_up_to_global_phase(e, g2.element(idx))) {
            return {idx, *u};
        }
    }
    throw std::logic_error("e-label does not match any canonical level-2 element");
}

}  // namespace bellgem
