// Copyright 2026 The bellgem authors.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bellgem/circuit.hpp"
#include "bellgem/gem.hpp"
#include "bellgem/state.hpp"

namespace bellgem {

struct GateSet {
    bool h = false;
    bool cnot = false;
    bool cp = false;
};

// One circuit must map every listed input to its target, each pair up to its
// own global phase (states are prepared in separate runs).
struct SynthesisTask {
    std::uint32_t width = 0;
    std::vector<std::pair<BasisIndex, SparseState>> pairs;
    GateSet gate_set;
    std::uint32_t budget = 0;            // maximum gate count
    std::optional<std::uint32_t> h_cap;  // optional cap on H gates

    void validate() const {
        if (width == 0 || width > kMaxQubits) {
            throw std::out_of_range("task width out of range");
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [input, target] = pairs[i];
            if (input > basis_mask(width)) throw std::out_of_range("task input out of range");
            if (target.qubits() != width) {
                throw std::invalid_argument("task target width mismatch");
            }
            if (!is_normalized(target)) {
                throw std::invalid_argument("task targets must be normalized");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (pairs[j].first == input) {
                    throw std::invalid_argument("task inputs must be distinct");
                }
            }
        }
    }
};

struct PairResult {
    BasisIndex input = 0;
    std::optional<ExactAmp> phase;  // simulated = phase * target
};

struct TaskReport {
    std::vector<PairResult> pairs;
    bool all_pass = true;
};

inline TaskReport verify_task(const Circuit& c, const SynthesisTask& t) {
    if (c.width != t.width) throw std::invalid_argument("circuit width does not match task");
    TaskReport rep;
    rep.pairs.reserve(t.pairs.size());
    for (const auto& [input, target] : t.pairs) {
        SparseState out = simulate(c, input);
        PairResult r;
        r.input = input;
        r.phase = equal_up_to_global_phase(out, target);
        if (!r.phase) rep.all_pass = false;
        rep.pairs.push_back(std::move(r));
    }
    return rep;
}

namespace detail {

struct Hash128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const Hash128&) const = default;
};

struct Hash128Hasher {
    std::size_t operator()(const Hash128& h) const {
        return std::size_t(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ull));
    }
};

// MurmurHash3 x64 128-bit finalization-style mixing over a byte buffer.
inline Hash128 hash_bytes_128(const std::uint8_t* data, std::size_t len) {
    auto fmix = [](std::uint64_t k) {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdull;
        k ^= k >> 33;
        k *= 0xc4ceb9fe1a85ec53ull;
        k ^= k >> 33;
        return k;
    };
    std::uint64_t h1 = 0x87c37b91114253d5ull, h2 = 0x4cf5ad432745937full;
    std::size_t i = 0;
    for (; i + 16 <= len; i += 16) {
        std::uint64_t k1, k2;
        std::memcpy(&k1, data + i, 8);
        std::memcpy(&k2, data + i + 8, 8);
        h1 = (h1 ^ fmix(k1)) * 0x5bd1e995eb382cf9ull + 0x52dce729;
        h2 = (h2 ^ fmix(k2 + h1)) * 0x38b34ae5a1e38b93ull + 0x38495ab5;
    }
    std::uint64_t tail1 = 0, tail2 = 0;
    if (std::size_t rem = len - i; rem > 0) {
        std::uint8_t buf[16] = {0};
        std::memcpy(buf, data + i, rem);
        std::memcpy(&tail1, buf, 8);
        std::memcpy(&tail2, buf + 8, 8);
    }
    h1 = fmix(h1 ^ tail1 ^ len);
    h2 = fmix(h2 ^ tail2 ^ h1);
    return {h1 + h2, h2 + (h1 << 1)};
}

inline void append_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    std::uint8_t b[8];
    std::memcpy(b, &v, 8);
    buf.insert(buf.end(), b, b + 8);
}

// Serializes a state with its global phase normalized away. The unit is
// chosen by minimizing the first amplitude under a fixed total order; two
// unit multiples of a nonzero amplitude are never equal, so the pick is
// unambiguous and quotients exactly by the unit group. Sound for
// deduplication because the goal test is itself phase-blind and later gates
// commute with global phases.
inline void append_phase_canonical(std::vector<std::uint8_t>& buf, const SparseState& s) {
    append_u64(buf, s.term_count());
    if (s.is_zero_state()) return;
    const ExactAmp& first = s.terms()[0].second;
    ExactAmp unit = ExactAmp::one();
    auto key = [](const ExactAmp& a) {
        return std::tuple(a.half_pow(), a.re(), a.im());
    };
    auto best = key(first);
    for (const ExactAmp& u : phase_units()) {
        auto cand = key(u * first);
        if (cand < best) {
            best = cand;
            unit = u;
        }
    }
    for (const auto& [x, v] : s.terms()) {
        ExactAmp a = unit * v;
        append_u64(buf, x);
        append_u64(buf, std::uint64_t(a.re()));
        append_u64(buf, std::uint64_t(a.im()));
        append_u64(buf, a.half_pow());
    }
}

// Minimum number of H gates needed to move a support of size `cur` to one of
// size `target`: each H at most doubles and at most halves the support.
inline std::uint32_t h_gates_needed(std::uint64_t cur, std::uint64_t target) {
    std::uint32_t h = 0;
    while (cur < target) {
        cur *= 2;
        ++h;
    }
    while (cur > target) {
        target *= 2;
        ++h;
    }
    return h;
}

struct SearchContext {
    const SynthesisTask* task = nullptr;
    std::vector<Gate> alphabet;
    std::uint32_t limit = 0;
    std::uint64_t nodes = 0;
    std::uint64_t dedup_cap = 0;
    std::unordered_map<Hash128, std::uint8_t, Hash128Hasher> visited;
    std::vector<Gate> prefix;
    std::vector<std::uint8_t> scratch;
};

inline bool gates_commute(const Gate& a, const Gate& b) {
    auto involves = [](const Gate& g, std::uint32_t q) {
        return g.q1 == q || (g.kind != GateKind::H && g.q2 == q);
    };
    if (a.kind == GateKind::H || b.kind == GateKind::H) {
        const Gate& h = (a.kind == GateKind::H) ? a : b;
        const Gate& o = (a.kind == GateKind::H) ? b : a;
        if (o.kind == GateKind::H) return h.q1 != o.q1;
        return !involves(o, h.q1);
    }
    if (a.kind == GateKind::CP && b.kind == GateKind::CP) return true;  // both diagonal
    if (a.kind == GateKind::CNOT && b.kind == GateKind::CNOT) {
        return a.q2 != b.q1 && b.q2 != a.q1;
    }
    // One CNOT, one CP: they commute unless the CNOT target feeds the phase.
    const Gate& cnot = (a.kind == GateKind::CNOT) ? a : b;
    const Gate& cp = (a.kind == GateKind::CNOT) ? b : a;
    return cnot.q2 != cp.q1 && cnot.q2 != cp.q2;
}

inline bool search_dfs(SearchContext& ctx, std::vector<SparseState>& states,
                       std::uint32_t depth, std::uint32_t h_used, std::uint32_t prev_rank) {
    const SynthesisTask& task = *ctx.task;
    ++ctx.nodes;

    bool all_match = true;
    for (std::size_t p = 0; p < states.size(); ++p) {
        if (!equal_up_to_global_phase(states[p], task.pairs[p].second)) {
            all_match = false;
            break;
        }
    }
    if (all_match) return true;
    if (depth == ctx.limit) return false;

    // Admissible pruning: every pair still needs enough H gates to reshape
    // its support, and the H budget may be capped.
    std::uint32_t remaining = ctx.limit - depth;
    std::uint32_t h_allow = remaining;
    if (task.h_cap && *task.h_cap - h_used < h_allow) h_allow = *task.h_cap - h_used;
    for (std::size_t p = 0; p < states.size(); ++p) {
        if (h_gates_needed(states[p].term_count(), task.pairs[p].second.term_count()) > h_allow) {
            return false;
        }
    }

    // Deduplicate the phase-canonical state tuple.
    if (depth < ctx.limit && ctx.visited.size() < ctx.dedup_cap) {
        ctx.scratch.clear();
        for (const SparseState& s : states) append_phase_canonical(ctx.scratch, s);
        Hash128 key = hash_bytes_128(ctx.scratch.data(), ctx.scratch.size());
        auto [it, inserted] = ctx.visited.try_emplace(key, std::uint8_t(depth));
        if (!inserted) {
            if (it->second <= depth) return false;
            it->second = std::uint8_t(depth);
        }
    }

    const Gate* prev = ctx.prefix.empty() ? nullptr : &ctx.prefix.back();
    for (std::uint32_t gi = 0; gi < ctx.alphabet.size(); ++gi) {
        const Gate& g = ctx.alphabet[gi];
        if (g.kind == GateKind::H && task.h_cap && h_used >= *task.h_cap) continue;
        if (prev) {
            // A repeated self-inverse gate is the identity.
            if (g == *prev && g.kind != GateKind::CP) continue;
            // Canonical ordering of commuting neighbors keeps one sequence
            // per equivalence class and preserves the lexicographic minimum.
            if (gi < prev_rank && gates_commute(*prev, g)) continue;
        }
        std::vector<SparseState> next;
        next.reserve(states.size());
        for (const SparseState& s : states) next.push_back(apply_gate(g, s));
        ctx.prefix.push_back(g);
        bool found = search_dfs(ctx, next, depth + 1,
                                h_used + (g.kind == GateKind::H ? 1 : 0), gi);
        if (found) return true;
        ctx.prefix.pop_back();
    }
    return false;
}

}  // namespace detail

struct SearchResult {
    std::optional<Circuit> circuit;
    std::uint64_t nodes = 0;
    std::uint32_t budget = 0;
};

// Iterative-deepening search over gate sequences in lexicographic order
// (H < CNOT < CP, operands ascending). Returns the shortest solution, ties
// broken by lexicographically least gate sequence; deterministic.
inline SearchResult search_detailed(const SynthesisTask& task,
                                    std::uint64_t dedup_cap = 30'000'000) {
    task.validate();
    if (task.budget < 1) throw std::invalid_argument("search budget must be at least 1");
    detail::SearchContext ctx;
    ctx.task = &task;
    ctx.dedup_cap = dedup_cap;
    if (task.gate_set.h) {
        for (std::uint32_t q = 1; q <= task.width; ++q) ctx.alphabet.push_back(gate_h(q));
    }
    if (task.gate_set.cnot) {
        for (std::uint32_t c = 1; c <= task.width; ++c) {
            for (std::uint32_t t = 1; t <= task.width; ++t) {
                if (c != t) ctx.alphabet.push_back(gate_cnot(c, t));
            }
        }
    }
    if (task.gate_set.cp) {
        for (std::uint32_t c = 1; c <= task.width; ++c) {
            for (std::uint32_t t = c + 1; t <= task.width; ++t) {
                ctx.alphabet.push_back(gate_cp(c, t));
            }
        }
    }

    std::vector<SparseState> start;
    start.reserve(task.pairs.size());
    for (const auto& [input, target] : task.pairs) {
        start.push_back(basis_state(task.width, input));
    }

    SearchResult result;
    result.budget = task.budget;
    for (std::uint32_t limit = 0; limit <= task.budget; ++limit) {
        ctx.limit = limit;
        ctx.visited.clear();
        ctx.prefix.clear();
        std::vector<SparseState> states = start;
        if (detail::search_dfs(ctx, states, 0, 0, 0)) {
            result.circuit = Circuit{task.width, ctx.prefix};
            result.nodes = ctx.nodes;
            return result;
        }
    }
    result.nodes = ctx.nodes;
    return result;
}

inline std::optional<Circuit> search(const SynthesisTask& task) {
    return search_detailed(task).circuit;
}

}  // namespace bellgem
