/*
 * Copyright 2026 The graphcake authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphcake/allocation.hpp"
#include "graphcake/bounds.hpp"
#include "graphcake/instance.hpp"
#include "graphcake/trace.hpp"

// Exact checkers for the fairness definitions and the per-round claims.
// Everything here consumes only (instance, allocation) or (instance,
// trace); no protocol code is ever called, and no tolerances exist: all
// comparisons are exact rational comparisons.

namespace graphcake {

struct EnvyViolation {
    int envier = 0;
    int envied = 0;
    Rational gap;  // v_envier(envied's bundle) - v_envier(own bundle), > 0
};

struct EnvyReport {
    std::vector<EnvyViolation> violations;
    bool ok() const { return violations.empty(); }
};

inline EnvyReport is_locally_envy_free(const Instance& inst, const Allocation& alloc) {
    if (static_cast<int>(alloc.size()) != inst.n())
        throw IncompleteAllocation("envy check: allocation size mismatch");
    if (!alloc.complete_over(Piece::whole_cake()))
        throw IncompleteAllocation("envy check: bundles do not partition the cake");
    EnvyReport rep;
    auto check = [&](int i, int j) {
        const Valuation& v = inst.valuation(i);
        Rational own = v.value(alloc.bundle(i));
        Rational other = v.value(alloc.bundle(j));
        if (own < other) rep.violations.push_back({i, j, other - own});
    };
    for (auto [a, b] : inst.graph().edges()) {
        check(a, b);
        check(b, a);
    }
    return rep;
}

struct FairnessReport {
    bool ok = true;
    std::string condition;  // "C1", "C2" or "C3" of the failing check
    int agent = 0;
    int other = 0;  // offending bundle index
    Rational gap;
    std::string message;
};

namespace detail {

inline FairnessReport fairness_fail(std::string cond, int agent, int other, Rational gap) {
    FairnessReport r;
    r.ok = false;
    r.condition = std::move(cond);
    r.agent = agent;
    r.other = other;
    r.gap = gap;
    r.message = r.condition + " violated: agent a_" + std::to_string(agent) + " vs bundle B_" +
                std::to_string(other) + " (gap " + r.gap.str() + ")";
    return r;
}

inline void require_disjoint(const Allocation& alloc, int n) {
    if (static_cast<int>(alloc.size()) != n)
        throw IncompleteAllocation("fairness check: allocation size mismatch");
    if (!alloc.pairwise_disjoint())
        throw IncompleteAllocation("fairness check: bundles overlap");
}

}  // namespace detail

/// k-Fair on a Line: C1 no agent a_i with i >= k envies a neighbor;
/// C2 agent a_k values B_1..B_k all equally; C3 agent a_{k+1} weakly
/// prefers her bundle to each of B_1..B_k.
inline FairnessReport is_k_fair_line(const Instance& inst, const Allocation& alloc, int k) {
    if (inst.graph().kind() != GraphKind::Line)
        throw NotALine("is_k_fair_line: instance is not a line");
    int n = inst.n();
    detail::require_disjoint(alloc, n);
    for (int i = k; i <= n; ++i) {
        const Valuation& v = inst.valuation(i);
        Rational own = v.value(alloc.bundle(i));
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > n) continue;
            Rational other = v.value(alloc.bundle(j));
            if (own < other) return detail::fairness_fail("C1", i, j, other - own);
        }
    }
    const Valuation& vk = inst.valuation(k);
    Rational own_k = vk.value(alloc.bundle(k));
    for (int l = 1; l <= k; ++l) {
        Rational b = vk.value(alloc.bundle(l));
        if (b != own_k)
            return detail::fairness_fail("C2", k, l, b - own_k);
    }
    if (k + 1 <= n) {
        const Valuation& vk1 = inst.valuation(k + 1);
        Rational own = vk1.value(alloc.bundle(k + 1));
        for (int l = 1; l <= k; ++l) {
            Rational b = vk1.value(alloc.bundle(l));
            if (own < b) return detail::fairness_fail("C3", k + 1, l, b - own);
        }
    }
    return {};
}

/// k-Fair on a Tree, for each agent a_j with j >= k:
/// C1 a_j envies no neighbor; C2 a_j is indifferent across her storage
/// at threshold k-1; C3 a_j weakly prefers her bundle to every bundle
/// stored at an active child.
inline FairnessReport is_k_fair_tree(const Instance& inst, const Allocation& alloc, int k) {
    int n = inst.n();
    detail::require_disjoint(alloc, n);
    const SocialGraph& g = inst.graph();
    StorageView storage(g, k - 1);
    for (int j = k; j <= n; ++j) {
        const Valuation& v = inst.valuation(j);
        Rational own = v.value(alloc.bundle(j));
        // C1 over all tree neighbors
        std::vector<int> nbrs = g.children(j);
        if (g.parent(j) != 0) nbrs.push_back(g.parent(j));
        for (int m : nbrs) {
            Rational other = v.value(alloc.bundle(m));
            if (own < other) return detail::fairness_fail("C1", j, m, other - own);
        }
        // C2 over the agent's own storage
        for (int i : storage.storage_of(j)) {
            Rational b = v.value(alloc.bundle(i));
            if (b != own) return detail::fairness_fail("C2", j, i, b - own);
        }
        // C3 over storages of active children (the full quantifier; the
        // cases below l = k are implied but cheap to test)
        for (int l : g.children(j)) {
            if (l < k) continue;
            for (int i : storage.storage_of(l)) {
                Rational b = v.value(alloc.bundle(i));
                if (own < b) return detail::fairness_fail("C3", j, i, b - own);
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------
// Trace-level claims.

struct ClaimCheck {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample, when failed
};

struct ClaimsReport {
    std::vector<ClaimCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& c : checks) {
            s += (c.pass ? "pass  " : "FAIL  ") + c.name;
            if (!c.pass) s += "  [" + c.detail + "]";
            s += "\n";
        }
        return s;
    }
};

namespace detail {

inline std::string round_id(const DominationRound& r) {
    return "level " + std::to_string(r.level) + ", invocation " + std::to_string(r.invocation) +
           ", round " + std::to_string(r.round);
}

}  // namespace detail

/// Evaluates every per-round inequality the Domination analysis relies
/// on, over all recursive invocations contained in the trace:
///   - residue decay with the exact factor (1 - 1/d) between rounds,
///   - gap monotonicity across consecutive Trim rounds,
///   - the delayed bound v(R^{t + ceil(d ln d)}) <= c_t,
///   - the per-level round count <= ceil(d(1 + ln d)) + 1,
///   - the Equal phase appears at most once and only as the last round.
inline ClaimsReport check_trace_claims(const DominationTrace& trace, const Instance&) {
    ClaimsReport rep;
    ClaimCheck decay{"residue decay v(R^{t+1}) <= (1-1/d) v(R^t)", true, ""};
    ClaimCheck monotone{"gap monotonicity across Trim rounds", true, ""};
    ClaimCheck delayed{"delayed decay v(R^{t+ceil(d ln d)}) <= c_t", true, ""};
    ClaimCheck roundcount{"rounds per level <= ceil(d(1+ln d)) + 1", true, ""};
    ClaimCheck equal_last{"Equal phase unique and last", true, ""};

    std::map<int, std::vector<const DominationRound*>> by_invocation;
    for (const auto& r : trace.rounds) by_invocation[r.invocation].push_back(&r);

    for (auto& [inv, rounds] : by_invocation) {
        std::sort(rounds.begin(), rounds.end(),
                  [](const DominationRound* a, const DominationRound* b) { return a->round < b->round; });
        int d = static_cast<int>(rounds.front()->tracked.size());
        if (roundcount.pass && static_cast<std::int64_t>(rounds.size()) > level_round_bound(d)) {
            roundcount.pass = false;
            roundcount.detail = detail::round_id(*rounds.back()) + ": " +
                                std::to_string(rounds.size()) + " rounds > bound " +
                                std::to_string(level_round_bound(d));
        }
        for (std::size_t t = 0; t < rounds.size(); ++t) {
            const DominationRound& cur = *rounds[t];
            if (equal_last.pass && cur.phase == Phase::Equal && t + 1 != rounds.size()) {
                equal_last.pass = false;
                equal_last.detail = detail::round_id(cur) + ": Equal before the last round";
            }
            if (t + 1 < rounds.size()) {
                const DominationRound& nxt = *rounds[t + 1];
                Rational factor(static_cast<long>(d) - 1, std::max(1L, static_cast<long>(d)));
                if (decay.pass &&
                    !(nxt.observer_residue_value <= factor * cur.observer_residue_value)) {
                    decay.pass = false;
                    decay.detail = detail::round_id(nxt) + ": " + nxt.observer_residue_value.str() +
                                   " > (1-1/d) * " + cur.observer_residue_value.str();
                }
                if (monotone.pass && nxt.phase == Phase::Trim) {
                    for (std::size_t i = 0; i < cur.gaps_end.size(); ++i) {
                        if (nxt.gaps_end[i] < cur.gaps_end[i]) {
                            monotone.pass = false;
                            monotone.detail = detail::round_id(nxt) + ": gap for bundle index " +
                                              std::to_string(cur.tracked[i]) + " fell from " +
                                              cur.gaps_end[i].str() + " to " + nxt.gaps_end[i].str();
                            break;
                        }
                    }
                }
            }
            // delayed decay: compare with the round at t + lag, if present
            std::int64_t lag = delayed_decay_lag(d);
            if (delayed.pass && cur.phase == Phase::Trim && lag > 0 &&
                t + static_cast<std::size_t>(lag) < rounds.size()) {
                const DominationRound& later = *rounds[t + lag];
                if (!(later.observer_residue_value <= cur.max_trim_value)) {
                    delayed.pass = false;
                    delayed.detail = detail::round_id(later) + ": residue " +
                                     later.observer_residue_value.str() + " > c_t " +
                                     cur.max_trim_value.str() + " of round " +
                                     std::to_string(cur.round);
                }
            }
        }
    }
    rep.checks = {decay, monotone, delayed, roundcount, equal_last};
    return rep;
}

/// Per-round checks for Alg2 traces: exact root-side residue decay with
/// factor (1 - (|D|+1)/n), the physical-cut budget 3n per round, the
/// total round ceiling, and for 2-Star graphs the guarantee that the
/// trimmer set strictly shrinks over every two rounds (so <= 2n rounds).
inline ClaimsReport alg2_round_bounds(const Alg2Trace& trace, const SocialGraph& g) {
    ClaimsReport rep;
    int n = g.agent_count();
    long dsz = static_cast<long>(trace.neighbor_set.size());
    ClaimCheck decay{"root residue decay factor (1-(|D|+1)/n)", true, ""};
    ClaimCheck cuts{"physical cuts per round <= 3n", true, ""};
    ClaimCheck total{"total rounds within ceiling", true, ""};
    ClaimCheck twostar{"2-star: |Tr| strictly decreases every 2 rounds", true, ""};

    Rational factor(static_cast<long>(n) - dsz - 1, static_cast<long>(n));
    const auto& rounds = trace.rounds;
    for (std::size_t t = 0; t + 1 < rounds.size(); ++t) {
        if (decay.pass &&
            !(rounds[t + 1].root_residue_value <= factor * rounds[t].root_residue_value)) {
            decay.pass = false;
            decay.detail = "round " + std::to_string(rounds[t + 1].round) + ": " +
                           rounds[t + 1].root_residue_value.str() + " > factor * " +
                           rounds[t].root_residue_value.str();
        }
    }
    for (const auto& r : rounds) {
        if (cuts.pass && r.physical_cuts > static_cast<std::uint64_t>(3 * n)) {
            cuts.pass = false;
            cuts.detail = "round " + std::to_string(r.round) + ": " +
                          std::to_string(r.physical_cuts) + " cuts > 3n";
        }
    }
    bool is_two_star = g.kind() == GraphKind::TwoStar;
    std::int64_t ceiling = is_two_star ? 2 * n : alg2_round_bound(n);
    if (static_cast<std::int64_t>(rounds.size()) > ceiling) {
        total.pass = false;
        total.detail = std::to_string(rounds.size()) + " rounds > " + std::to_string(ceiling);
    }
    if (is_two_star) {
        for (std::size_t t = 0; t + 2 < rounds.size(); ++t) {
            if (!rounds[t].trimmers.empty() &&
                rounds[t + 2].trimmers.size() >= rounds[t].trimmers.size()) {
                twostar.pass = false;
                twostar.detail = "rounds " + std::to_string(rounds[t].round) + " -> " +
                                 std::to_string(rounds[t + 2].round) + ": |Tr| " +
                                 std::to_string(rounds[t].trimmers.size()) + " -> " +
                                 std::to_string(rounds[t + 2].trimmers.size());
                break;
            }
        }
        rep.checks = {decay, cuts, total, twostar};
    } else {
        rep.checks = {decay, cuts, total};
    }
    return rep;
}

}  // namespace graphcake
