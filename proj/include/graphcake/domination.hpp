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

#include <functional>
#include <map>
#include <optional>

#include "graphcake/allocation.hpp"
#include "graphcake/bounds.hpp"
#include "graphcake/procedures.hpp"
#include "graphcake/trace.hpp"

namespace graphcake {

/// Optional instrumentation for the recursive protocol: a trace sink for
/// per-round telemetry and a hook fired with every level's returned
/// allocation (each is an allocation of the region that call received).
struct DominationContext {
    DominationTrace* trace = nullptr;
    std::function<void(int level, const Piece& region, const Allocation&)> on_level_return;
    int next_invocation = 0;
    std::uint64_t total_rounds = 0;
    std::map<int, int> max_rounds_per_level;
};

namespace detail {

// Base level: the root agent divides R into n equal pieces, assigned by
// index.  Every recursion bottoms out here; a_n is the only agent who
// ever cuts the residue into n parts.
inline Allocation domination_base(RwOracle& oracle, const Piece& R, DominationContext* ctx) {
    int n = oracle.instance().n();
    auto pieces = eq_div(oracle, n, R, n);
    Allocation A(n);
    for (int j = 1; j <= n; ++j) A.bundle(j) = pieces[j - 1];
    if (ctx && ctx->on_level_return) ctx->on_level_return(n, R, A);
    return A;
}

// Shared body for the Line and Tree recursions.  The two variants differ
// only in which bundle pool the level selects from and which indices it
// fills: on a line the pool is {B_1..B_{k+1}} and the level fills 1..k;
// on a tree the pool is the parent's storage and the level fills D_k.
struct LevelShape {
    int observer = 0;            // the agent whose domination ends the loop
    std::vector<int> fill;       // bundle indices this level distributes to, ascending
    std::vector<int> pool;       // bundle indices a_k selects from, ascending
};

template <typename Recurse>
Allocation domination_level(RwOracle& oracle, const Piece& region, int k, const LevelShape& shape,
                            DominationContext* ctx, Recurse&& recurse) {
    const Instance& inst = oracle.instance();
    const Valuation& v_obs = inst.valuation(shape.observer);
    int n = inst.n();
    int d = static_cast<int>(shape.fill.size());
    int invocation = ctx ? ctx->next_invocation++ : 0;

    Allocation A(n);
    Piece R = region;
    int c = 0;
    int t = 0;
    while (!R.is_empty()) {
        ++t;
        DominationRound rec;
        std::uint64_t cuts_before = oracle.physical_cuts();
        if (ctx && ctx->trace) {
            rec.level = k;
            rec.invocation = invocation;
            rec.round = t;
            rec.observer = shape.observer;
            rec.counter_c = c;
            rec.residue_start = R;
            rec.observer_residue_value = v_obs.value(R);
            rec.tracked = shape.fill;
        }

        Allocation B = recurse(R);

        // Selection: a_k takes her d favorites from the pool; everything
        // outside her subtree is handed over unspoiled (the unchosen pool
        // bundles permuted into the freed indices, which the observer
        // values identically).
        std::vector<Piece> pool_pieces;
        pool_pieces.reserve(shape.pool.size());
        for (int idx : shape.pool) pool_pieces.push_back(B.bundle(idx));
        SelectResult sel = select(oracle, k, pool_pieces, d);

        std::vector<int> free_slots;
        for (int idx : shape.pool)
            if (!std::binary_search(shape.fill.begin(), shape.fill.end(), idx))
                free_slots.push_back(idx);
        for (int j = 1; j <= n; ++j) {
            if (std::binary_search(shape.fill.begin(), shape.fill.end(), j)) continue;
            auto slot = std::find(free_slots.begin(), free_slots.end(), j);
            const Piece& handed = slot == free_slots.end()
                                      ? B.bundle(j)
                                      : sel.rest[slot - free_slots.begin()];
            A.bundle(j) = unite(A.bundle(j), handed);
        }

        // Domination test for the observer: does any tracked bundle still
        // sit within one residue's worth of her own?
        Rational obs_own = oracle.cached_value(shape.observer, A.bundle(shape.observer));
        Rational obs_res = oracle.cached_value(shape.observer, R);
        bool dominated = true;
        for (int idx : shape.fill) {
            Rational gap = obs_own - oracle.cached_value(shape.observer, A.bundle(idx));
            if (gap <= obs_res) dominated = false;
        }

        if (!dominated) {
            TrimResult tr = trim(oracle, k, sel.chosen);
            R = tr.residue;
            // the observer's least-favorite trimmed piece goes to the
            // cycling bundle, the rest ascend
            std::size_t min_pos = 0;
            Rational min_val;
            for (std::size_t i = 0; i < tr.trimmed.size(); ++i) {
                Rational val = oracle.cached_value(shape.observer, tr.trimmed[i]);
                if (i == 0 || val < min_val) {
                    min_val = val;
                    min_pos = i;
                }
            }
            int w_slot = shape.fill[c % d];
            A.bundle(w_slot) = unite(A.bundle(w_slot), tr.trimmed[min_pos]);
            std::size_t next = 0;
            for (int idx : shape.fill) {
                if (idx == w_slot) continue;
                if (next == min_pos) ++next;
                A.bundle(idx) = unite(A.bundle(idx), tr.trimmed[next]);
                ++next;
            }
            ++c;
            if (ctx && ctx->trace) {
                rec.phase = Phase::Trim;
                // c_t: worst value lost to trimming as the observer sees it.
                // She values every pool bundle of B equally, so any pool
                // bundle stands in for the piece she received this round.
                rec.max_trim_value = v_obs.value(B.bundle(shape.pool.front())) -
                                     v_obs.value(tr.trimmed[min_pos]);
                for (const auto& piece : tr.trimmed)
                    rec.handed_values.push_back(v_obs.value(piece));
            }
        } else {
            EqualResult eq = equal(oracle, k, sel.chosen);
            std::size_t i = 0;
            for (int idx : shape.fill) A.bundle(idx) = unite(A.bundle(idx), eq.equalized[i++]);
            // Equal consumes the round's entire material: the loop ends here.
            R = Piece::empty();
            if (ctx && ctx->trace) {
                rec.phase = Phase::Equal;
                for (const auto& piece : eq.equalized)
                    rec.handed_values.push_back(v_obs.value(piece));
            }
        }

        if (ctx && ctx->trace) {
            Rational own = v_obs.value(A.bundle(shape.observer));
            rec.observer_own_end = own;
            for (int idx : shape.fill)
                rec.gaps_end.push_back(own - v_obs.value(A.bundle(idx)));
            rec.physical_cuts = oracle.physical_cuts() - cuts_before;
            ctx->trace->rounds.push_back(std::move(rec));
        }
    }
    if (ctx) {
        ctx->total_rounds += t;
        int& level_max = ctx->max_rounds_per_level[k];
        level_max = std::max(level_max, t);
        if (ctx->on_level_return) ctx->on_level_return(k, region, A);
    }
    return A;
}

}  // namespace detail

/// Domination(R, k) for agents on a Line: returns a k-Fair allocation of
/// R.  Agent a_k repeatedly selects her k favorites among the first k+1
/// bundles of the (k+1)-Fair allocation of the current residue, trimming
/// until agent a_{k+1} dominates every one of the first k bundles, then
/// equalizing once.
inline Allocation domination_line(RwOracle& oracle, const Piece& R, int k,
                                  DominationContext* ctx = nullptr) {
    const Instance& inst = oracle.instance();
    if (inst.graph().kind() != GraphKind::Line)
        throw NotALine("domination_line: instance graph is not a line");
    int n = inst.n();
    if (k < 1 || k > n) throw BadShapeParams("domination_line: k out of range");
    if (k == n) return detail::domination_base(oracle, R, ctx);

    detail::LevelShape shape;
    shape.observer = k + 1;
    for (int i = 1; i <= k; ++i) shape.fill.push_back(i);
    for (int i = 1; i <= k + 1; ++i) shape.pool.push_back(i);
    return detail::domination_level(oracle, R, k, shape, ctx, [&](const Piece& residue) {
        return domination_line(oracle, residue, k + 1, ctx);
    });
}

/// Domination(R, k) for agents on any rooted tree with topological
/// indexing.  Agent a_k selects d_k bundles from her parent's storage,
/// re-indexes them onto D_k, and trims until the parent dominates every
/// bundle in D_k.  On a Line this reduces to domination_line exactly.
inline Allocation domination_tree(RwOracle& oracle, const Piece& R, int k,
                                  DominationContext* ctx = nullptr) {
    const Instance& inst = oracle.instance();
    int n = inst.n();
    if (k < 1 || k > n) throw BadShapeParams("domination_tree: k out of range");
    TopologyReport topo = inst.graph().topological_check();
    if (!topo.ok) throw NotATree("domination_tree: " + topo.message);
    if (k == n) return detail::domination_base(oracle, R, ctx);

    detail::LevelShape shape;
    shape.observer = inst.graph().parent(k);
    shape.fill = inst.graph().descendants(k);
    shape.pool = inst.graph().inact(k, shape.observer);
    return detail::domination_level(oracle, R, k, shape, ctx, [&](const Piece& residue) {
        return domination_tree(oracle, residue, k + 1, ctx);
    });
}

}  // namespace graphcake
