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

#include <algorithm>
#include <map>

#include "graphcake/allocation.hpp"
#include "graphcake/procedures.hpp"
#include "graphcake/trace.hpp"

namespace graphcake {

/// The Alg2 domination condition: the root's value advantage over a
/// child's bundle covers the min{(l_i+1)/(|D|+1), 1} share of the
/// residue that child can still absorb in the remaining rounds.
inline bool dominates(const Rational& root_value_gap, const Rational& residue_value, int l_i,
                      int d_count) {
    Rational frac = min(Rational(l_i + 1, d_count + 1), Rational(1));
    return root_value_gap >= frac * residue_value;
}

/// Mutable loop state of Alg2: the active trimmer set, the per-child
/// bundle arrays A^(i)_0..A^(i)_{l_i}, the root's bundle, the current
/// residue and the round counter.  Tr only shrinks; A^(i)_0 only ever
/// receives whole selected pieces or Equal-phase subset pieces.
struct TrimmerState {
    std::vector<int> active;                          // Tr, ascending
    std::map<int, std::vector<Piece>> child_bundles;  // i -> A^(i)_0..A^(i)_{l_i}
    Piece root_bundle;                                // A_r
    Piece residue;                                    // R
    int round = 0;

    bool is_trimmer(int i) const {
        return std::find(active.begin(), active.end(), i) != active.end();
    }
};

/// Alg2 for trees of depth at most two (including 2-stars and stars).
/// The root divides the residue into n equal pieces every round; each of
/// her children selects, then trims until dominated and equalizes
/// afterwards; leaves pick after the loop.  The loop runs one final
/// all-Equal round when the last trimmer leaves a residue behind, so the
/// returned allocation is always complete.
inline Allocation alg2(RwOracle& oracle, Alg2Trace* trace = nullptr) {
    const Instance& inst = oracle.instance();
    const SocialGraph& g = inst.graph();
    if (g.kind() != GraphKind::Depth2Tree && g.kind() != GraphKind::TwoStar &&
        g.kind() != GraphKind::Star)
        throw WrongShape("alg2: requires a tree of depth at most two");
    int n = inst.n();
    int root = g.root();
    const std::vector<int>& D = g.children(root);  // ascending
    int d_count = static_cast<int>(D.size());

    std::map<int, int> leaves_of;
    TrimmerState state;
    state.active = D;
    state.residue = Piece::whole_cake();
    for (int i : D) {
        leaves_of[i] = static_cast<int>(g.children(i).size());
        state.child_bundles[i] = std::vector<Piece>(leaves_of[i] + 1);
    }

    if (trace) {
        trace->root = root;
        trace->neighbor_set = D;
    }

    while (!state.active.empty() || !state.residue.is_empty()) {
        ++state.round;
        Alg2Round rec;
        std::uint64_t cuts_before = oracle.physical_cuts();
        if (trace) {
            rec.round = state.round;
            rec.trimmers = state.active;
            rec.root_residue_value = inst.valuation(root).value(state.residue);
        }

        std::vector<Piece> available =
            eq_div(oracle, root, state.residue, n,
                   state.round == 1 ? std::optional<Rational>(Rational(1)) : std::nullopt);

        // Selection, ascending child index; the last piece is the root's.
        std::map<int, SelectResult> picked;
        for (int i : D) {
            picked[i] = select(oracle, i, available, leaves_of[i] + 1);
            available = picked[i].rest;
        }
        state.root_bundle = unite(state.root_bundle, available[0]);

        state.residue = Piece::empty();

        // Trimming: the child's least-valued piece stays whole and goes
        // to A^(i)_0; the root's least-favorite trimmed piece lands on
        // her currently best-looking bundle.
        for (int i : state.active) {
            TrimResult tr = trim(oracle, i, picked[i].chosen);
            std::vector<Piece>& A = state.child_bundles[i];
            A[0] = unite(A[0], tr.trimmed[tr.min_index]);
            std::vector<Piece> rest;
            for (std::size_t p = 0; p < tr.trimmed.size(); ++p)
                if (p != tr.min_index) rest.push_back(tr.trimmed[p]);
            if (!rest.empty()) {
                int l_i = leaves_of[i];
                int w = 1;
                Rational w_val = oracle.cached_value(root, A[1]);
                for (int k = 2; k <= l_i; ++k) {
                    Rational val = oracle.cached_value(root, A[k]);
                    if (val > w_val) { w_val = val; w = k; }
                }
                std::size_t t_pos = 0;
                Rational t_val = oracle.cached_value(root, rest[0]);
                for (std::size_t p = 1; p < rest.size(); ++p) {
                    Rational val = oracle.cached_value(root, rest[p]);
                    if (val < t_val) { t_val = val; t_pos = p; }
                }
                A[w] = unite(A[w], rest[t_pos]);
                std::size_t next = 0;
                for (int k = 1; k <= l_i; ++k) {
                    if (k == w) continue;
                    if (next == t_pos) ++next;
                    A[k] = unite(A[k], rest[next]);
                    ++next;
                }
            }
            state.residue = unite(state.residue, tr.residue);
        }

        // Equaling: dominated children redistribute with no residue; the
        // piece still inside the original cut goes to A^(i)_0.
        for (int i : D) {
            if (state.is_trimmer(i)) continue;
            EqualResult eq = equal(oracle, i, picked[i].chosen);
            std::vector<Piece>& A = state.child_bundles[i];
            A[0] = unite(A[0], eq.equalized[eq.x_star]);
            std::size_t next = 0;
            for (int k = 1; k <= leaves_of[i]; ++k) {
                if (next == eq.x_star) ++next;
                A[k] = unite(A[k], eq.equalized[next]);
                ++next;
            }
        }

        // Judging domination against the residue just produced.
        Rational root_own = oracle.cached_value(root, state.root_bundle);
        Rational res_val = oracle.cached_value(root, state.residue);
        std::vector<int> still;
        for (int i : state.active) {
            bool all_dominated = true;
            for (int k = 1; k <= leaves_of[i]; ++k) {
                Rational gap = root_own - oracle.cached_value(root, state.child_bundles[i][k]);
                if (!dominates(gap, res_val, leaves_of[i], d_count)) all_dominated = false;
            }
            if (!all_dominated) still.push_back(i);
        }
        state.active = std::move(still);

        if (trace) {
            rec.physical_cuts = oracle.physical_cuts() - cuts_before;
            trace->rounds.push_back(std::move(rec));
        }
    }

    // Leaves choose, ascending; each child of the root takes her last
    // remaining bundle.
    Allocation A(n);
    A.bundle(root) = state.root_bundle;
    for (int i : D) {
        std::vector<Piece> avail = state.child_bundles[i];
        for (int leaf : g.children(i)) {
            SelectResult sel = select(oracle, leaf, avail, 1);
            A.bundle(leaf) = sel.chosen[0];
            avail = sel.rest;
        }
        A.bundle(i) = avail[0];
    }
    return A;
}

}  // namespace graphcake
