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

#include <optional>

#include "graphcake/allocation.hpp"
#include "graphcake/procedures.hpp"

// Closed-form protocols with data-independent query counts.  Each one
// issues a fixed script of queries, so the ledger reads the same on
// every instance: Alg1 charges 8 cuts / 16 evals, the five-agent line
// protocol 18 / 29, and the star protocol n-1 cuts.  Degenerate inputs
// (an empty residue, tied values) keep the same script; the affected
// queries become no-ops.

namespace graphcake {

namespace detail {

// Division into equal parts that always issues its parts-1 cut queries,
// even on an empty region, plus one eval when the total is not implied.
inline std::vector<Piece> scripted_eq_div(RwOracle& oracle, int agent, const Piece& R, int parts,
                                          std::optional<Rational> known_total) {
    Rational total = known_total ? *known_total : oracle.eval_piece_query(agent, R);
    Rational share = total / Rational(parts);
    std::vector<Piece> out;
    out.reserve(parts);
    Piece remaining = R;
    for (int i = 0; i + 1 < parts; ++i) {
        auto [prefix, suffix] = oracle.cut_piece_query(agent, remaining, share);
        out.push_back(prefix);
        remaining = suffix;
    }
    out.push_back(remaining);
    return out;
}

// Favorite of a list, charging one eval per piece except the last when
// its value is implied by a known total (ties go to the lowest index).
inline std::size_t pick_favorite(RwOracle& oracle, int agent, const std::vector<Piece>& pieces,
                                 bool implied_last) {
    std::vector<Rational> vals;
    vals.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (implied_last && i + 1 == pieces.size())
            vals.push_back(oracle.cached_value(agent, pieces[i]));
        else
            vals.push_back(oracle.eval_piece_query(agent, pieces[i]));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[best] < vals[i]) best = i;
    return best;
}

// Top-2 selection over five freshly divided pieces of the full cake:
// four charged evals, the fifth value implied by normalization.
inline SelectResult select_two_implied(RwOracle& oracle, int agent,
                                       const std::vector<Piece>& X) {
    SelectResult out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (i + 1 == X.size())
            out.values.push_back(oracle.cached_value(agent, X[i]));
        else
            out.values.push_back(oracle.eval_piece_query(agent, X[i]));
    }
    std::vector<std::size_t> order(X.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return out.values[b] < out.values[a]; });
    std::vector<bool> taken(X.size(), false);
    for (std::size_t i = 0; i < 2; ++i) {
        out.chosen.push_back(X[order[i]]);
        out.chosen_positions.push_back(order[i]);
        taken[order[i]] = true;
    }
    for (std::size_t j = 0; j < X.size(); ++j)
        if (!taken[j]) out.rest.push_back(X[j]);
    return out;
}

inline std::vector<Rational> chosen_values(const SelectResult& sel) {
    std::vector<Rational> v;
    for (std::size_t pos : sel.chosen_positions) v.push_back(sel.values[pos]);
    return v;
}

}  // namespace detail

/// Four agents on a line: a_3 cuts, a_2 trims, one Trim round and one
/// Equal round over the residue.  Locally envy-free with exactly 8 cut
/// and 16 eval queries on every instance.
inline Allocation alg1_four_line(RwOracle& oracle) {
    const Instance& inst = oracle.instance();
    if (inst.n() != 4 || inst.graph().kind() != GraphKind::Line)
        throw WrongShape("alg1: requires 4 agents on a line");

    // Trimming phase: a_3 quarters the cake, a_4 picks, a_2 selects two
    // and trims her favorite down to her second.
    std::vector<Piece> q = detail::scripted_eq_div(oracle, 3, Piece::whole_cake(), 4, Rational(1));
    std::size_t i4 = detail::pick_favorite(oracle, 4, q, /*implied_last=*/true);
    Piece p_four = q[i4];
    q.erase(q.begin() + i4);
    SelectResult sel = select(oracle, 2, q, 2);
    Piece p_three = sel.rest[0];
    TrimResult tr = trim_with_values(oracle, 2, sel.chosen, detail::chosen_values(sel));
    Piece p_one = tr.trimmed[0];   // trimmed favorite
    Piece p_two = tr.trimmed[1];   // untrimmed second
    Piece residue = tr.residue;

    // Equaling phase: same flow over the residue, with Equal instead of
    // Trim so nothing is left over.
    std::vector<Piece> tq = detail::scripted_eq_div(oracle, 3, residue, 4, std::nullopt);
    std::size_t j4 = detail::pick_favorite(oracle, 4, tq, /*implied_last=*/false);
    Piece t_four = tq[j4];
    tq.erase(tq.begin() + j4);
    SelectResult sel2 = select(oracle, 2, tq, 2);
    Piece t_three = sel2.rest[0];
    EqualResult eq = equal_with_values(oracle, 2, sel2.chosen, detail::chosen_values(sel2));
    Piece t_one = eq.equalized[0];  // subset of a_2's favorite residue piece
    Piece t_two = eq.equalized[1];

    // Create partition: trimmed round-1 piece pairs with the appended
    // round-2 piece, whole round-1 piece with the subset round-2 piece.
    Piece a1 = unite(p_one, t_two);
    Piece a2 = unite(p_two, t_one);
    Piece a3 = unite(p_three, t_three);
    Piece a4 = unite(p_four, t_four);

    std::size_t pick1 = detail::pick_favorite(oracle, 1, {a1, a2}, /*implied_last=*/false);
    Allocation A(4);
    A.bundle(1) = pick1 == 0 ? a1 : a2;
    A.bundle(2) = pick1 == 0 ? a2 : a1;
    A.bundle(3) = a3;
    A.bundle(4) = a4;
    return A;
}

/// Five agents on a line: a_3 cuts, a_2 and a_4 both trim in the first
/// round; after it a_3 dominates at least one side by a 2/5 margin of
/// her residue value, that side equalizes from round two, and both sides
/// equalize in round three.  Exactly 18 cut and 29 eval queries.
inline Allocation alg_five_line(RwOracle& oracle, int* first_equalizer = nullptr) {
    const Instance& inst = oracle.instance();
    if (inst.n() != 5 || inst.graph().kind() != GraphKind::Line)
        throw WrongShape("alg5: requires 5 agents on a line");

    struct Side {
        int agent;
        Piece whole_bundle;  // untrimmed Trim pieces + subset Equal pieces
        Piece trim_bundle;   // trimmed Trim pieces + appended Equal pieces
        bool equalizes = false;
    };
    Side left{2, {}, {}, false};
    Side right{4, {}, {}, false};
    Piece center;
    Piece residue = Piece::whole_cake();

    for (int round = 1; round <= 3; ++round) {
        std::vector<Piece> pieces = detail::scripted_eq_div(
            oracle, 3, residue, 5,
            round == 1 ? std::optional<Rational>(Rational(1)) : std::nullopt);
        SelectResult sel_l = round == 1 ? detail::select_two_implied(oracle, 2, pieces)
                                        : select(oracle, 2, pieces, 2);
        SelectResult sel_r = select(oracle, 4, sel_l.rest, 2);
        center = unite(center, sel_r.rest[0]);

        Piece round_residue;
        for (Side* s : {&left, &right}) {
            const SelectResult& sel = s->agent == 2 ? sel_l : sel_r;
            if (s->equalizes) {
                EqualResult eq =
                    equal_with_values(oracle, s->agent, sel.chosen, detail::chosen_values(sel));
                s->whole_bundle = unite(s->whole_bundle, eq.equalized[eq.x_star]);
                s->trim_bundle = unite(s->trim_bundle, eq.equalized[eq.x_star == 0 ? 1 : 0]);
            } else {
                TrimResult tr =
                    trim_with_values(oracle, s->agent, sel.chosen, detail::chosen_values(sel));
                s->trim_bundle = unite(s->trim_bundle, tr.trimmed[0]);
                s->whole_bundle = unite(s->whole_bundle, tr.trimmed[1]);
                round_residue = unite(round_residue, tr.residue);
            }
        }

        if (round == 1) {
            // a_3 now dominates at least one side's trimmed bundle by
            // 2/5 of her value of the residue; that side stops trimming.
            Rational own = oracle.cached_value(3, center);
            Rational threshold = Rational(2, 5) * oracle.cached_value(3, round_residue);
            Rational gap_left = own - oracle.cached_value(3, left.trim_bundle);
            Rational gap_right = own - oracle.cached_value(3, right.trim_bundle);
            if (gap_left >= threshold)
                left.equalizes = true;
            else if (gap_right >= threshold)
                right.equalizes = true;
            else
                throw Error("alg5: neither side dominated after round 1");
            if (first_equalizer) *first_equalizer = left.equalizes ? 2 : 4;
        } else if (round == 2) {
            left.equalizes = true;
            right.equalizes = true;
        }
        residue = round_residue;
    }

    std::size_t pick1 =
        detail::pick_favorite(oracle, 1, {left.trim_bundle, left.whole_bundle}, false);
    std::size_t pick5 =
        detail::pick_favorite(oracle, 5, {right.whole_bundle, right.trim_bundle}, false);
    Allocation A(5);
    A.bundle(1) = pick1 == 0 ? left.trim_bundle : left.whole_bundle;
    A.bundle(2) = pick1 == 0 ? left.whole_bundle : left.trim_bundle;
    A.bundle(3) = center;
    A.bundle(5) = pick5 == 0 ? right.whole_bundle : right.trim_bundle;
    A.bundle(4) = pick5 == 0 ? right.trim_bundle : right.whole_bundle;
    return A;
}

/// Star graph: the center divides the cake into n equal pieces, every
/// leaf picks her favorite remaining piece in index order, the center
/// takes the last.  n-1 cuts; each leaf evaluates what is available.
inline Allocation star_cut_and_choose(RwOracle& oracle) {
    const Instance& inst = oracle.instance();
    if (inst.graph().kind() != GraphKind::Star)
        throw WrongShape("star protocol: requires a star graph");
    int n = inst.n();
    std::vector<Piece> available = eq_div(oracle, n, Piece::whole_cake(), n, Rational(1));
    Allocation A(n);
    for (int leaf = 1; leaf < n; ++leaf) {
        SelectResult sel = select(oracle, leaf, available, 1);
        A.bundle(leaf) = sel.chosen[0];
        available = sel.rest;
    }
    A.bundle(n) = available[0];
    return A;
}

}  // namespace graphcake
