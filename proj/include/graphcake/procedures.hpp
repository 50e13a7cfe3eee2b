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

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "graphcake/oracle.hpp"

namespace graphcake {

// Select: m largest-valued pieces according to the agent, ties broken by
// lowest input index.  Charges |X| evals, zero cuts.
//
// Trim: every piece cut down (left prefix kept) to the value of the
// agent's smallest piece; the trimmings are the residue.  Charges
// |X| evals and |X|-1 cuts.
//
// Equal: redistributes the union so all pieces are equal-valued, no
// residue.  Charges |X| evals and |X|-1 cuts; the physical scissor work
// is counted separately by the oracle.
//
// Eq-Div: n equal-valued pieces of a region, left to right.  Charges
// n-1 cuts plus one eval for the region's value unless it is already
// known to the agent.

struct SelectResult {
    std::vector<Piece> chosen;              // by descending value, ties by input index
    std::vector<Piece> rest;                // unchosen, input order
    std::vector<std::size_t> chosen_positions;  // input index of chosen[i]
    std::vector<Rational> values;           // value of every input piece
};

struct TrimResult {
    std::vector<Piece> trimmed;   // trimmed[j] is a left prefix of X[j]
    Piece residue;
    std::size_t min_index = 0;    // lowest argmin of the input values
    Rational min_value;
    std::vector<Rational> values;  // input values
};

struct EqualResult {
    std::vector<Piece> equalized;  // equalized[j] derives from X[j]
    std::size_t x_star = 0;        // lowest input index with value >= average
    Rational average;
    std::vector<Rational> values;  // input values
};

inline SelectResult select(RwOracle& oracle, int agent, const std::vector<Piece>& X,
                           std::size_t m) {
    if (m > X.size())
        throw MTooLarge("select: m=" + std::to_string(m) + " > |X|=" + std::to_string(X.size()));
    SelectResult out;
    out.values.reserve(X.size());
    for (const auto& p : X) out.values.push_back(oracle.eval_piece_query(agent, p));
    std::vector<std::size_t> order(X.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.values[b] < out.values[a];  // stable: ties keep input order
    });
    std::vector<bool> taken(X.size(), false);
    for (std::size_t i = 0; i < m; ++i) {
        out.chosen.push_back(X[order[i]]);
        out.chosen_positions.push_back(order[i]);
        taken[order[i]] = true;
    }
    for (std::size_t j = 0; j < X.size(); ++j)
        if (!taken[j]) out.rest.push_back(X[j]);
    return out;
}

/// Trim with the values already known to the agent (no eval charges).
inline TrimResult trim_with_values(RwOracle& oracle, int agent, const std::vector<Piece>& X,
                                   std::vector<Rational> values) {
    if (X.empty()) throw EmptyInput("trim: empty input");
    TrimResult out;
    out.values = std::move(values);
    out.min_index = 0;
    for (std::size_t j = 1; j < X.size(); ++j)
        if (out.values[j] < out.values[out.min_index]) out.min_index = j;
    out.min_value = out.values[out.min_index];
    out.trimmed.resize(X.size());
    for (std::size_t j = 0; j < X.size(); ++j) {
        if (j == out.min_index) {
            out.trimmed[j] = X[j];
            continue;
        }
        auto [prefix, suffix] = oracle.cut_piece_query(agent, X[j], out.min_value);
        if (out.values[j] == out.min_value) {
            out.trimmed[j] = X[j];  // equal-valued piece stays whole
        } else {
            out.trimmed[j] = prefix;
            out.residue = unite(out.residue, suffix);
        }
    }
    return out;
}

inline TrimResult trim(RwOracle& oracle, int agent, const std::vector<Piece>& X) {
    if (X.empty()) throw EmptyInput("trim: empty input");
    std::vector<Rational> values;
    values.reserve(X.size());
    for (const auto& p : X) values.push_back(oracle.eval_piece_query(agent, p));
    return trim_with_values(oracle, agent, X, std::move(values));
}

/// Equal with the values already known to the agent (no eval charges).
inline EqualResult equal_with_values(RwOracle& oracle, int agent, const std::vector<Piece>& X,
                                     std::vector<Rational> values) {
    if (X.empty()) throw EmptyInput("equal: empty input");
    EqualResult out;
    out.values = std::move(values);
    Rational total(0);
    for (const auto& v : out.values) total += v;
    out.average = total / Rational(static_cast<long>(X.size()));
    out.x_star = X.size();
    for (std::size_t j = 0; j < X.size(); ++j)
        if (out.values[j] >= out.average) { out.x_star = j; break; }

    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < X.size(); ++j)
        if (out.values[j] < out.average) below.push_back(j);

    out.equalized = X;
    if (below.empty()) {
        // all pieces already equal; issue the |X|-1 boundary cuts for the
        // fixed query count, results are no-ops
        for (std::size_t j = 0; j + 1 < X.size(); ++j)
            oracle.cut_piece_query(agent, X[j], out.values[j]);
        return out;
    }

    Piece pool;
    for (std::size_t j = 0; j < X.size(); ++j) {
        if (out.values[j] < out.average) continue;
        auto [prefix, suffix] = oracle.cut_piece_query(agent, X[j], out.average);
        out.equalized[j] = prefix;
        pool = unite(pool, suffix);
    }
    for (std::size_t i = 0; i + 1 < below.size(); ++i) {
        std::size_t j = below[i];
        auto [take, rest] = oracle.cut_piece_query(agent, pool, out.average - out.values[j]);
        out.equalized[j] = unite(X[j], take);
        pool = rest;
    }
    // the last short piece absorbs the remaining pool exactly
    out.equalized[below.back()] = unite(X[below.back()], pool);
    return out;
}

inline EqualResult equal(RwOracle& oracle, int agent, const std::vector<Piece>& X) {
    if (X.empty()) throw EmptyInput("equal: empty input");
    std::vector<Rational> values;
    values.reserve(X.size());
    for (const auto& p : X) values.push_back(oracle.eval_piece_query(agent, p));
    return equal_with_values(oracle, agent, X, std::move(values));
}

inline std::vector<Piece> eq_div(RwOracle& oracle, int agent, const Piece& R, int parts,
                                 std::optional<Rational> known_total = std::nullopt) {
    if (parts < 1) throw BadShapeParams("eq_div: parts must be >= 1");
    if (R.is_empty()) return std::vector<Piece>(parts);
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

}  // namespace graphcake
