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

#include <cstdint>
#include <vector>

#include "graphcake/instance.hpp"

namespace graphcake {

/// Deterministic instance generation.  All randomness flows through a
/// single xorshift-style generator so that (seed, parameters) pins the
/// instance bit-exactly, independent of any standard-library
/// distribution details.
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ull + 1) {
        for (int i = 0; i < 8; ++i) next();
    }

    std::uint64_t next() {
        // splitmix64 step
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

struct GenParams {
    int n = 4;
    GraphKind kind = GraphKind::Line;
    int segments = 3;
    std::uint64_t seed = 0;
    long max_denominator = 1000;  // grid for breakpoint draws
    long max_weight = 20;         // relative density weights
};

namespace detail {

inline Valuation random_valuation(InstanceGen& gen, const GenParams& p) {
    long grid = p.max_denominator;
    if (grid < p.segments + 1) throw BadShapeParams("generator: grid finer than segment count needed");
    // distinct interior breakpoints on the grid
    std::vector<long> marks;
    while (static_cast<int>(marks.size()) < p.segments - 1) {
        long c = 1 + static_cast<long>(gen.below(static_cast<std::uint64_t>(grid - 1)));
        if (std::find(marks.begin(), marks.end(), c) == marks.end()) marks.push_back(c);
    }
    std::sort(marks.begin(), marks.end());
    std::vector<Rational> bps{Rational(0)};
    for (long c : marks) bps.push_back(Rational(c, grid));
    bps.push_back(Rational(1));
    // strictly positive weights, normalized to total measure 1
    std::vector<Rational> weights;
    Rational total(0);
    for (int s = 0; s < p.segments; ++s) {
        Rational w(1 + static_cast<long>(gen.below(static_cast<std::uint64_t>(p.max_weight))));
        weights.push_back(w);
        total += w * (bps[s + 1] - bps[s]);
    }
    std::vector<Rational> dens;
    dens.reserve(weights.size());
    for (const auto& w : weights) dens.push_back(w / total);
    return Valuation(std::move(bps), std::move(dens));
}

inline std::vector<int> random_parents(InstanceGen& gen, const GenParams& p) {
    int n = p.n;
    std::vector<int> parent(n, 0);
    switch (p.kind) {
        case GraphKind::Line:
            for (int j = 1; j < n; ++j) parent[j - 1] = j + 1;
            break;
        case GraphKind::Star:
            for (int j = 1; j < n; ++j) parent[j - 1] = n;
            break;
        case GraphKind::Tree:
            // random recursive tree in topological index order
            for (int j = 1; j < n; ++j)
                parent[j - 1] = j + 1 + static_cast<int>(gen.below(n - j));
            break;
        case GraphKind::Depth2Tree: {
            // depth-1 agents take the highest non-root indices
            int inner = 1 + static_cast<int>(gen.below(n - 1));
            int leaves = n - 1 - inner;
            for (int j = 1; j <= leaves; ++j)
                parent[j - 1] = n - inner + static_cast<int>(gen.below(inner));
            for (int j = n - inner; j < n; ++j) parent[j - 1] = n;
            break;
        }
        case GraphKind::TwoStar: {
            // like depth-2, but each inner agent carries at most one leaf
            int min_inner = (n - 1 + 1) / 2;
            int inner = min_inner + static_cast<int>(gen.below(n - 1 - min_inner + 1));
            int leaves = n - 1 - inner;
            // choose which inner slots receive a leaf
            std::vector<int> slots(inner);
            for (int i = 0; i < inner; ++i) slots[i] = n - inner + i;
            for (int i = inner - 1; i > 0; --i)
                std::swap(slots[i], slots[gen.below(static_cast<std::uint64_t>(i + 1))]);
            for (int j = 1; j <= leaves; ++j) parent[j - 1] = slots[j - 1];
            for (int j = n - inner; j < n; ++j) parent[j - 1] = n;
            break;
        }
    }
    parent[n - 1] = 0;
    return parent;
}

}  // namespace detail

inline Instance generate_instance(const GenParams& p) {
    if (p.n < 2) throw BadShapeParams("generator: need at least 2 agents");
    if (p.segments < 1) throw BadShapeParams("generator: need at least 1 segment");
    InstanceGen gen(p.seed ^ (static_cast<std::uint64_t>(p.n) << 32) ^
                    static_cast<std::uint64_t>(p.kind));
    std::vector<int> parent = detail::random_parents(gen, p);
    std::vector<Valuation> vals;
    vals.reserve(p.n);
    for (int i = 0; i < p.n; ++i) vals.push_back(detail::random_valuation(gen, p));
    return Instance(SocialGraph(p.kind, std::move(parent)), std::move(vals));
}

inline Instance uniform_instance(GraphKind kind, int n) {
    GenParams p;
    p.n = n;
    p.kind = kind;
    InstanceGen gen(0);
    std::vector<int> parent = detail::random_parents(gen, p);
    std::vector<Valuation> vals(n, Valuation::uniform());
    return Instance(SocialGraph(kind, std::move(parent)), std::move(vals));
}

}  // namespace graphcake
