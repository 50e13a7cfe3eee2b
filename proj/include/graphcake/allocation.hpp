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

#include <vector>

#include "graphcake/piece.hpp"

namespace graphcake {

/// n pairwise-disjoint bundles, bundle i belonging to agent a_{i+1}
/// (agents are 1-based throughout; storage is 0-based).
class Allocation {
public:
    Allocation() = default;
    explicit Allocation(std::size_t n) : bundles_(n) {}
    explicit Allocation(std::vector<Piece> bundles) : bundles_(std::move(bundles)) {}

    std::size_t size() const { return bundles_.size(); }

    const Piece& bundle(int agent) const { return bundles_.at(agent - 1); }
    Piece& bundle(int agent) { return bundles_.at(agent - 1); }

    const std::vector<Piece>& bundles() const { return bundles_; }

    Piece union_of_bundles() const {
        Piece u;
        for (const auto& b : bundles_) u = unite(u, b);
        return u;
    }

    /// Disjointness via measure: the union's width equals the sum of
    /// widths iff no two bundles overlap.
    bool pairwise_disjoint() const {
        Rational total(0);
        for (const auto& b : bundles_) total += b.width();
        return union_of_bundles().width() == total;
    }

    bool complete_over(const Piece& region) const {
        return pairwise_disjoint() && union_of_bundles() == region;
    }

private:
    std::vector<Piece> bundles_;
};

}  // namespace graphcake
