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

#include <numeric>
#include <vector>

#include "graphcake/errors.hpp"
#include "graphcake/social_graph.hpp"
#include "graphcake/valuation.hpp"

namespace graphcake {

/// A cake-division instance: n agents on a rooted-tree social graph,
/// each with a normalized piecewise-constant valuation.
class Instance {
public:
    Instance(SocialGraph graph, std::vector<Valuation> valuations)
        : graph_(std::move(graph)), valuations_(std::move(valuations)) {
        if (static_cast<int>(valuations_.size()) != graph_.agent_count())
            throw BadShapeParams("Instance: one valuation per agent required");
        original_labels_.resize(valuations_.size());
        std::iota(original_labels_.begin(), original_labels_.end(), 1);
    }

    Instance(SocialGraph graph, std::vector<Valuation> valuations, std::vector<int> original_labels)
        : Instance(std::move(graph), std::move(valuations)) {
        if (original_labels.size() == valuations_.size())
            original_labels_ = std::move(original_labels);
    }

    int n() const { return graph_.agent_count(); }
    const SocialGraph& graph() const { return graph_; }
    const Valuation& valuation(int agent) const { return valuations_.at(agent - 1); }
    const std::vector<Valuation>& valuations() const { return valuations_; }

    /// Input label of agent a_i, for reporting when the instance was
    /// re-indexed from an arbitrary labeling.
    int original_label(int agent) const { return original_labels_.at(agent - 1); }

private:
    SocialGraph graph_;
    std::vector<Valuation> valuations_;
    std::vector<int> original_labels_;
};

}  // namespace graphcake
