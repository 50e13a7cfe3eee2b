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
#include <numeric>
#include <string>
#include <vector>

#include "graphcake/errors.hpp"

namespace graphcake {

enum class GraphKind { Line, Tree, Depth2Tree, TwoStar, Star };

inline std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Line: return "line";
        case GraphKind::Tree: return "tree";
        case GraphKind::Depth2Tree: return "depth2";
        case GraphKind::TwoStar: return "2star";
        case GraphKind::Star: return "star";
    }
    return "?";
}

struct TopologyReport {
    bool ok = true;
    std::string message;
};

/// Rooted tree over agents a_1..a_n in topological index order: the root
/// is a_n and every agent's index exceeds all indices in its subtree.
/// A Line is stored as the path rooted at a_n (parent of a_j is a_{j+1}).
///
/// Agent indices are 1-based everywhere.  parent(n) == 0 marks the root.
class SocialGraph {
public:
    SocialGraph(GraphKind kind, std::vector<int> parent_of)
        : kind_(kind), parent_(std::move(parent_of)) {
        int n = agent_count();
        if (n < 1) throw BadShapeParams("SocialGraph: empty agent set");
        TopologyReport rep = topological_check_impl(kind_, parent_);
        if (!rep.ok) throw BadShapeParams("SocialGraph: " + rep.message);
        children_.assign(n + 1, {});
        for (int j = 1; j < n; ++j) children_[parent_[j - 1]].push_back(j);
        for (auto& c : children_) std::sort(c.begin(), c.end());
        desc_count_.assign(n + 1, 1);
        for (int j = 1; j <= n; ++j)
            for (int c : children_[j]) desc_count_[j] += desc_count_[c];
    }

    static SocialGraph line(int n) {
        std::vector<int> p(n);
        for (int j = 1; j < n; ++j) p[j - 1] = j + 1;
        p[n - 1] = 0;
        return SocialGraph(GraphKind::Line, std::move(p));
    }

    static SocialGraph star(int n) {
        std::vector<int> p(n, n);
        p[n - 1] = 0;
        return SocialGraph(GraphKind::Star, std::move(p));
    }

    GraphKind kind() const { return kind_; }
    int agent_count() const { return static_cast<int>(parent_.size()); }
    int root() const { return agent_count(); }

    int parent(int j) const { return parent_.at(j - 1); }
    const std::vector<int>& children(int j) const { return children_.at(j); }
    const std::vector<int>& parent_vector() const { return parent_; }

    /// |D_j| = size of the subtree rooted at a_j (including a_j).
    int subtree_size(int j) const { return desc_count_.at(j); }

    /// D_j: a_j together with all its descendants, ascending.
    std::vector<int> descendants(int j) const {
        std::vector<int> out;
        collect_subtree(j, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    int depth_of(int j) const {
        int d = 0;
        while (parent_.at(j - 1) != 0) { j = parent_.at(j - 1); ++d; }
        return d;
    }

    int depth() const {
        int d = 0;
        for (int j = 1; j <= agent_count(); ++j) d = std::max(d, depth_of(j));
        return d;
    }

    int degree(int j) const {
        return static_cast<int>(children_.at(j).size()) + (parent_.at(j - 1) != 0 ? 1 : 0);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int j = 1; j < agent_count(); ++j) e.emplace_back(j, parent_[j - 1]);
        return e;
    }

    /// Inchild(k, a_j): inactive children of a_j, i.e. children with index <= k.
    std::vector<int> inchild(int k, int j) const {
        std::vector<int> out;
        for (int c : children_.at(j))
            if (c <= k) out.push_back(c);
        return out;
    }

    /// Inact(k, a_j) = {j} plus the full subtrees of inactive children, ascending.
    std::vector<int> inact(int k, int j) const {
        std::vector<int> out{j};
        for (int c : inchild(k, j)) collect_subtree(c, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Checks every structural invariant, naming the first violation.
    TopologyReport topological_check() const {
        return topological_check_impl(kind_, parent_);
    }

    static TopologyReport topological_check_impl(GraphKind kind, const std::vector<int>& parent) {
        int n = static_cast<int>(parent.size());
        auto fail = [](std::string m) { return TopologyReport{false, std::move(m)}; };
        if (n < 1) return fail("no agents");
        if (parent[n - 1] != 0) return fail("agent a_" + std::to_string(n) + " must be the root");
        for (int j = 1; j < n; ++j) {
            int p = parent[j - 1];
            if (p == 0) return fail("two roots: a_" + std::to_string(j) + " also unparented");
            if (p < 1 || p > n) return fail("parent of a_" + std::to_string(j) + " out of range");
            if (p <= j)
                return fail("descendant index >= ancestor: edge a_" + std::to_string(j) +
                            " -> a_" + std::to_string(p));
        }
        // parent[j] > j for all non-roots already forces acyclicity and a
        // single component reaching a_n; only shape checks remain.
        std::vector<std::vector<int>> ch(n + 1);
        for (int j = 1; j < n; ++j) ch[parent[j - 1]].push_back(j);
        if (!ch[1].empty()) return fail("a_1 must be a leaf");
        auto depth_of = [&](int j) {
            int d = 0;
            while (parent[j - 1] != 0) { j = parent[j - 1]; ++d; }
            return d;
        };
        switch (kind) {
            case GraphKind::Line:
                for (int j = 1; j < n; ++j)
                    if (parent[j - 1] != j + 1)
                        return fail("line requires parent(a_" + std::to_string(j) + ") = a_" +
                                    std::to_string(j + 1));
                break;
            case GraphKind::Star:
                for (int j = 1; j < n; ++j)
                    if (parent[j - 1] != n) return fail("star requires all agents adjacent to the root");
                break;
            case GraphKind::TwoStar: {
                for (int j = 1; j <= n; ++j)
                    if (depth_of(j) > 2) return fail("2-star requires depth <= 2");
                for (int j = 1; j < n; ++j) {
                    int deg = static_cast<int>(ch[j].size()) + 1;
                    if (deg > 2)
                        return fail("2-star requires non-root degree <= 2, violated at a_" +
                                    std::to_string(j));
                }
                break;
            }
            case GraphKind::Depth2Tree:
                for (int j = 1; j <= n; ++j)
                    if (depth_of(j) > 2) return fail("depth-2 tree requires depth <= 2");
                break;
            case GraphKind::Tree:
                break;
        }
        return {};
    }

private:
    void collect_subtree(int j, std::vector<int>& out) const {
        out.push_back(j);
        for (int c : children_.at(j)) collect_subtree(c, out);
    }

    GraphKind kind_;
    std::vector<int> parent_;               // parent_[j-1] = p_j, 0 at the root
    std::vector<std::vector<int>> children_;
    std::vector<int> desc_count_;
};

/// Result of re-indexing an arbitrarily labeled rooted tree into
/// topological order: new_parent is a valid parent vector (children
/// before parents, root last) and original_label[i-1] is the input
/// label now carried by agent a_i.
struct Relabeling {
    std::vector<int> parent;
    std::vector<int> original_label;
};

/// Re-indexes a rooted tree given as an arbitrary parent vector (0 marks
/// the root) by DFS post-order, children in ascending original label.
inline Relabeling relabel_topological(const std::vector<int>& parent_raw) {
    int n = static_cast<int>(parent_raw.size());
    int root = 0;
    std::vector<std::vector<int>> ch(n + 1);
    for (int j = 1; j <= n; ++j) {
        int p = parent_raw[j - 1];
        if (p == 0) {
            if (root != 0) throw BadShapeParams("relabel: multiple roots");
            root = j;
        } else if (p < 1 || p > n) {
            throw BadShapeParams("relabel: parent out of range");
        } else {
            ch[p].push_back(j);
        }
    }
    if (root == 0) throw BadShapeParams("relabel: no root");
    std::vector<int> order;  // post-order, original labels
    order.reserve(n);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < ch[node].size()) {
            int c = ch[node][next++];
            stack.emplace_back(c, 0);
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }
    if (static_cast<int>(order.size()) != n)
        throw BadShapeParams("relabel: disconnected graph");
    std::vector<int> new_index(n + 1, 0);
    for (int i = 0; i < n; ++i) new_index[order[i]] = i + 1;
    Relabeling out;
    out.parent.resize(n);
    out.original_label = order;
    for (int i = 0; i < n; ++i) {
        int old_parent = parent_raw[order[i] - 1];
        out.parent[i] = old_parent == 0 ? 0 : new_index[old_parent];
    }
    return out;
}

/// The storage partition at a fixed activity threshold k: bundle indices
/// grouped by the lowest active agent above them.  Agents a_j with j <= k
/// (inactive) own no storage; for active agents the storage indices are
/// Inact(k, a_j).  Over all agents this partitions {1..n} whenever k < n.
class StorageView {
public:
    StorageView(const SocialGraph& g, int k) : k_(k), sets_(g.agent_count() + 1) {
        for (int j = k + 1; j <= g.agent_count(); ++j) sets_[j] = g.inact(k, j);
    }

    int threshold() const { return k_; }

    /// Bundle indices in Storage(k, a_j); empty for inactive agents.
    const std::vector<int>& storage_of(int j) const { return sets_.at(j); }

    bool is_partition(int n) const {
        std::vector<int> seen(n + 1, 0);
        for (const auto& s : sets_)
            for (int i : s) {
                if (i < 1 || i > n || seen[i]) return false;
                seen[i] = 1;
            }
        for (int i = 1; i <= n; ++i)
            if (!seen[i]) return false;
        return true;
    }

private:
    int k_;
    std::vector<std::vector<int>> sets_;
};

/// Observation target: Inact(k-1, a_j) is contained in Inact(k, a_j).
inline bool monotone_inact_check(const SocialGraph& g, int j, int k) {
    auto small = g.inact(k - 1, j);
    auto big = g.inact(k, j);
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace graphcake
