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

#include <json.hpp>

#include <string>
#include <vector>

#include "graphcake/allocation.hpp"
#include "graphcake/instance.hpp"
#include "graphcake/oracle.hpp"
#include "graphcake/trace.hpp"

// File formats.  Rationals serialize as "p/q" strings ("p" when q = 1);
// pieces as arrays of [lo, hi] string pairs; agents stay 1-based with
// null marking the root's parent slot.

namespace graphcake {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    return Rational::parse(j.get<std::string>());
}

inline json to_json(const Piece& p) {
    json arr = json::array();
    for (const auto& iv : p.intervals()) arr.push_back({iv.lo.str(), iv.hi.str()});
    return arr;
}

inline Piece piece_from_json(const json& j) {
    std::vector<Interval> ivs;
    for (const auto& pair : j)
        ivs.emplace_back(rational_from_json(pair.at(0)), rational_from_json(pair.at(1)));
    return Piece(std::move(ivs));
}

inline json to_json(const Allocation& a) {
    json arr = json::array();
    for (const auto& b : a.bundles()) arr.push_back(to_json(b));
    return arr;
}

inline Allocation allocation_from_json(const json& j) {
    std::vector<Piece> bundles;
    for (const auto& b : j) bundles.push_back(piece_from_json(b));
    return Allocation(std::move(bundles));
}

inline GraphKind kind_from_name(const std::string& s) {
    if (s == "line") return GraphKind::Line;
    if (s == "tree") return GraphKind::Tree;
    if (s == "depth2") return GraphKind::Depth2Tree;
    if (s == "2star") return GraphKind::TwoStar;
    if (s == "star") return GraphKind::Star;
    throw BadShapeParams("unknown graph kind '" + s + "'");
}

inline json to_json(const SocialGraph& g) {
    json parent = json::array();
    for (int j = 1; j <= g.agent_count(); ++j) {
        if (j == g.root())
            parent.push_back(nullptr);
        else
            parent.push_back(g.parent(j));
    }
    return {{"kind", kind_name(g.kind())}, {"parent", parent}};
}

inline json to_json(const Instance& inst) {
    json vals = json::array();
    for (const auto& v : inst.valuations()) {
        json bps = json::array(), dens = json::array();
        for (const auto& b : v.breakpoints()) bps.push_back(b.str());
        for (const auto& d : v.densities()) dens.push_back(d.str());
        vals.push_back({{"breakpoints", bps}, {"densities", dens}});
    }
    return {{"n", inst.n()}, {"graph", to_json(inst.graph())}, {"valuations", vals}};
}

inline Instance instance_from_json(const json& j) {
    GraphKind kind = kind_from_name(j.at("graph").at("kind").get<std::string>());
    std::vector<int> parent;
    for (const auto& p : j.at("graph").at("parent"))
        parent.push_back(p.is_null() ? 0 : p.get<int>());
    int n = j.at("n").get<int>();
    if (static_cast<int>(parent.size()) != n)
        throw BadShapeParams("instance json: parent array length != n");

    std::vector<Valuation> vals;
    for (const auto& v : j.at("valuations")) {
        std::vector<Rational> bps, dens;
        for (const auto& b : v.at("breakpoints")) bps.push_back(rational_from_json(b));
        for (const auto& d : v.at("densities")) dens.push_back(rational_from_json(d));
        vals.emplace_back(std::move(bps), std::move(dens));
    }
    if (static_cast<int>(vals.size()) != n)
        throw BadShapeParams("instance json: valuation count != n");

    // accept arbitrary labelings: re-index topologically when needed,
    // permuting the valuations along and remembering the input labels
    TopologyReport rep = SocialGraph::topological_check_impl(kind, parent);
    if (rep.ok) return Instance(SocialGraph(kind, std::move(parent)), std::move(vals));
    Relabeling rl = relabel_topological(parent);
    std::vector<Valuation> permuted;
    permuted.reserve(vals.size());
    for (int i = 0; i < n; ++i) permuted.push_back(vals[rl.original_label[i] - 1]);
    return Instance(SocialGraph(kind, rl.parent), std::move(permuted), rl.original_label);
}

inline json to_json(const QueryLedger& l) {
    json per_agent = json::array();
    for (std::size_t i = 0; i < l.cut_per_agent.size(); ++i)
        per_agent.push_back({{"cut", l.cut_per_agent[i]}, {"eval", l.eval_per_agent[i]}});
    return {{"cut", l.cut_total},
            {"eval", l.eval_total},
            {"raw_eval", l.raw_eval_total},
            {"per_agent", per_agent}};
}

inline json to_json(const DominationRound& r) {
    json gaps = json::array(), handed = json::array();
    for (const auto& g : r.gaps_end) gaps.push_back(g.str());
    for (const auto& h : r.handed_values) handed.push_back(h.str());
    return {{"level", r.level},
            {"invocation", r.invocation},
            {"round", r.round},
            {"observer", r.observer},
            {"phase", r.phase == Phase::Trim ? "trim" : "equal"},
            {"counter", r.counter_c},
            {"residue", to_json(r.residue_start)},
            {"residue_value", r.observer_residue_value.str()},
            {"max_trim_value", r.max_trim_value.str()},
            {"tracked", r.tracked},
            {"handed_values", handed},
            {"observer_own", r.observer_own_end.str()},
            {"gaps", gaps},
            {"physical_cuts", r.physical_cuts}};
}

inline json to_json(const Alg2Round& r) {
    return {{"round", r.round},
            {"trimmers", r.trimmers},
            {"residue_value", r.root_residue_value.str()},
            {"physical_cuts", r.physical_cuts}};
}

}  // namespace graphcake
