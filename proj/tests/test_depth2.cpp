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

#include <catch2/catch_amalgamated.hpp>

#include "graphcake/depth2.hpp"
#include "graphcake/direct.hpp"
#include "graphcake/generator.hpp"
#include "graphcake/verifier.hpp"

using namespace graphcake;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("domination condition evaluates the exact threshold") {
    CHECK(dominates(r(0), r(0), 1, 3));
    CHECK(dominates(r(1, 10), r(1, 10), 1, 1));            // min{2/2,1} = 1
    CHECK_FALSE(dominates(r(1, 25), r(1, 10), 1, 3));      // needs >= 1/20
    CHECK(dominates(r(1, 20), r(1, 10), 1, 3));
    CHECK(dominates(r(3, 10), r(1, 10), 5, 1));            // capped at 1
}

TEST_CASE("uniform 2-star with three agents finishes in one round") {
    // root a_3, child a_2, leaf a_1
    Instance inst(SocialGraph(GraphKind::TwoStar, {2, 3, 0}),
                  {Valuation::uniform(), Valuation::uniform(), Valuation::uniform()});
    RwOracle oracle(inst);
    Alg2Trace trace;
    Allocation a = alg2(oracle, &trace);
    CHECK(trace.rounds.size() == 1);
    CHECK(is_locally_envy_free(inst, a).ok());
    for (int j = 1; j <= 3; ++j) CHECK(inst.valuation(j).value(a.bundle(j)) == r(1, 3));
    ClaimsReport rep = alg2_round_bounds(trace, inst.graph());
    INFO(rep.summary());
    CHECK(rep.all_pass());
}

TEST_CASE("alg2 accepts star inputs and matches the cut-and-choose guarantee") {
    GenParams p;
    p.kind = GraphKind::Star;
    p.segments = 3;
    p.n = 5;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        p.seed = seed;
        Instance inst = generate_instance(p);
        RwOracle o1(inst), o2(inst);
        Allocation via_alg2 = alg2(o1);
        Allocation via_star = star_cut_and_choose(o2);
        CHECK(is_locally_envy_free(inst, via_alg2).ok());
        CHECK(is_locally_envy_free(inst, via_star).ok());
    }
}

TEST_CASE("alg2 on random depth-2 trees is envy-free with bounded rounds") {
    GenParams p;
    p.kind = GraphKind::Depth2Tree;
    p.segments = 3;
    for (int n : {4, 7, 10}) {
        p.n = n;
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            p.seed = seed;
            Instance inst = generate_instance(p);
            RwOracle oracle(inst);
            Alg2Trace trace;
            Allocation a = alg2(oracle, &trace);
            INFO("n " << n << " seed " << seed);
            CHECK(is_locally_envy_free(inst, a).ok());
            ClaimsReport rep = alg2_round_bounds(trace, inst.graph());
            INFO(rep.summary());
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("alg2 on random 2-stars: trimmers leave within two rounds each") {
    GenParams p;
    p.kind = GraphKind::TwoStar;
    p.segments = 3;
    for (int n : {4, 8, 12}) {
        p.n = n;
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            p.seed = seed;
            Instance inst = generate_instance(p);
            RwOracle oracle(inst);
            Alg2Trace trace;
            Allocation a = alg2(oracle, &trace);
            INFO("n " << n << " seed " << seed);
            CHECK(is_locally_envy_free(inst, a).ok());
            CHECK(trace.rounds.size() <= static_cast<std::size_t>(2 * n));
            ClaimsReport rep = alg2_round_bounds(trace, inst.graph());
            INFO(rep.summary());
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("alg2 children end each round with equal-valued bundles") {
    GenParams p;
    p.kind = GraphKind::Depth2Tree;
    p.segments = 4;
    p.n = 8;
    p.seed = 3;
    Instance inst = generate_instance(p);
    RwOracle oracle(inst);
    Allocation a = alg2(oracle);
    const SocialGraph& g = inst.graph();
    // after the run, every child of the root is indifferent between her
    // bundle and each of her leaves' bundles
    for (int i : g.children(g.root())) {
        const Valuation& v = inst.valuation(i);
        Rational own = v.value(a.bundle(i));
        for (int leaf : g.children(i)) CHECK(v.value(a.bundle(leaf)) == own);
    }
}

TEST_CASE("the root never envies any bundle on a child's side") {
    // stronger than edge-wise envy-freeness: the root weakly prefers her
    // bundle to every bundle held below her, including the leaves' (the
    // domination condition is what pays for this)
    GenParams p;
    p.kind = GraphKind::Depth2Tree;
    p.segments = 4;
    for (int n : {5, 9, 14}) {
        p.n = n;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            p.seed = seed + 41;
            Instance inst = generate_instance(p);
            RwOracle oracle(inst);
            Allocation a = alg2(oracle);
            const SocialGraph& g = inst.graph();
            const Valuation& vr = inst.valuation(g.root());
            Rational own = vr.value(a.bundle(g.root()));
            for (int j = 1; j < n; ++j) {
                INFO("n " << n << " seed " << seed << " bundle " << j);
                CHECK(own >= vr.value(a.bundle(j)));
            }
        }
    }
}

TEST_CASE("alg2 handles the two-agent star") {
    Instance inst(SocialGraph::star(2), {Valuation::uniform(), Valuation::uniform()});
    RwOracle oracle(inst);
    Allocation a = alg2(oracle);
    CHECK(is_locally_envy_free(inst, a).ok());
    CHECK(inst.valuation(1).value(a.bundle(1)) == Rational(1, 2));
}

TEST_CASE("alg2 rejects deep trees") {
    // a chain of depth 3
    Instance inst(SocialGraph(GraphKind::Tree, {2, 3, 4, 0}),
                  std::vector<Valuation>(4, Valuation::uniform()));
    RwOracle oracle(inst);
    CHECK_THROWS_AS(alg2(oracle), WrongShape);
}
