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

#include "graphcake/harness.hpp"
#include "graphcake/json_io.hpp"

using namespace graphcake;

TEST_CASE("generation is deterministic in the seed") {
    GenParams p;
    p.n = 4;
    p.kind = GraphKind::Line;
    p.segments = 3;
    p.seed = 42;
    Instance a = generate_instance(p);
    Instance b = generate_instance(p);
    CHECK(to_json(a) == to_json(b));
    p.seed = 43;
    CHECK(to_json(a) != to_json(generate_instance(p)));
}

TEST_CASE("generated valuations integrate to one") {
    for (auto kind : {GraphKind::Line, GraphKind::Tree, GraphKind::Depth2Tree}) {
        GenParams p;
        p.kind = kind;
        p.n = 6;
        p.segments = 4;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            p.seed = seed;
            Instance inst = generate_instance(p);
            for (int j = 1; j <= inst.n(); ++j)
                CHECK(inst.valuation(j).value(Piece::whole_cake()) == Rational(1));
        }
    }
}

TEST_CASE("instance json round-trips") {
    GenParams p;
    p.n = 5;
    p.kind = GraphKind::Tree;
    p.segments = 3;
    p.seed = 13;
    Instance inst = generate_instance(p);
    json j = to_json(inst);
    Instance back = instance_from_json(j);
    CHECK(to_json(back) == j);
}

TEST_CASE("instance json accepts arbitrary labelings") {
    // root is agent 1 in the file; the loader re-indexes topologically
    json j = {{"n", 3},
              {"graph", {{"kind", "star"}, {"parent", {nullptr, 1, 1}}}},
              {"valuations",
               {{{"breakpoints", {"0", "1"}}, {"densities", {"1"}}},
                {{"breakpoints", {"0", "1/2", "1"}}, {"densities", {"3/2", "1/2"}}},
                {{"breakpoints", {"0", "1"}}, {"densities", {"1"}}}}}};
    Instance inst = instance_from_json(j);
    CHECK(inst.graph().topological_check().ok);
    CHECK(inst.graph().root() == 3);
    CHECK(inst.original_label(3) == 1);
    // the stepped valuation followed its agent through the relabeling
    int moved = 0;
    for (int a = 1; a <= 3; ++a)
        if (inst.original_label(a) == 2) moved = a;
    CHECK(inst.valuation(moved).densities().size() == 2);
}

TEST_CASE("rationals and pieces serialize as strings") {
    CHECK(to_json(Rational(3, 6)) == json("1/2"));
    CHECK(to_json(Rational(4)) == json("4"));
    CHECK(rational_from_json(json("7/3")) == Rational(7, 3));
    Piece p({Interval(Rational(0), Rational(1, 4)), Interval(Rational(1, 2), Rational(1))});
    CHECK(piece_from_json(to_json(p)) == p);
}

TEST_CASE("run_protocol verifies before reporting") {
    Instance inst = uniform_instance(GraphKind::Line, 4);
    RunResult res = run_protocol(inst, ProtocolChoice::Alg1);
    CHECK(res.envy_free);
    CHECK(res.ledger.cut_total == 8);
    CHECK(res.ledger.eval_total == 16);

    RunResult dom = run_protocol(inst, ProtocolChoice::Domination);
    CHECK(dom.envy_free);
    CHECK(dom.total_rounds >= 3);
    CHECK_THROWS_AS(run_protocol(inst, ProtocolChoice::Alg2), WrongShape);
}

TEST_CASE("bench sweeps are reproducible and survive per-run failures") {
    BenchConfig cfg;
    cfg.measure_time = false;
    BenchSweep s;
    s.protocol = ProtocolChoice::Star;
    s.kind = GraphKind::Star;
    s.n_min = 3;
    s.n_max = 6;
    s.seeds = 3;
    cfg.sweeps = {s};
    std::string csv1 = bench_csv(bench(cfg));
    std::string csv2 = bench_csv(bench(cfg));
    CHECK(csv1 == csv2);
    CHECK(csv1.find("protocol,graph,n,seed,cut,eval,raw_eval,rounds,bound,envy_free,ms") == 0);
    // star with n agents charges exactly n-1 cuts
    CHECK(csv1.find("star,star,3,0,2,") != std::string::npos);

    // a protocol/graph mismatch is recorded as an error row, not a crash
    BenchSweep bad;
    bad.protocol = ProtocolChoice::Alg1;
    bad.kind = GraphKind::Star;
    bad.n_min = 4;
    bad.n_max = 4;
    bad.seeds = 1;
    cfg.sweeps = {bad};
    std::string csv3 = bench_csv(bench(cfg));
    CHECK(csv3.find("error") != std::string::npos);
}

TEST_CASE("trace records serialize with their full field set") {
    GenParams p;
    p.n = 4;
    p.kind = GraphKind::Line;
    p.seed = 5;
    Instance inst = generate_instance(p);
    RunResult res = run_protocol(inst, ProtocolChoice::Domination, /*keep_trace=*/true);
    REQUIRE(!res.dom_trace.rounds.empty());
    json j = to_json(res.dom_trace.rounds.front());
    for (const char* key : {"level", "invocation", "round", "observer", "phase", "counter",
                            "residue", "residue_value", "max_trim_value", "tracked",
                            "handed_values", "observer_own", "gaps", "physical_cuts"})
        CHECK(j.contains(key));
    CHECK(j.at("round") == 1);
    CHECK(j.at("residue_value") == "1");

    Instance star = uniform_instance(GraphKind::Star, 4);
    RunResult ares = run_protocol(star, ProtocolChoice::Alg2, true);
    REQUIRE(!ares.alg2_trace.rounds.empty());
    json aj = to_json(ares.alg2_trace.rounds.front());
    for (const char* key : {"round", "trimmers", "residue_value", "physical_cuts"})
        CHECK(aj.contains(key));
}

TEST_CASE("ledger json carries totals and per-agent counts") {
    Instance inst = uniform_instance(GraphKind::Line, 4);
    RunResult res = run_protocol(inst, ProtocolChoice::Alg1);
    json j = to_json(res.ledger);
    CHECK(j.at("cut") == 8);
    CHECK(j.at("eval") == 16);
    CHECK(j.at("per_agent").size() == 4);
    std::uint64_t cut_sum = 0;
    for (const auto& pa : j.at("per_agent")) cut_sum += pa.at("cut").get<std::uint64_t>();
    CHECK(cut_sum == 8);
}
