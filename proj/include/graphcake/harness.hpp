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

#include <chrono>
#include <sstream>
#include <string>

#include "graphcake/bounds.hpp"
#include "graphcake/depth2.hpp"
#include "graphcake/direct.hpp"
#include "graphcake/domination.hpp"
#include "graphcake/generator.hpp"
#include "graphcake/verifier.hpp"

namespace graphcake {

enum class ProtocolChoice { Domination, Alg1, Alg5, Alg2, Star };

inline std::string protocol_name(ProtocolChoice p) {
    switch (p) {
        case ProtocolChoice::Domination: return "domination";
        case ProtocolChoice::Alg1: return "alg1";
        case ProtocolChoice::Alg5: return "alg5";
        case ProtocolChoice::Alg2: return "alg2";
        case ProtocolChoice::Star: return "star";
    }
    return "?";
}

inline ProtocolChoice protocol_from_name(const std::string& s) {
    if (s == "domination") return ProtocolChoice::Domination;
    if (s == "alg1") return ProtocolChoice::Alg1;
    if (s == "alg5") return ProtocolChoice::Alg5;
    if (s == "alg2") return ProtocolChoice::Alg2;
    if (s == "star") return ProtocolChoice::Star;
    throw BadShapeParams("unknown protocol '" + s + "'");
}

struct RunResult {
    Allocation allocation;
    QueryLedger ledger;
    DominationTrace dom_trace;
    Alg2Trace alg2_trace;
    bool envy_free = false;  // set by the verifier, never by the protocol
    EnvyReport envy_report;
    std::uint64_t physical_cuts = 0;
    std::uint64_t total_rounds = 0;
    std::map<int, int> max_rounds_per_level;
    double wall_ms = 0.0;
};

/// Runs the chosen protocol and re-verifies local envy-freeness with the
/// independent checker before reporting.
inline RunResult run_protocol(const Instance& inst, ProtocolChoice choice,
                              bool keep_trace = true) {
    RunResult res;
    res.ledger = QueryLedger(inst.n());
    RwOracle oracle(inst);
    auto start = std::chrono::steady_clock::now();
    switch (choice) {
        case ProtocolChoice::Domination: {
            DominationContext ctx;
            if (keep_trace) ctx.trace = &res.dom_trace;
            if (inst.graph().kind() == GraphKind::Line)
                res.allocation = domination_line(oracle, Piece::whole_cake(), 1, &ctx);
            else
                res.allocation = domination_tree(oracle, Piece::whole_cake(), 1, &ctx);
            res.total_rounds = ctx.total_rounds;
            res.max_rounds_per_level = ctx.max_rounds_per_level;
            break;
        }
        case ProtocolChoice::Alg1:
            res.allocation = alg1_four_line(oracle);
            res.total_rounds = 2;
            break;
        case ProtocolChoice::Alg5:
            res.allocation = alg_five_line(oracle);
            res.total_rounds = 3;
            break;
        case ProtocolChoice::Alg2:
            res.allocation = alg2(oracle, &res.alg2_trace);
            res.total_rounds = res.alg2_trace.rounds.size();
            if (!keep_trace) res.alg2_trace = Alg2Trace{};
            break;
        case ProtocolChoice::Star:
            res.allocation = star_cut_and_choose(oracle);
            res.total_rounds = 1;
            break;
    }
    auto stop = std::chrono::steady_clock::now();
    res.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    res.ledger = oracle.ledger();
    res.physical_cuts = oracle.physical_cuts();
    res.envy_report = is_locally_envy_free(inst, res.allocation);
    res.envy_free = res.envy_report.ok();
    return res;
}

/// The theorem quantity the bench CSV reports per protocol: the exact
/// totals for the closed-form protocols, the charged-query ceiling for
/// the recursion, and the cut-query ceilings for Alg2.
inline std::uint64_t paper_bound(ProtocolChoice p, GraphKind kind, int n) {
    switch (p) {
        case ProtocolChoice::Domination: return query_bound(n);
        case ProtocolChoice::Alg1: return 24;
        case ProtocolChoice::Alg5: return 47;
        case ProtocolChoice::Star:
            return static_cast<std::uint64_t>(n) * n + (n - 1);
        case ProtocolChoice::Alg2:
            if (kind == GraphKind::TwoStar) return 6ull * n * n;
            return static_cast<std::uint64_t>(3ull * n) *
                   static_cast<std::uint64_t>(alg2_round_bound(n));
    }
    return 0;
}

struct BenchSweep {
    ProtocolChoice protocol = ProtocolChoice::Domination;
    GraphKind kind = GraphKind::Line;
    int n_min = 2;
    int n_max = 5;
    int seeds = 5;
    int segments = 3;
    long max_denominator = 1000;
};

struct BenchConfig {
    std::vector<BenchSweep> sweeps;
    bool measure_time = true;  // off: the ms column prints 0 so runs are byte-identical
};

struct BenchRecord {
    std::string protocol;
    std::string graph;
    int n = 0;
    std::uint64_t seed = 0;
    std::uint64_t cut = 0;
    std::uint64_t eval = 0;
    std::uint64_t raw_eval = 0;
    std::uint64_t rounds = 0;
    std::uint64_t bound = 0;
    bool envy_free = false;
    double ms = 0.0;
    std::string error;  // non-empty when the run failed
};

inline std::vector<BenchRecord> bench(const BenchConfig& cfg) {
    std::vector<BenchRecord> records;
    for (const auto& sweep : cfg.sweeps) {
        for (int n = sweep.n_min; n <= sweep.n_max; ++n) {
            for (int seed = 0; seed < sweep.seeds; ++seed) {
                BenchRecord rec;
                rec.protocol = protocol_name(sweep.protocol);
                rec.graph = kind_name(sweep.kind);
                rec.n = n;
                rec.seed = seed;
                rec.bound = paper_bound(sweep.protocol, sweep.kind, n);
                try {
                    GenParams p;
                    p.n = n;
                    p.kind = sweep.kind;
                    p.segments = sweep.segments;
                    p.seed = seed;
                    p.max_denominator = sweep.max_denominator;
                    Instance inst = generate_instance(p);
                    RunResult run = run_protocol(inst, sweep.protocol, /*keep_trace=*/false);
                    rec.cut = run.ledger.cut_total;
                    rec.eval = run.ledger.eval_total;
                    rec.raw_eval = run.ledger.raw_eval_total;
                    rec.rounds = run.total_rounds;
                    rec.envy_free = run.envy_free;
                    rec.ms = cfg.measure_time ? run.wall_ms : 0.0;
                } catch (const std::exception& e) {
                    rec.error = e.what();  // recorded, sweep continues
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

inline std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "protocol,graph,n,seed,cut,eval,raw_eval,rounds,bound,envy_free,ms\n";
    for (const auto& r : records) {
        if (!r.error.empty()) {
            out << r.protocol << ',' << r.graph << ',' << r.n << ',' << r.seed
                << ",error,error,error,error," << r.bound << ",false,0\n";
            continue;
        }
        out << r.protocol << ',' << r.graph << ',' << r.n << ',' << r.seed << ',' << r.cut << ','
            << r.eval << ',' << r.raw_eval << ',' << r.rounds << ',' << r.bound << ','
            << (r.envy_free ? "true" : "false") << ',' << static_cast<long long>(r.ms) << '\n';
    }
    return out.str();
}

}  // namespace graphcake
