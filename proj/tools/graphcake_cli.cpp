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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "graphcake/harness.hpp"
#include "graphcake/json_io.hpp"

using namespace graphcake;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
}

json result_json(const Instance& inst, const RunResult& res, ProtocolChoice choice) {
    json rounds = {{"total", res.total_rounds}};
    if (choice == ProtocolChoice::Domination) {
        json per_level = json::object();
        for (const auto& [level, r] : res.max_rounds_per_level)
            per_level[std::to_string(level)] = r;
        rounds["max_per_level"] = per_level;
    }
    json out = {{"protocol", protocol_name(choice)},
                {"n", inst.n()},
                {"allocation", to_json(res.allocation)},
                {"ledger", to_json(res.ledger)},
                {"rounds", rounds},
                {"physical_cuts", res.physical_cuts},
                {"envy_free", res.envy_free}};
    // surface the re-indexing when the input used arbitrary labels
    for (int i = 1; i <= inst.n(); ++i) {
        if (inst.original_label(i) != i) {
            json labels = json::array();
            for (int j = 1; j <= inst.n(); ++j) labels.push_back(inst.original_label(j));
            out["original_labels"] = labels;
            break;
        }
    }
    return out;
}

void write_trace(const std::string& path, const RunResult& res, ProtocolChoice choice) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    if (choice == ProtocolChoice::Domination)
        for (const auto& r : res.dom_trace.rounds) out << to_json(r).dump() << "\n";
    else
        for (const auto& r : res.alg2_trace.rounds) out << to_json(r).dump() << "\n";
}

int cmd_gen(const std::string& graph, int n, int segments, std::uint64_t seed, long max_den,
            const std::string& out_path) {
    GenParams p;
    p.kind = kind_from_name(graph);
    p.n = n;
    p.segments = segments;
    p.seed = seed;
    p.max_denominator = max_den;
    Instance inst = generate_instance(p);
    json j = to_json(inst);
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text_file(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_run(const std::string& protocol, const std::string& instance_path,
            const std::string& trace_path, const std::string& out_path) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    ProtocolChoice choice = protocol_from_name(protocol);
    RunResult res = run_protocol(inst, choice, /*keep_trace=*/!trace_path.empty());
    if (!trace_path.empty()) write_trace(trace_path, res, choice);
    json j = result_json(inst, res, choice);
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text_file(out_path, j.dump(2) + "\n");
    if (!res.envy_free) {
        std::cerr << "verification FAILED: allocation is not locally envy-free\n";
        for (const auto& v : res.envy_report.violations)
            std::cerr << "  a_" << v.envier << " envies a_" << v.envied << " by " << v.gap.str()
                      << "\n";
        return 1;
    }
    std::cerr << "verified: locally envy-free; ledger cut=" << res.ledger.cut_total
              << " eval=" << res.ledger.eval_total << "\n";
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& allocation_path, int k,
               const std::string& fairness) {
    Instance inst = instance_from_json(read_json_file(instance_path));
    json aj = read_json_file(allocation_path);
    Allocation alloc = allocation_from_json(aj.contains("allocation") ? aj.at("allocation") : aj);
    json report;
    bool ok = true;
    if (k > 0) {
        FairnessReport rep = fairness == "line" ? is_k_fair_line(inst, alloc, k)
                                                : is_k_fair_tree(inst, alloc, k);
        ok = rep.ok;
        report = {{"check", fairness + "-" + std::to_string(k) + "-fair"},
                  {"ok", rep.ok},
                  {"detail", rep.message}};
    } else {
        EnvyReport rep = is_locally_envy_free(inst, alloc);
        ok = rep.ok();
        json viols = json::array();
        for (const auto& v : rep.violations)
            viols.push_back({{"envier", v.envier}, {"envied", v.envied}, {"gap", v.gap.str()}});
        report = {{"check", "locally-envy-free"}, {"ok", ok}, {"violations", viols}};
    }
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_path) {
    json cj = read_json_file(config_path);
    BenchConfig cfg;
    cfg.measure_time = cj.value("measure_time", true);
    for (const auto& s : cj.at("sweeps")) {
        BenchSweep sweep;
        sweep.protocol = protocol_from_name(s.at("protocol").get<std::string>());
        sweep.kind = kind_from_name(s.at("graph").get<std::string>());
        sweep.n_min = s.value("n_min", 2);
        sweep.n_max = s.value("n_max", sweep.n_min);
        sweep.seeds = s.value("seeds", 5);
        sweep.segments = s.value("segments", 3);
        sweep.max_denominator = s.value("max_denominator", 1000L);
        cfg.sweeps.push_back(sweep);
    }
    std::string csv = bench_csv(bench(cfg));
    if (out_path.empty())
        std::cout << csv;
    else
        write_text_file(out_path, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic cake-cutting protocols on tree social graphs"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string g_graph = "line";
    int g_n = 4, g_segments = 3;
    std::uint64_t g_seed = 0;
    long g_maxden = 1000;
    std::string g_out;
    gen->add_option("--graph", g_graph, "line|tree|depth2|2star|star")
        ->check(CLI::IsMember({"line", "tree", "depth2", "2star", "star"}))
        ->capture_default_str();
    gen->add_option("--n", g_n, "number of agents")->capture_default_str();
    gen->add_option("--segments", g_segments, "density segments per agent")->capture_default_str();
    gen->add_option("--seed", g_seed, "random seed")->capture_default_str();
    gen->add_option("--max-den", g_maxden, "breakpoint grid denominator")->capture_default_str();
    gen->add_option("-o,--out", g_out, "output file (stdout when omitted)");

    auto* run = app.add_subcommand("run", "run a protocol and verify the result");
    std::string r_protocol = "domination", r_instance, r_trace, r_out;
    run->add_option("--protocol", r_protocol, "domination|alg1|alg5|alg2|star")
        ->check(CLI::IsMember({"domination", "alg1", "alg5", "alg2", "star"}))
        ->capture_default_str();
    run->add_option("--instance", r_instance, "instance json file")->required();
    run->add_option("--trace", r_trace, "write a per-round trace stream here");
    run->add_option("-o,--out", r_out, "result json file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "check an allocation against an instance");
    std::string v_instance, v_allocation, v_fairness = "line";
    int v_k = 0;
    verify->add_option("--instance", v_instance, "instance json file")->required();
    verify->add_option("--allocation", v_allocation, "allocation or result json file")->required();
    verify->add_option("--k", v_k, "check k-fairness instead of local envy-freeness");
    verify->add_option("--fairness", v_fairness, "line|tree")
        ->check(CLI::IsMember({"line", "tree"}))
        ->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "sweep protocols and write a csv report");
    std::string b_config, b_out;
    bench_cmd->add_option("--config", b_config, "bench config json")->required();
    bench_cmd->add_option("-o,--out", b_out, "csv output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(g_graph, g_n, g_segments, g_seed, g_maxden, g_out);
        if (run->parsed()) return cmd_run(r_protocol, r_instance, r_trace, r_out);
        if (verify->parsed()) return cmd_verify(v_instance, v_allocation, v_k, v_fairness);
        if (bench_cmd->parsed()) return cmd_bench(b_config, b_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
