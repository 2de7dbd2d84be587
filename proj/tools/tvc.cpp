// Command-line front end: solve / verify / gen / reduce / bench.
//
// Exit codes: 0 ok or valid, 1 invalid cover, 2 usage or input error,
// 3 infeasible or not found, 4 resource guard tripped.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "tvc/approx.hpp"
#include "tvc/exact_dp.hpp"
#include "tvc/fpt.hpp"
#include "tvc/gadgets.hpp"
#include "tvc/instances.hpp"
#include "tvc/oracle.hpp"
#include "tvc/path_algos.hpp"
#include "tvc/reduction.hpp"

using nlohmann::json;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitGuard = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tvc::InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw tvc::InputError("cannot write " + path);
    out << content;
}

const std::vector<std::string> kAlgorithms{"oracle",   "dp",        "greedy-tvc", "ptas",
                                           "approx-d", "approx-d1", "fpt"};

struct SolveOutcome {
    tvc::TemporalVertexSet cover;
    std::uint64_t explored = 0;
    json params;
    bool found = true;
};

SolveOutcome run_algorithm(const std::string& algo, const tvc::InstanceDocument& doc, int delta,
                           int k, int swap, double epsilon, std::uint64_t guard, int gap1,
                           int gap2, bool verbose) {
    const auto& g = doc.graph;
    const tvc::PartialBounds* bounds = doc.bounds ? &*doc.bounds : nullptr;
    SolveOutcome out;

    if (bounds && (algo == "greedy-tvc" || algo == "ptas" || algo == "approx-d" ||
                   algo == "approx-d1"))
        throw tvc::InputError("algorithm '" + algo + "' does not support partial bounds");

    if (algo == "dp") {
        tvc::DPOptions opts;
        if (guard) {
            opts.state_guard = guard;
            opts.max_states = guard;
        }
        auto r = tvc::solve_partial(g, delta, bounds, opts);
        out.cover = r.witness;
        out.explored = r.states_visited;
    } else if (algo == "oracle") {
        auto r = tvc::solve_ids(g, delta, bounds);
        out.cover = r.witness;
        out.explored = r.explored;
    } else if (algo == "fpt") {
        if (k < 0) throw tvc::InputError("--k is required for fpt");
        tvc::FptStats stats;
        auto r = tvc::solve_bounded(g, delta, k, bounds, {}, &stats);
        out.explored = stats.nodes;
        out.params["k"] = k;
        if (!r) {
            out.found = false;
            return out;
        }
        out.cover = *r;
    } else if (algo == "greedy-tvc") {
        out.params["delta_ignored"] = true;  // TVC semantics: one window [1, T]
        try {
            out.cover = tvc::solve_tvc_path(g);
        } catch (const tvc::TopologyError&) {
            out.cover = tvc::solve_tvc_cycle(g);
        }
    } else if (algo == "ptas") {
        int p = swap > 0 ? swap : epsilon > 0 ? tvc::swap_size_for_epsilon(epsilon) : 3;
        auto space = tvc::build_range_space(g, delta);
        auto r = tvc::local_search(space, {.swap_size = p});
        out.cover = r.cover;
        out.explored = r.rounds;
        out.params["swap"] = p;
        out.params["locally_optimal"] = r.locally_optimal;
    } else if (algo == "approx-d" || algo == "approx-d1") {
        tvc::ApproxConfig cfg{gap1, gap2};
        auto report = algo == "approx-d" ? tvc::approx_d(g, delta)
                                         : tvc::approx_d_minus_1(g, delta, cfg);
        out.cover = report.cover;
        out.explored = report.subinstances.size();
        out.params["ratio_bound"] = report.ratio_bound_used;
        if (verbose) {
            json subs = json::array();
            for (const auto& sub : report.subinstances) {
                json j;
                j["kind"] = sub.kind == tvc::SubInstance::Kind::phase1 ? "phase1" : "phase2";
                if (sub.kind == tvc::SubInstance::Kind::phase1) {
                    j["path"] = {sub.left, sub.center, sub.right};
                } else {
                    j["edge"] = sub.edge;
                }
                j["times"] = sub.times;
                j["window_lo"] = sub.lo;
                j["window_hi"] = sub.hi;
                j["optimum"] = sub.optimum;
                subs.push_back(std::move(j));
            }
            out.params["subinstances"] = std::move(subs);
        }
    } else {
        std::string known;
        for (const auto& a : kAlgorithms) known += (known.empty() ? "" : ", ") + a;
        throw tvc::InputError("unknown algorithm '" + algo + "' (valid: " + known + ")");
    }
    return out;
}

int cmd_solve(const std::string& input, const std::string& output, const std::string& algo,
              int delta, int k, int swap, double epsilon, std::uint64_t guard, int gap1, int gap2,
              const std::string& report_path, bool as_json, bool verbose) {
    auto doc = tvc::parse_instance(read_file(input));
    auto t0 = std::chrono::steady_clock::now();
    auto outcome =
        run_algorithm(algo, doc, delta, k, swap, epsilon, guard, gap1, gap2, verbose);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (!outcome.found) {
        std::cerr << "no cover of size <= " << k << " exists\n";
        return kExitInfeasible;
    }

    const tvc::PartialBounds* bounds = doc.bounds ? &*doc.bounds : nullptr;
    bool verified = algo == "greedy-tvc"
                        ? tvc::verify_cover(doc.graph, doc.graph.lifetime(), outcome.cover).valid
                        : tvc::verify_cover(doc.graph, delta, outcome.cover, bounds).valid;

    if (!output.empty()) write_file(output, tvc::serialize_solution(outcome.cover));

    json report{{"algorithm", algo},
                {"delta", delta},
                {"size", outcome.cover.size()},
                {"time_ms", ms},
                {"params", outcome.params.is_null() ? json::object() : outcome.params},
                {"verified", verified}};
    if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << "size " << outcome.cover.size() << " time_ms " << ms << " verified "
                  << (verified ? "yes" : "no") << '\n';
    return verified ? kExitValid : kExitInvalid;
}

int cmd_verify(const std::string& input, const std::string& solution, int delta) {
    auto doc = tvc::parse_instance(read_file(input));
    auto cover = tvc::parse_solution(read_file(solution));
    const tvc::PartialBounds* bounds = doc.bounds ? &*doc.bounds : nullptr;
    auto report = tvc::verify_cover(doc.graph, delta, cover, bounds);
    if (report.valid) {
        std::cout << "valid (" << cover.size() << " appearances)\n";
        return kExitValid;
    }
    for (const auto& v : report.violations) {
        const auto& e = doc.graph.edge(v.edge);
        std::cout << "violation edge " << v.edge << " (" << e.u << "-" << e.v << ") window "
                  << v.window << '\n';
    }
    std::cout << "invalid (" << report.violations.size() << " uncovered windows)\n";
    return kExitInvalid;
}

int cmd_gen_random(const tvc::RandomSpec& spec, const std::string& topology, int degree,
                   const std::string& output) {
    tvc::RandomSpec s = spec;
    if (topology == "path") s.topology = tvc::Topology::path;
    else if (topology == "cycle") s.topology = tvc::Topology::cycle;
    else if (topology == "general") s.topology = tvc::Topology::general;
    else if (topology == "degree-bounded") s.topology = tvc::Topology::degree_bounded;
    else throw tvc::InputError("unknown topology '" + topology + "'");
    s.degree_bound = degree;
    tvc::InstanceDocument doc{tvc::generate_random(s), std::nullopt, "", ""};
    write_file(output, tvc::serialize_instance(doc));
    return kExitValid;
}

int cmd_gen_gadget(const std::string& kind, int d, int k, int start,
                   const std::string& output) {
    tvc::InstanceDocument doc;
    if (kind == "block") doc.graph = tvc::segment_block_instance(start);
    else if (kind == "chain") doc.graph = tvc::chain_instance(d, start);
    else if (kind == "vertical") doc = tvc::vertical_instance(k);
    else if (kind == "clause-mini") doc = tvc::clause_assembly_instance(false);
    else if (kind == "clause-mini-pinned") doc = tvc::clause_assembly_instance(true);
    else throw tvc::InputError("unknown gadget '" + kind + "'");
    write_file(output, tvc::serialize_instance(doc));
    return kExitValid;
}

json layout_to_json(const tvc::ReductionOutput& out) {
    json j;
    j["target_size"] = out.target_size;
    j["clause_terms"] = out.clause_terms;
    j["variable_row"] = out.var_row;
    j["vertices"] = out.instance.vertex_count();
    j["lifetime"] = out.instance.lifetime();
    json blocks = json::array();
    for (std::size_t v = 1; v < out.block_sv.size(); ++v)
        for (std::size_t g = 0; g < out.block_sv[v].size(); ++g)
            blocks.push_back({{"var", v}, {"copy", g + 1}, {"start_vertex", out.block_sv[v][g]}});
    j["blocks"] = std::move(blocks);
    json clauses = json::array();
    for (const auto& geo : out.clause_geo)
        clauses.push_back({{"t_clause", geo.t_clause},
                           {"connector_row", geo.conn_row},
                           {"block_starts", geo.block_sv},
                           {"vertical_k", geo.k_height},
                           {"p1", geo.p1},
                           {"p2", geo.p2}});
    j["clauses"] = std::move(clauses);
    json frags = json::array();
    for (const auto& fr : out.fragments) {
        static const char* names[] = {"block", "bridge", "vertical", "clause_column",
                                      "connector"};
        frags.push_back({{"kind", names[static_cast<int>(fr.kind)]},
                         {"var", fr.var},
                         {"copy", fr.copy},
                         {"clause", fr.clause},
                         {"vertex_lo", fr.lo_vertex},
                         {"vertex_hi", fr.hi_vertex},
                         {"time_lo", fr.lo_time},
                         {"time_hi", fr.hi_time},
                         {"time_edges", fr.time_edges}});
    }
    j["fragments"] = std::move(frags);
    return j;
}

int cmd_reduce(const std::string& formula_path, const std::string& output,
               const std::string& layout_path, const std::string& assign,
               const std::string& witness_path, bool cycle) {
    auto formula = tvc::parse_formula(read_file(formula_path));
    auto out = tvc::reduce_formula(formula);
    tvc::TemporalGraph instance = cycle ? tvc::to_cycle(out) : out.instance;
    write_file(output, tvc::serialize_instance({instance, std::nullopt, "", ""}));
    if (!layout_path.empty()) write_file(layout_path, layout_to_json(out).dump(2) + "\n");

    long long target = out.target_size + (cycle ? 1 : 0);
    std::cout << "vertices " << instance.vertex_count() << " lifetime " << instance.lifetime()
              << " target " << target << '\n';

    if (!assign.empty()) {
        std::vector<bool> tau;
        if (assign == "all-true") {
            tau.assign(out.formula.num_vars, true);
        } else if (assign == "all-false") {
            tau.assign(out.formula.num_vars, false);
        } else {
            for (char c : assign) {
                if (c == '1') tau.push_back(true);
                else if (c == '0') tau.push_back(false);
                else if (c != ',') throw tvc::InputError("bad --assign string");
            }
        }
        auto cover = tvc::assignment_to_cover(out, tau);
        if (cycle) cover = tvc::extend_cover_for_cycle(out, cover);
        if (!witness_path.empty()) write_file(witness_path, tvc::serialize_solution(cover));
        bool ok = tvc::verify_cover(instance, 2, cover).valid;
        std::cout << "witness size " << cover.size() << " verified " << (ok ? "yes" : "no")
                  << '\n';
    }
    return kExitValid;
}

struct BenchEntry {
    std::string name;
    std::string path;
    int delta = 2;
    std::vector<std::string> algos;
};

int cmd_bench(const std::string& suite_path, const std::string& output) {
    std::istringstream manifest(read_file(suite_path));
    std::vector<BenchEntry> entries;
    std::string line;
    while (std::getline(manifest, line)) {
        auto stripped = line.substr(0, line.find('#'));
        std::istringstream in(stripped);
        BenchEntry entry;
        std::string algos;
        if (!(in >> entry.name >> entry.path >> entry.delta >> algos)) continue;
        std::istringstream alist(algos);
        std::string a;
        while (std::getline(alist, a, ',')) entry.algos.push_back(a);
        entries.push_back(std::move(entry));
    }

    struct Row {
        std::string instance, algorithm;
        int delta;
        std::size_t size;
        std::optional<int> optimum;
        std::optional<double> ratio;
        long long time_ms;
        std::uint64_t explored;
    };
    std::vector<std::vector<Row>> results(entries.size());

    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TVC_THREADS")) threads = std::max(1, std::atoi(env));
    threads = std::max(1, std::min<int>(threads, static_cast<int>(entries.size())));

    std::atomic<std::size_t> next{0};
    std::string failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1)) {
            try {
                const auto& entry = entries[i];
                auto doc = tvc::parse_instance(read_file(entry.path));
                std::optional<int> optimum;
                try {
                    optimum = tvc::solve_partial(doc.graph, entry.delta,
                                                 doc.bounds ? &*doc.bounds : nullptr)
                                  .size;
                } catch (const tvc::GuardError&) {
                }
                for (const auto& algo : entry.algos) {
                    if (algo == "fpt")
                        throw tvc::InputError("fpt needs --k; bench with oracle instead");
                    auto t0 = std::chrono::steady_clock::now();
                    auto outcome =
                        run_algorithm(algo, doc, entry.delta, -1, 3, 0.6, 0, 0, 0, false);
                    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                    Row row{entry.name, algo, entry.delta, outcome.cover.size(),
                            optimum,    {},   ms,          outcome.explored};
                    if (optimum && *optimum > 0)
                        row.ratio = static_cast<double>(row.size) / *optimum;
                    results[i].push_back(std::move(row));
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure.empty()) failure = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!failure.empty()) throw tvc::InputError("bench: " + failure);

    std::ostringstream csv;
    csv << "instance,algorithm,delta,size,optimum,ratio,time_ms,explored\n";
    for (const auto& rows : results)
        for (const auto& r : rows) {
            csv << r.instance << ',' << r.algorithm << ',' << r.delta << ',' << r.size << ',';
            if (r.optimum) csv << *r.optimum;
            csv << ',';
            if (r.ratio) csv << *r.ratio;
            csv << ',' << r.time_ms << ',' << r.explored << '\n';
        }
    write_file(output, csv.str());
    std::cout << csv.str();
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal vertex cover toolbox"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance and write the cover");
    std::string in_path, out_path, algo = "dp", report_path;
    int delta = 2, k = -1, swap = 0, gap1 = 0, gap2 = 0;
    double epsilon = 0;
    std::uint64_t guard = 0;
    bool as_json = false, verbose = false;
    solve->add_option("-i,--input", in_path)->required();
    solve->add_option("-o,--output", out_path);
    solve->add_option("-a,--algo", algo);
    solve->add_option("-d,--delta", delta);
    solve->add_option("-k,--k", k);
    solve->add_option("--swap", swap);
    solve->add_option("--epsilon", epsilon);
    solve->add_option("--guard", guard);
    solve->add_option("--phase1-gap", gap1);
    solve->add_option("--phase2-gap", gap2);
    solve->add_option("--report", report_path);
    solve->add_flag("--json", as_json);
    solve->add_flag("--verbose", verbose);

    // verify
    auto* verify = app.add_subcommand("verify", "check a solution file");
    std::string v_in, v_sol;
    int v_delta = 2;
    verify->add_option("-i,--input", v_in)->required();
    verify->add_option("-s,--solution", v_sol)->required();
    verify->add_option("-d,--delta", v_delta);

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    auto* gen_random = gen->add_subcommand("random", "seeded random instance");
    tvc::RandomSpec spec;
    std::string topology = "general", g_out;
    int degree = 3;
    gen_random->add_option("-n,--n", spec.n);
    gen_random->add_option("--edge-prob", spec.edge_probability);
    gen_random->add_option("--label-prob", spec.label_probability);
    gen_random->add_option("--tmax", spec.t_max);
    gen_random->add_option("--seed", spec.seed);
    gen_random->add_option("--topology", topology);
    gen_random->add_option("--degree", degree);
    gen_random->add_option("-o,--output", g_out)->required();

    auto* gen_gadget = gen->add_subcommand("gadget", "hardness gadget instance");
    std::string kind = "block", gg_out;
    int gg_d = 2, gg_k = 2, gg_start = 2;
    gen_gadget->add_option("--kind", kind);
    gen_gadget->add_option("--d", gg_d);
    gen_gadget->add_option("--gadget-k", gg_k);
    gen_gadget->add_option("--start", gg_start);
    gen_gadget->add_option("-o,--output", gg_out)->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "compile a monotone 3SAT embedding");
    std::string formula_path, r_out, layout_path, assign, witness_path;
    bool cycle = false;
    reduce->add_option("-f,--formula", formula_path)->required();
    reduce->add_option("-o,--output", r_out)->required();
    reduce->add_option("--layout", layout_path);
    reduce->add_option("--assign", assign);
    reduce->add_option("--witness", witness_path);
    reduce->add_flag("--cycle", cycle);

    // bench
    auto* bench = app.add_subcommand("bench", "run a suite manifest, emit CSV");
    std::string suite_path, b_out;
    bench->add_option("--suite", suite_path)->required();
    bench->add_option("-o,--output", b_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(in_path, out_path, algo, delta, k, swap, epsilon, guard, gap1, gap2,
                             report_path, as_json, verbose);
        if (verify->parsed()) return cmd_verify(v_in, v_sol, v_delta);
        if (gen->parsed() && gen_random->parsed())
            return cmd_gen_random(spec, topology, degree, g_out);
        if (gen->parsed() && gen_gadget->parsed())
            return cmd_gen_gadget(kind, gg_d, gg_k, gg_start, gg_out);
        if (reduce->parsed())
            return cmd_reduce(formula_path, r_out, layout_path, assign, witness_path, cycle);
        if (bench->parsed()) return cmd_bench(suite_path, b_out);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const tvc::GuardError& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const tvc::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const tvc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
