#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evg/diffusion.hpp"
#include "evg/gadget.hpp"
#include "evg/generate.hpp"
#include "evg/graph.hpp"
#include "evg/oracle.hpp"
#include "evg/solver_clique.hpp"
#include "evg/solver_dense.hpp"
#include "evg/solver_nd.hpp"
#include "evg/solver_tree.hpp"

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string detect_class(const evg::Graph& g) {
    if (g.is_complete()) return "clique";
    if (g.is_forest()) return "forest";
    return "general";
}

json instance_summary(const std::string& path, const evg::Graph& g) {
    evg::TypePartition p = evg::compute_type_partition(g);
    return json{{"path", path},
                {"n", g.node_count()},
                {"m", g.edge_count()},
                {"class", detect_class(g)},
                {"nd", p.t()}};
}

json result_json(const std::string& problem, const evg::SolveResult& r) {
    return json{{"problem", problem},
                {"solver", r.solver},
                {"objective", r.objective},
                {"seed", r.seed.members},
                {"seed_size", r.seed.size()},
                {"budget", r.seed.budget ? json(*r.seed.budget) : json(nullptr)},
                {"explored", r.explored},
                {"alpha", nullptr},
                {"feasible", nullptr}};
}

void emit(const json& report, const std::string& summary) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
}

evg::SolveResult solve_mes_auto(const evg::Graph& g, int beta, std::uint64_t max_comp) {
    if (g.is_complete()) return evg::solve_mes_clique(g, beta);
    if (g.is_forest()) return evg::solve_mes_tree(g, beta);
    try {
        return evg::solve_mes_nd(g, beta, max_comp);
    } catch (const evg::WorkGuardError& e) {
        throw evg::WorkGuardError(std::string(e.what()) +
                                  "; for small instances try --solver oracle");
    }
}

evg::SolveResult dispatch_mes(const evg::Graph& g, int beta, const std::string& solver,
                              std::uint64_t max_comp, int oracle_max_n) {
    if (solver == "auto") return solve_mes_auto(g, beta, max_comp);
    if (solver == "tree") return evg::solve_mes_tree(g, beta);
    if (solver == "clique") return evg::solve_mes_clique(g, beta);
    if (solver == "nd") return evg::solve_mes_nd(g, beta, max_comp);
    if (solver == "oracle") return evg::brute_force_mes(g, beta, oracle_max_n);
    throw evg::PreconditionError("unknown MES solver '" + solver + "'");
}

struct BenchRow {
    int id;
    std::string family;
    int n, m, beta, nd_t;
    std::string solver, status;
    long long objective;
    std::uint64_t explored;
    double wall_ms;
};

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "instance,family,n,m,beta,nd_t,solver,status,objective,explored,wall_ms\n";
    for (const auto& r : rows)
        out << r.id << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.beta << ','
            << r.nd_t << ',' << r.solver << ',' << r.status << ',' << r.objective << ','
            << r.explored << ',' << r.wall_ms << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for the two-threshold evangelization model"};
    app.require_subcommand(1);

    std::string graph_path, out_path, mes_solver = "auto", pes_solver = "binary-search";
    std::string bench_solver = "auto", inner_mes_solver = "auto";
    std::string family = "tree", kind_name = "tree", sizes_csv;
    std::vector<int> seed_nodes;
    int budget = 0, alpha = -1, nodes = 0, classes = 2, tmax_e = -1, tmax_i = -1;
    int oracle_max_n = evg::kDefaultOracleMaxN, max_degree = 0;
    std::uint64_t rng_seed = 1, max_comp = evg::kDefaultMaxCompositions;
    double edge_prob = 0.5;
    bool want_trace = false;

    auto* sim = app.add_subcommand("simulate", "Run the diffusion process from a seed set");
    sim->add_option("--graph", graph_path, "instance file")->required();
    sim->add_option("--seed", seed_nodes, "seed node ids");
    sim->add_flag("--trace", want_trace, "record per-round deltas");

    auto* solve = app.add_subcommand("solve", "Solve MES or PES");
    auto* mes = solve->add_subcommand("mes", "maximize |Inf[S]| under |S| <= budget");
    mes->add_option("--graph", graph_path, "instance file")->required();
    mes->add_option("--budget", budget, "seed budget beta")->required();
    mes->add_option("--solver", mes_solver, "auto|tree|clique|nd|oracle");
    mes->add_option("--alpha", alpha, "decision mode: require |Inf[S]| >= alpha");
    mes->add_option("--max-compositions", max_comp, "work guard for the nd solver");
    mes->add_option("--max-n", oracle_max_n, "size guard for the oracle");

    auto* pes = solve->add_subcommand("pes", "find a minimum perfect seed set");
    pes->add_option("--graph", graph_path, "instance file")->required();
    pes->add_option("--solver", pes_solver, "binary-search|oracle|dense");
    pes->add_option("--mes-solver", inner_mes_solver, "inner MES solver for binary-search");
    pes->add_option("--tmax-e", tmax_e, "dense: bound on t_E (default: instance max)");
    pes->add_option("--tmax-i", tmax_i, "dense: bound on t_I (default: instance max)");
    pes->add_option("--max-compositions", max_comp, "work guard for the nd solver");
    pes->add_option("--max-n", oracle_max_n, "size guard for the oracle");

    auto* part = app.add_subcommand("partition", "Print the type partition");
    part->add_option("--graph", graph_path, "instance file")->required();

    auto* gadget = app.add_subcommand("gadget", "Instance reductions");
    auto* im2mes = gadget->add_subcommand("im-to-mes", "star gadget: IM -> MES with t_I == 1");
    im2mes->add_option("--graph", graph_path, "IM instance (t_I == t_E)")->required();
    im2mes->add_option("--out", out_path, "output instance file")->required();

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--kind", kind_name, "tree|clique|bounded_nd|dense_dirac|random_gnp")
        ->required();
    gen->add_option("--nodes", nodes, "node count")->required();
    gen->add_option("--classes", classes, "bounded_nd: class count");
    gen->add_option("--edge-prob", edge_prob, "random_gnp: edge probability");
    gen->add_option("--tmax-e", tmax_e, "dense_dirac: t_E bound");
    gen->add_option("--tmax-i", tmax_i, "dense_dirac: t_I bound");
    gen->add_option("--max-degree", max_degree, "tree: degree cap (0 = unbounded)");
    gen->add_option("--rng-seed", rng_seed, "generator seed");
    gen->add_option("--out", out_path, "output instance file")->required();

    auto* bench = app.add_subcommand("bench", "Sweep generated instances, emit CSV");
    bench->add_option("--family", family, "generator kind");
    bench->add_option("--sizes", sizes_csv, "comma-separated node counts");
    bench->add_option("--budget", budget, "budget for MES solves");
    bench->add_option("--solver", bench_solver, "solver (default auto)");
    bench->add_option("--classes", classes, "bounded_nd: class count");
    bench->add_option("--edge-prob", edge_prob, "random_gnp: edge probability");
    bench->add_option("--tmax-e", tmax_e, "dense_dirac: t_E bound");
    bench->add_option("--tmax-i", tmax_i, "dense_dirac: t_I bound");
    bench->add_option("--max-degree", max_degree, "tree: degree cap");
    bench->add_option("--rng-seed", rng_seed, "base generator seed");
    bench->add_option("--out", out_path, "CSV file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        auto start = std::chrono::steady_clock::now();

        if (sim->parsed()) {
            evg::Graph g = evg::load_graph_file(graph_path);
            evg::SeedSet s;
            s.members = seed_nodes;
            std::sort(s.members.begin(), s.members.end());
            s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
            evg::DiffusionResult r = evg::run_diffusion(g, s, want_trace);

            json result{{"problem", "simulate"},
                        {"seed", s.members},
                        {"evangelists", r.evangelists},
                        {"influenced", r.influenced},
                        {"evangelist_count", r.evangelist_count()},
                        {"influenced_count", r.influenced_count()},
                        {"rounds", r.rounds},
                        {"trace", nullptr}};
            if (r.trace) {
                json tr = json::array();
                for (std::size_t i = 0; i < r.trace->size(); ++i)
                    tr.push_back(json{{"round", i + 1},
                                      {"evangelized", (*r.trace)[i].evangelized},
                                      {"influenced", (*r.trace)[i].influenced}});
                result["trace"] = tr;
            }
            json report{{"command", "simulate"},
                        {"instance", instance_summary(graph_path, g)},
                        {"result", result},
                        {"wall_ms", ms_since(start)}};
            emit(report, "simulate: Inf count " + std::to_string(r.influenced_count()) +
                             ", rounds " + std::to_string(r.rounds));
            return 0;
        }

        if (mes->parsed()) {
            evg::Graph g = evg::load_graph_file(graph_path);
            evg::SolveResult r = dispatch_mes(g, budget, mes_solver, max_comp, oracle_max_n);
            json result = result_json("mes", r);
            std::string note = "mes: objective " + std::to_string(r.objective) + " (solver " +
                               r.solver + ")";
            if (alpha >= 0) {
                result["alpha"] = alpha;
                result["feasible"] = r.objective >= alpha;
                note += r.objective >= alpha ? ", feasible" : ", infeasible";
            }
            json report{{"command", "solve mes"},
                        {"instance", instance_summary(graph_path, g)},
                        {"result", result},
                        {"wall_ms", ms_since(start)}};
            emit(report, note);
            return 0;
        }

        if (pes->parsed()) {
            evg::Graph g = evg::load_graph_file(graph_path);
            evg::SolveResult r;
            if (pes_solver == "binary-search") {
                r = evg::pes_via_binary_search(g, [&](const evg::Graph& gg, int b) {
                    return dispatch_mes(gg, b, inner_mes_solver, max_comp, oracle_max_n);
                });
            } else if (pes_solver == "oracle") {
                r = evg::brute_force_pes(g, oracle_max_n);
            } else if (pes_solver == "dense") {
                int te = tmax_e, ti = tmax_i;
                for (int v = 0; v < g.node_count(); ++v) {
                    if (tmax_e < 0) te = std::max(te, g.threshold_evangelize(v));
                    if (tmax_i < 0) ti = std::max(ti, g.threshold_influence(v));
                }
                te = std::max(te, 0);
                ti = std::max(ti, 0);
                r = evg::build_pes_dense(g, te, ti);
            } else {
                throw evg::PreconditionError("unknown PES solver '" + pes_solver + "'");
            }
            json report{{"command", "solve pes"},
                        {"instance", instance_summary(graph_path, g)},
                        {"result", result_json("pes", r)},
                        {"wall_ms", ms_since(start)}};
            emit(report, "pes: size " + std::to_string(r.objective) + " (solver " + r.solver + ")");
            return 0;
        }

        if (part->parsed()) {
            evg::Graph g = evg::load_graph_file(graph_path);
            evg::TypePartition p = evg::compute_type_partition(g);
            json classes_json = json::array();
            for (int i = 0; i < p.t(); ++i)
                classes_json.push_back(json{{"members", p.classes[i]},
                                            {"kind", p.is_clique[i] ? "clique" : "independent"}});
            json report{{"command", "partition"},
                        {"instance", instance_summary(graph_path, g)},
                        {"result", json{{"problem", "partition"}, {"t", p.t()},
                                        {"classes", classes_json}}},
                        {"wall_ms", ms_since(start)}};
            emit(report, "partition: t = " + std::to_string(p.t()));
            return 0;
        }

        if (im2mes->parsed()) {
            evg::Graph g = evg::load_graph_file(graph_path);
            evg::IMInstance im = evg::make_im_instance(std::move(g), 0);
            evg::Graph out = evg::im_to_mes_gadget(im);
            evg::save_graph_file(out, out_path);
            json report{{"command", "gadget im-to-mes"},
                        {"instance", instance_summary(graph_path, im.graph)},
                        {"result", json{{"problem", "gadget"},
                                        {"out", out_path},
                                        {"n", out.node_count()},
                                        {"m", out.edge_count()}}},
                        {"wall_ms", ms_since(start)}};
            emit(report, "gadget: wrote " + out_path + " with n = " +
                             std::to_string(out.node_count()));
            return 0;
        }

        if (gen->parsed()) {
            evg::GenParams params;
            params.nodes = nodes;
            params.classes = classes;
            params.edge_prob = edge_prob;
            params.tmax_e = std::max(tmax_e, 0);
            params.tmax_i = std::max(tmax_i, 0);
            params.max_degree = max_degree;
            evg::Graph g = evg::generate_instance(evg::instance_kind_from_string(kind_name),
                                                  params, rng_seed);
            evg::save_graph_file(g, out_path);
            json report{{"command", "gen"},
                        {"instance", instance_summary(out_path, g)},
                        {"result", json{{"problem", "gen"},
                                        {"kind", kind_name},
                                        {"out", out_path},
                                        {"rng_seed", rng_seed}}},
                        {"wall_ms", ms_since(start)}};
            emit(report, "gen: wrote " + out_path);
            return 0;
        }

        if (bench->parsed()) {
            std::vector<int> sizes;
            std::string tok;
            std::istringstream sizes_in(sizes_csv);
            while (std::getline(sizes_in, tok, ','))
                if (!tok.empty()) sizes.push_back(std::stoi(tok));

            std::vector<BenchRow> rows;
            evg::InstanceKind kind = evg::instance_kind_from_string(family);
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                evg::GenParams params;
                params.nodes = sizes[i];
                params.classes = classes;
                params.edge_prob = edge_prob;
                params.tmax_e = std::max(tmax_e, 0);
                params.tmax_i = std::max(tmax_i, 0);
                params.max_degree = max_degree;
                BenchRow row{static_cast<int>(i), family, sizes[i], 0, budget, 0,
                             bench_solver, "ok", 0, 0, 0.0};
                try {
                    evg::Graph g = evg::generate_instance(kind, params, rng_seed + i);
                    row.m = static_cast<int>(g.edge_count());
                    row.nd_t = evg::compute_type_partition(g).t();
                    auto t0 = std::chrono::steady_clock::now();
                    evg::SolveResult r =
                        dispatch_mes(g, budget, bench_solver, max_comp, oracle_max_n);
                    row.wall_ms = ms_since(t0);
                    row.solver = r.solver;
                    row.objective = r.objective;
                    row.explored = r.explored;
                } catch (const std::exception& e) {
                    row.status = std::string("error: ") + e.what();
                }
                rows.push_back(row);
            }
            if (out_path.empty()) {
                write_bench_csv(std::cout, rows);
            } else {
                std::ofstream out(out_path);
                if (!out) throw evg::ParseError("cannot write '" + out_path + "'");
                write_bench_csv(out, rows);
            }
            std::cerr << "bench: " << rows.size() << " rows\n";
            return 0;
        }
    } catch (const evg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const evg::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const evg::WorkGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
