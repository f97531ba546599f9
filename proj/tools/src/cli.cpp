#include "edgemin_cli/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "bench.hpp"
#include "edgemin/edm_ilp.hpp"
#include "edgemin/graph_io.hpp"
#include "edgemin/grgs.hpp"
#include "edgemin/lp_format.hpp"
#include "edgemin/orbit.hpp"
#include "edgemin/symplectic.hpp"
#include "json.hpp"

namespace edgemin::cli {

namespace {

using Json = nlohmann::ordered_json;

// Carries an exit code through the command handlers.
struct CliFailure : std::runtime_error {
    CliFailure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

struct SaFlags {
    std::size_t k_max = 100;
    double t1 = 100.0;
    std::uint64_t seed = 0;
    std::string selection = "guided";

    SaConfig config() const {
        SaConfig cfg;
        cfg.k_max = k_max;
        cfg.t1 = t1;
        cfg.seed = seed;
        cfg.selection = selection == "uniform" ? SelectionRule::uniform : SelectionRule::guided;
        return cfg;
    }
};

void add_sa_flags(CLI::App* cmd, SaFlags& f) {
    cmd->add_option("--kmax", f.k_max, "Annealing iterations")->check(CLI::PositiveNumber);
    cmd->add_option("--t1", f.t1, "Initial temperature")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Random seed");
    cmd->add_option("--selection", f.selection, "Vertex selection rule")
        ->check(CLI::IsMember({"guided", "uniform"}));
}

Graph load_graph(const std::string& path) { return parse_graph_auto(read_text_file(path)); }

std::optional<WeightMatrix> load_weights(const std::string& path, std::size_t n) {
    if (path.empty()) return std::nullopt;
    WeightMatrix w = weights_from_json(read_text_file(path));
    if (w.size() != n) throw std::invalid_argument("weight matrix size does not match the graph");
    return w;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("failed writing " + path);
}

std::string format_graph(const Graph& g, const std::string& format) {
    return format == "json" ? graph_to_json(g) + "\n" : write_graph6(g) + "\n";
}

Json witness_json(const SymplecticWitness& w) { return Json::parse(witness_to_json(w)); }

Json sequence_json(std::span<const Vertex> seq) { return Json(std::vector<Vertex>(seq.begin(), seq.end())); }

void require_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw CliFailure(kExitLimit, std::string(what) + " refuses n = " + std::to_string(n) + " (cap " +
                                         std::to_string(cap) + "; raise with --max-n)");
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// ---- minimize -------------------------------------------------------------

struct MinimizeArgs {
    std::string input;
    std::string method = "sa";
    std::string solver = "builtin";
    std::string weights;
    std::string out;
    std::string format = "graph6";
    std::size_t limit = kDefaultOrbitLimit;
    std::size_t budget = SolverOptions{}.node_budget;
    std::optional<std::size_t> max_n;
    bool partial = false;
    SaFlags sa;
};

IlpSolution solve_model(const IlpModel& model, const MinimizeArgs& a, const std::vector<std::int64_t>& hint) {
    if (a.solver == "external") {
        const char* exe = std::getenv(kSolverEnvVar);
        if (exe == nullptr || *exe == '\0')
            throw std::invalid_argument(std::string("--solver external needs ") + kSolverEnvVar);
        const auto dir = std::filesystem::temp_directory_path() /
                         ("edgemin_solve_" + std::to_string(std::hash<std::string>{}(export_lp(model))));
        std::filesystem::create_directories(dir);
        auto sol = solve_external(model, exe, dir.string());
        std::filesystem::remove_all(dir);
        if (!sol) throw CliFailure(kExitLimit, "external solver returned no solution");
        return *sol;
    }
    SolverOptions opts;
    opts.node_budget = a.budget;
    opts.hint = hint;
    return solve_builtin(model, opts);
}

int cmd_minimize(const MinimizeArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(a.input);
    const auto weights = load_weights(a.weights, g.size());
    const WeightMatrix* wptr = weights ? &*weights : nullptr;

    Json res;
    res["method"] = a.method;
    res["n"] = g.size();
    res["input_edges"] = g.edge_count();

    Graph output;
    std::string status = "optimal";
    const auto start = std::chrono::steady_clock::now();
    Json detail;

    auto run_ilp = [&](const Graph& from) {
        const IlpModel model = build_edm_ilp(from, wptr);
        const IlpSolution sol = solve_model(model, a, identity_assignment(model, from));
        status = to_string(sol.status);
        if (!sol.has_assignment()) throw CliFailure(kExitLimit, "ILP solve produced no assignment");
        return decode_graph(model, from.size(), sol.assignment);
    };

    if (a.method == "sa" || a.method == "sailp") {
        SaConfig cfg = a.sa.config();
        cfg.weights = weights;
        const SaResult sa = edm_sa(g, cfg);
        detail["best_edges"] = sa.best_graph.edge_count();
        detail["lc_sequence"] = sequence_json(sa.lc_sequence);
        detail["energy_trace"] = sa.energy_trace;
        detail["seed"] = a.sa.seed;
        res["sa"] = detail;
        output = sa.best_graph;
        if (a.method == "sa") {
            status = "heuristic";
            res["lc_sequence_or_witness"] = sequence_json(sa.lc_sequence);
        } else {
            require_cap(g.size(), a.max_n.value_or(kDefaultIlpMaxN), "ILP");
            output = run_ilp(sa.best_graph);
        }
    } else if (a.method == "ilp") {
        require_cap(g.size(), a.max_n.value_or(kDefaultIlpMaxN), "ILP");
        output = run_ilp(g);
    } else {
        require_cap(g.size(), a.max_n.value_or(kDefaultOrbitMaxN), "orbit enumeration");
        const OrbitResult orbit = enumerate_orbit(g, a.limit);
        if (orbit.truncated()) throw CliFailure(kExitLimit, "orbit exceeds --limit " + std::to_string(a.limit));
        if (wptr == nullptr) {
            const MerResult mer = exact_mer(g, a.limit);
            output = mer.graph;
            res["lc_sequence_or_witness"] = sequence_json(mer.sequence);
        } else {
            std::size_t best = 0;
            for (std::size_t i = 1; i < orbit.size(); ++i)
                if (wptr->energy(orbit.member(i)) < wptr->energy(orbit.member(best))) best = i;
            output = orbit.member(best);
            res["lc_sequence_or_witness"] = sequence_json(orbit.sequence_to(best));
        }
        res["orbit_size"] = orbit.size();
    }

    if (a.method == "ilp" || a.method == "sailp") {
        // Witness from the output back to the input graph.
        const auto w = lc_equivalent(g, output);
        if (!w) throw CliFailure(kExitVerification, "output graph is not LC-equivalent to the input");
        res["lc_sequence_or_witness"] = witness_json(*w);
    }

    res["output_edges"] = output.edge_count();
    if (wptr != nullptr) {
        res["input_energy"] = wptr->energy(g);
        res["output_energy"] = wptr->energy(output);
    }
    res["status"] = status;
    res["output_graph6"] = write_graph6(output);
    res["runtime_ms"] = elapsed_ms(start);

    const bool exhausted = status == to_string(SolveStatus::budget_exhausted);
    if (exhausted && !a.partial) {
        err << "error: solver budget exhausted (use --partial to print the incumbent)\n";
        return kExitLimit;
    }
    out << res.dump() << "\n";
    if (!a.out.empty()) write_file(a.out, format_graph(output, a.format));
    return exhausted ? kExitLimit : kExitOk;
}

// ---- check-lc ---------------------------------------------------------------

int cmd_check_lc(const std::string& first, const std::string& second, std::ostream& out) {
    const Graph target = load_graph(first);
    const Graph source = load_graph(second);
    if (target.size() != source.size()) throw std::invalid_argument("graphs have different vertex counts");
    Json res;
    res["n"] = target.size();
    const auto w = lc_equivalent(target, source);
    res["equivalent"] = w.has_value();
    res["witness"] = w ? witness_json(*w) : Json(nullptr);
    out << res.dump() << "\n";
    return kExitOk;
}

// ---- orbit ------------------------------------------------------------------

int cmd_orbit(const std::string& input, std::size_t limit, std::optional<std::size_t> max_n,
              const std::string& dump, std::ostream& out) {
    const Graph g = load_graph(input);
    require_cap(g.size(), max_n.value_or(kDefaultOrbitMaxN), "orbit enumeration");
    const OrbitResult orbit = enumerate_orbit(g, limit);

    if (!dump.empty()) {
        std::ofstream f(dump, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + dump + " for writing");
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            Json line;
            line["graph6"] = write_graph6(orbit.member(i));
            line["edges"] = orbit.edge_count(i);
            line["lc_sequence"] = sequence_json(orbit.sequence_to(i));
            f << line.dump() << "\n";
        }
    }

    Json res;
    res["n"] = g.size();
    res["orbit_size"] = orbit.size();
    res["truncated"] = orbit.truncated();
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (orbit.edge_count(i) < orbit.edge_count(lo)) lo = i;
        if (orbit.edge_count(i) > orbit.edge_count(hi)) hi = i;
    }
    res["min_edges"] = orbit.edge_count(lo);
    res["max_edges"] = orbit.edge_count(hi);
    if (!orbit.truncated()) {
        const MerResult mer = exact_mer(g, limit);
        res["mer_graph6"] = write_graph6(mer.graph);
        res["mer_lc_sequence"] = sequence_json(mer.sequence);
    }
    out << res.dump() << "\n";
    return orbit.truncated() ? kExitLimit : kExitOk;
}

// ---- ilp-export -------------------------------------------------------------

int cmd_ilp_export(const std::string& input, const std::string& weights, const std::string& path,
                   std::ostream& out) {
    const Graph g = load_graph(input);
    const auto w = load_weights(weights, g.size());
    const std::string lp = export_lp(build_edm_ilp(g, w ? &*w : nullptr));
    if (path.empty())
        out << lp;
    else
        write_file(path, lp);
    return kExitOk;
}

// ---- grgs -------------------------------------------------------------------

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad number in list: '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad number in list: '" + item + "'");
        grid.push_back(v);
    }
    if (grid.empty()) throw std::invalid_argument("empty list");
    return grid;
}

struct GrgsArgs {
    std::string central;
    std::size_t rgs = 0;
    std::size_t leaves = 1;
    std::string p_grid = "0.25,0.5,0.75,1.0";
    double photons = 1.0;
    std::string out;
    SaFlags sa;
};

int cmd_grgs(const GrgsArgs& a, std::ostream& out, std::ostream& err) {
    Grgs grgs;
    if (!a.central.empty())
        grgs = build_grgs(load_graph(a.central), a.leaves);
    else if (a.rgs > 0)
        grgs = build_rgs(a.rgs);
    else
        throw std::invalid_argument("give a central graph file or --rgs m");
    const auto grid = parse_grid(a.p_grid);
    for (double p : grid)
        if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("fusion success probabilities must lie in (0, 1]");

    const ProtocolComparison cmp = compare_protocols(grgs, grid, a.sa.config(), a.photons);
    const std::string csv = protocol_csv(cmp.rows);
    out << csv;
    if (!a.out.empty()) write_file(a.out, csv);
    err << "central edges " << cmp.plan.target.central.edge_count() << " -> " << cmp.plan.reduced.central.edge_count()
        << "; word " << cmp.plan.word.to_string() << "; verified " << (cmp.plan.verified ? "yes" : "no")
        << "; word maps H+L to G+L " << (cmp.plan.word_maps_full_graph ? "yes" : "no") << "\n";
    return kExitOk;
}

std::size_t default_threads() {
    if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return v;
        throw std::invalid_argument(std::string(kThreadsEnvVar) + " must be a positive integer");
    }
    return 1;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-edge representatives of local-Clifford-equivalent graph states"};
    app.require_subcommand(1);

    MinimizeArgs mz;
    auto* minimize = app.add_subcommand("minimize", "Reduce the edge count of a graph state by LC");
    minimize->add_option("input", mz.input, "graph6 or JSON graph file")->required();
    minimize->add_option("--method", mz.method)->check(CLI::IsMember({"sa", "ilp", "sailp", "orbit"}));
    minimize->add_option("--solver", mz.solver, "ILP backend")->check(CLI::IsMember({"builtin", "external"}));
    minimize->add_option("--weights", mz.weights, "JSON weight matrix");
    minimize->add_option("--out", mz.out, "Write the output graph here");
    minimize->add_option("--format", mz.format)->check(CLI::IsMember({"graph6", "json"}));
    minimize->add_option("--limit", mz.limit, "Orbit member limit")->check(CLI::PositiveNumber);
    minimize->add_option("--budget", mz.budget, "ILP node budget")->check(CLI::PositiveNumber);
    minimize->add_option("--max-n", mz.max_n, "Override the size cap of orbit/ilp");
    minimize->add_flag("--partial", mz.partial, "Print the incumbent when the budget runs out");
    add_sa_flags(minimize, mz.sa);

    std::string lc_a;
    std::string lc_b;
    auto* check = app.add_subcommand("check-lc", "Decide LC-equivalence of two graph states");
    check->add_option("target", lc_a)->required();
    check->add_option("source", lc_b)->required();

    std::string orbit_in;
    std::string orbit_out;
    std::size_t orbit_limit = kDefaultOrbitLimit;
    std::optional<std::size_t> orbit_max_n;
    auto* orbit = app.add_subcommand("orbit", "Enumerate the LC orbit of a graph");
    orbit->add_option("input", orbit_in)->required();
    orbit->add_option("--limit", orbit_limit)->check(CLI::PositiveNumber);
    orbit->add_option("--max-n", orbit_max_n);
    orbit->add_option("--out", orbit_out, "Write members as JSON lines");

    std::string export_in;
    std::string export_weights;
    std::string export_out;
    auto* ilp_export = app.add_subcommand("ilp-export", "Write the EDM ILP as a CPLEX LP file");
    ilp_export->add_option("input", export_in)->required();
    ilp_export->add_option("--weights", export_weights);
    ilp_export->add_option("--out", export_out);

    BenchArgs bench_args;
    std::string bench_params;
    std::string bench_methods = "sa,orbit";
    std::optional<std::size_t> bench_threads;
    auto* bench = app.add_subcommand("bench", "Benchmark annealing against exact minima");
    bench->add_option("--model", bench_args.model)->check(CLI::IsMember({"er", "bounded"}));
    bench->add_option("--n", bench_args.sizes, "Vertex counts")->delimiter(',')->required();
    bench->add_option("--params", bench_params, "p values (er) or degree limits (bounded)")->required();
    bench->add_option("--count", bench_args.count, "Instances per (n, parameter)");
    bench->add_option("--methods", bench_methods, "Comma list from sa, orbit, ilp");
    bench->add_option("--limit", bench_args.orbit_limit)->check(CLI::PositiveNumber);
    bench->add_option("--budget", bench_args.node_budget)->check(CLI::PositiveNumber);
    bench->add_option("--threads", bench_threads)->check(CLI::PositiveNumber);
    bench->add_option("--out", bench_args.out, "CSV path; existing rows are kept and skipped")->required();
    bench->add_option("--kmax", bench_args.sa.k_max)->check(CLI::PositiveNumber);
    bench->add_option("--t1", bench_args.sa.t1)->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed);

    GrgsArgs ga;
    auto* grgs = app.add_subcommand("grgs", "Compare naive and Commute-LC fusion costs of a gRGS");
    grgs->add_option("central", ga.central, "Central graph file");
    grgs->add_option("--rgs", ga.rgs, "Use the complete-core RGS with 2m core vertices");
    grgs->add_option("--leaves", ga.leaves, "Leaves per central vertex")->check(CLI::PositiveNumber);
    grgs->add_option("--p-grid", ga.p_grid, "Fusion success probabilities");
    grgs->add_option("--photons-per-ghz", ga.photons, "Resource multiplier per GHZ-3")->check(CLI::PositiveNumber);
    grgs->add_option("--out", ga.out, "Also write the CSV here");
    add_sa_flags(grgs, ga.sa);

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*minimize) return cmd_minimize(mz, out, err);
        if (*check) return cmd_check_lc(lc_a, lc_b, out);
        if (*orbit) return cmd_orbit(orbit_in, orbit_limit, orbit_max_n, orbit_out, out);
        if (*ilp_export) return cmd_ilp_export(export_in, export_weights, export_out, out);
        if (*bench) {
            bench_args.params = parse_grid(bench_params);
            bench_args.methods = parse_methods(bench_methods);
            bench_args.threads = bench_threads.value_or(default_threads());
            return run_bench(bench_args, err);
        }
        if (*grgs) return cmd_grgs(ga, out, err);
    } catch (const CliFailure& e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const OrbitTruncated& e) {
        err << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const BenchMismatch& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace edgemin::cli
