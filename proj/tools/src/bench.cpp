#include "bench.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "edgemin/annealing.hpp"
#include "edgemin/edm_ilp.hpp"
#include "edgemin/generators.hpp"
#include "edgemin/rng.hpp"

namespace edgemin::cli {

namespace {

std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

template <class T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>)
        return format_double(*v, "%.3f");
    else
        return std::to_string(*v);
}

struct Instance {
    std::size_t n;
    double parameter;
    std::uint64_t seed;
    std::string key;
};

std::vector<Instance> plan(const BenchArgs& a) {
    std::vector<Instance> out;
    for (std::size_t n : a.sizes)
        for (std::size_t pi = 0; pi < a.params.size(); ++pi)
            for (std::size_t rep = 0; rep < a.count; ++rep) {
                Instance inst{n, a.params[pi], mix_seed(mix_seed(a.seed, n), mix_seed(pi, rep)), {}};
                BenchRecord r;
                r.model = a.model;
                r.n = n;
                r.parameter = format_double(inst.parameter, "%g");
                r.seed = inst.seed;
                inst.key = r.key();
                out.push_back(std::move(inst));
            }
    return out;
}

double ms_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

BenchRecord run_instance(const BenchArgs& a, const Instance& inst) {
    BenchRecord r;
    r.model = a.model;
    r.n = inst.n;
    r.parameter = format_double(inst.parameter, "%g");
    r.seed = inst.seed;
    r.method = a.methods.label();

    Graph g;
    if (a.model == "er") {
        g = erdos_renyi(inst.n, inst.parameter, inst.seed);
    } else {
        if (inst.parameter < 1 || inst.parameter != static_cast<double>(static_cast<std::size_t>(inst.parameter)))
            throw std::invalid_argument("degree limits must be positive integers");
        g = bounded_degree(inst.n, static_cast<std::size_t>(inst.parameter), inst.seed);
    }
    r.input_edges = g.edge_count();

    if (a.methods.sa) {
        SaConfig cfg;
        cfg.k_max = a.sa.k_max;
        cfg.t1 = a.sa.t1;
        cfg.seed = inst.seed;
        cfg.record_trace = false;
        const auto t = std::chrono::steady_clock::now();
        r.sa_edges = edm_sa(g, cfg).best_graph.edge_count();
        r.sa_runtime_ms = ms_since(t);
    }
    if (a.methods.orbit) r.exact_edges = exact_mer(g, a.orbit_limit).graph.edge_count();
    if (a.methods.ilp) {
        SolverOptions opts;
        opts.node_budget = a.node_budget;
        const auto t = std::chrono::steady_clock::now();
        const auto res = edm_ilp(g, nullptr, opts);
        r.ilp_runtime_ms = ms_since(t);
        if (res.solution.status != SolveStatus::optimal)
            throw std::runtime_error("ILP budget exhausted on instance " + inst.key);
        const std::size_t e = res.graph.edge_count();
        if (r.exact_edges && *r.exact_edges != e)
            throw BenchMismatch("orbit and ILP minima differ on instance " + inst.key);
        r.exact_edges = e;
    }
    return r;
}

// Key of an existing CSV row: the first four columns.
std::string row_key(const std::string& line) {
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        pos = line.find(',', pos);
        if (pos == std::string::npos) return {};
        ++pos;
    }
    return line.substr(0, pos - 1);
}

}  // namespace

std::string BenchMethods::label() const {
    std::string s;
    for (auto [on, name] : {std::pair{sa, "sa"}, std::pair{orbit, "orbit"}, std::pair{ilp, "ilp"}}) {
        if (!on) continue;
        if (!s.empty()) s += '+';
        s += name;
    }
    return s;
}

BenchMethods parse_methods(const std::string& text) {
    BenchMethods m;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "sa")
            m.sa = true;
        else if (item == "orbit")
            m.orbit = true;
        else if (item == "ilp")
            m.ilp = true;
        else
            throw std::invalid_argument("unknown bench method '" + item + "'");
    }
    if (!m.sa && !m.orbit && !m.ilp) throw std::invalid_argument("no bench methods given");
    return m;
}

std::string BenchRecord::key() const { return model + "," + std::to_string(n) + "," + parameter + "," + std::to_string(seed); }

std::string BenchRecord::csv() const {
    return key() + "," + std::to_string(input_edges) + "," + cell(sa_edges) + "," + cell(exact_edges) + "," +
           cell(sa_runtime_ms) + "," + cell(ilp_runtime_ms) + "," + method;
}

int run_bench(const BenchArgs& a, std::ostream& err) {
    const auto instances = plan(a);

    std::map<std::string, std::string> existing;
    if (std::ifstream in(a.out); in) {
        std::string line;
        bool header = true;
        while (std::getline(in, line)) {
            if (header) {
                header = false;
                if (line != kBenchCsvHeader) throw std::runtime_error(a.out + " is not a bench CSV");
                continue;
            }
            if (!line.empty()) existing[row_key(line)] = line;
        }
    }

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (!existing.contains(instances[i].key)) todo.push_back(i);
    if (!existing.empty())
        err << "resuming: " << instances.size() - todo.size() << " of " << instances.size() << " rows present\n";

    // Finished rows are appended as they complete so an interrupted run keeps them.
    {
        std::ofstream app(a.out, std::ios::app);
        if (!app) throw std::runtime_error("cannot open " + a.out);
        if (existing.empty() && std::filesystem::file_size(a.out) == 0) app << kBenchCsvHeader << "\n";
    }

    std::vector<std::optional<std::string>> done(todo.size());
    std::exception_ptr failure;
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= todo.size()) return;
            std::string row;
            try {
                row = run_instance(a, instances[todo[k]]).csv();
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next = todo.size();
                cv.notify_all();
                return;
            }
            std::lock_guard lock(mu);
            done[k] = std::move(row);
            cv.notify_all();
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t workers = std::max<std::size_t>(1, std::min(a.threads, todo.size()));
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);

        // Single writer, committing rows in instance order.
        std::ofstream app(a.out, std::ios::app);
        for (std::size_t k = 0; k < todo.size(); ++k) {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return done[k].has_value() || failure; });
            if (!done[k]) break;
            app << *done[k] << "\n" << std::flush;
            existing[instances[todo[k]].key] = *done[k];
        }
    }
    if (failure) std::rethrow_exception(failure);

    const std::string tmp = a.out + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        f << kBenchCsvHeader << "\n";
        for (const auto& inst : instances) f << existing.at(inst.key) << "\n";
        if (!f) throw std::runtime_error("failed writing " + tmp);
    }
    std::filesystem::rename(tmp, a.out);
    return 0;
}

}  // namespace edgemin::cli
