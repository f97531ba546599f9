#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgemin/orbit.hpp"
#include "edgemin_cli/cli.hpp"

namespace edgemin::cli {

struct BenchMethods {
    bool sa = false;
    bool orbit = false;
    bool ilp = false;

    std::string label() const;
};

BenchMethods parse_methods(const std::string& text);

struct BenchArgs {
    std::string model = "er";
    std::vector<std::size_t> sizes;
    std::vector<double> params;
    std::size_t count = 30;
    BenchMethods methods;
    std::size_t orbit_limit = kDefaultOrbitLimit;
    std::size_t node_budget = 50'000'000;
    std::size_t threads = 1;
    std::string out;
    std::uint64_t seed = 0;
    struct {
        std::size_t k_max = 100;
        double t1 = 100.0;
    } sa;
};

/// One CSV row. Optional fields print as empty cells.
struct BenchRecord {
    std::string model;
    std::size_t n = 0;
    std::string parameter;
    std::uint64_t seed = 0;
    std::size_t input_edges = 0;
    std::optional<std::size_t> sa_edges;
    std::optional<std::size_t> exact_edges;
    std::optional<double> sa_runtime_ms;
    std::optional<double> ilp_runtime_ms;
    std::string method;

    std::string key() const;
    std::string csv() const;
};

/// Orbit and ILP disagree on an exact minimum.
struct BenchMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs every (n, parameter, replicate) instance missing from args.out and
/// rewrites the file with all rows in instance order.
int run_bench(const BenchArgs& args, std::ostream& err);

}  // namespace edgemin::cli
