#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgemin/generators.hpp"
#include "edgemin/graph_io.hpp"
#include "edgemin_cli/cli.hpp"
#include "json.hpp"

using namespace edgemin;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "edgemin");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("edgemin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto p = (dir_ / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string without_runtime(std::string json_line) {
    auto j = nlohmann::ordered_json::parse(json_line);
    j.erase("runtime_ms");
    return j.dump();
}

}  // namespace

TEST_F(CliTest, MinimizeCompleteGraphEveryMethod) {
    const auto k5 = write("k5.g6", write_graph6(Graph::complete(5)) + "\n");
    for (const char* method : {"sa", "ilp", "sailp", "orbit"}) {
        const auto r = run({"minimize", k5, "--method", method});
        ASSERT_EQ(r.code, 0) << method << r.err;
        const auto j = nlohmann::json::parse(r.out);
        EXPECT_EQ(j["output_edges"], 4) << method;
        EXPECT_EQ(j["input_edges"], 10);
        EXPECT_TRUE(j.contains("lc_sequence_or_witness"));
        EXPECT_TRUE(j.contains("runtime_ms"));
    }
}

TEST_F(CliTest, MinimizeCycleByIlp) {
    const auto c5 = write("c5.json", graph_to_json(Graph::cycle(5)));
    const auto r = run({"minimize", c5, "--method", "ilp", "--out", path("out.json"), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["output_edges"], 5);
    EXPECT_EQ(j["status"], "optimal");
    EXPECT_EQ(graph_from_json(read_text_file(path("out.json"))).edge_count(), 5u);
}

TEST_F(CliTest, SaJsonFields) {
    const auto g = write("g.g6", write_graph6(erdos_renyi(10, 0.6, 1)) + "\n");
    const auto r = run({"minimize", g, "--method", "sa", "--kmax", "30", "--seed", "7"});
    ASSERT_EQ(r.code, 0);
    const auto sa = nlohmann::json::parse(r.out)["sa"];
    EXPECT_EQ(sa["energy_trace"].size(), 30u);
    EXPECT_EQ(sa["seed"], 7);
    EXPECT_TRUE(sa.contains("best_edges"));
    EXPECT_TRUE(sa.contains("lc_sequence"));
}

TEST_F(CliTest, SizeCapsAndBudget) {
    const auto big = write("big.g6", write_graph6(erdos_renyi(20, 0.5, 3)) + "\n");
    EXPECT_EQ(run({"minimize", big, "--method", "orbit"}).code, cli::kExitLimit);
    EXPECT_EQ(run({"minimize", big, "--method", "ilp"}).code, cli::kExitLimit);
    const auto mid = write("mid.g6", write_graph6(erdos_renyi(8, 0.5, 3)) + "\n");
    EXPECT_EQ(run({"minimize", mid, "--method", "ilp", "--budget", "3"}).code, cli::kExitLimit);
    const auto partial = run({"minimize", mid, "--method", "ilp", "--budget", "3", "--partial"});
    EXPECT_EQ(partial.code, cli::kExitLimit);
    EXPECT_EQ(nlohmann::json::parse(partial.out)["status"], "budget_exhausted");
    EXPECT_EQ(run({"orbit", mid, "--limit", "5"}).code, cli::kExitLimit);
}

TEST_F(CliTest, ParseErrors) {
    const auto bad = write("bad.g6", "D~\n");
    EXPECT_EQ(run({"minimize", bad}).code, cli::kExitInvalid);
    EXPECT_EQ(run({"minimize", path("missing.g6")}).code, cli::kExitInvalid);
    EXPECT_EQ(run({"minimize", bad, "--method", "magic"}).code, cli::kExitInvalid);
    EXPECT_EQ(run({}).code, cli::kExitInvalid);
    EXPECT_EQ(run({"grgs", bad}).code, cli::kExitInvalid);
    EXPECT_EQ(run({"grgs", "--rgs", "2", "--p-grid", "0.5,x"}).code, cli::kExitInvalid);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, WeightsFile) {
    const auto g = write("p3.g6", write_graph6(Graph::path(3)) + "\n");
    WeightMatrix w(3);
    w.set(0, 2, -5);
    const auto wp = write("w.json", weights_to_json(w));
    const auto r = run({"minimize", g, "--method", "orbit", "--weights", wp});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["output_energy"], -5.0);
    EXPECT_EQ(run({"minimize", g, "--weights", write("w4.json", weights_to_json(WeightMatrix(4)))}).code,
              cli::kExitInvalid);
}

TEST_F(CliTest, CheckLcAndOrbit) {
    const auto k4 = write("k4.g6", write_graph6(Graph::complete(4)) + "\n");
    const auto s4 = write("s4.g6", write_graph6(Graph::star(4)) + "\n");
    const auto p4 = write("p4.g6", write_graph6(Graph::path(4)) + "\n");
    EXPECT_EQ(nlohmann::json::parse(run({"check-lc", k4, s4}).out)["equivalent"], true);
    const auto no = nlohmann::json::parse(run({"check-lc", k4, p4}).out);
    EXPECT_EQ(no["equivalent"], false);
    EXPECT_TRUE(no["witness"].is_null());

    const auto r = run({"orbit", k4, "--out", path("orbit.jsonl")});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["min_edges"], 3);
    std::ifstream lines(path("orbit.jsonl"));
    std::size_t count = 0;
    for (std::string line; std::getline(lines, line);) ++count;
    EXPECT_EQ(count, j["orbit_size"].get<std::size_t>());
}

TEST_F(CliTest, IlpExport) {
    const auto k3 = write("k3.g6", write_graph6(Graph::complete(3)) + "\n");
    const auto r = run({"ilp-export", k3});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("\\ edge-minimisation model", 0), 0u);
    ASSERT_EQ(run({"ilp-export", k3, "--out", path("m.lp")}).code, 0);
    EXPECT_EQ(read_text_file(path("m.lp")), r.out);
}

TEST_F(CliTest, BenchEmptyResumableDeterministic) {
    ASSERT_EQ(run({"bench", "--n", "6", "--params", "0.5", "--count", "0", "--out", path("empty.csv")}).code, 0);
    EXPECT_EQ(read_text_file(path("empty.csv")), std::string(cli::kBenchCsvHeader) + "\n");

    const std::vector<std::string> args{"bench", "--n", "6,7", "--params", "0.3,0.6", "--count", "2",
                                        "--methods", "sa,orbit,ilp", "--threads", "3"};
    auto a = args;
    a.insert(a.end(), {"--out", path("a.csv")});
    ASSERT_EQ(run(a).code, 0);
    // Partial file, then resume.
    auto b = args;
    b.insert(b.end(), {"--out", path("b.csv")});
    const auto full = read_text_file(path("a.csv"));
    std::istringstream in(full);
    std::string header;
    std::string first;
    std::getline(in, header);
    std::getline(in, first);
    write("b.csv", header + "\n" + first + "\n");
    const auto resumed = run(b);
    ASSERT_EQ(resumed.code, 0);
    EXPECT_NE(resumed.err.find("resuming"), std::string::npos);

    auto strip = [](const std::string& csv) {
        // Drop the runtime columns.
        std::istringstream s(csv);
        std::string out;
        for (std::string line; std::getline(s, line);) {
            std::vector<std::string> cells;
            std::stringstream ls(line);
            for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
            cells.erase(cells.begin() + 7, cells.begin() + 9);
            for (const auto& c : cells) out += c + ",";
            out += "\n";
        }
        return out;
    };
    EXPECT_EQ(strip(read_text_file(path("b.csv"))), strip(full));
    EXPECT_EQ(std::count(full.begin(), full.end(), '\n'), 9);
}

TEST_F(CliTest, BenchBoundedDegree) {
    const auto r = run({"bench", "--model", "bounded", "--n", "6", "--params", "5", "--count", "3", "--methods",
                        "sa,ilp", "--out", path("bd.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"bench", "--model", "bounded", "--n", "6", "--params", "2.5", "--count", "1", "--out",
                   path("bad.csv")})
                  .code,
              cli::kExitInvalid);
}

TEST_F(CliTest, GrgsComparison) {
    const auto r = run({"grgs", "--rgs", "2", "--p-grid", "0.25,0.5,0.75,1.0"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_GT(std::stod(line.substr(line.rfind(',') + 1)), 1.0);
    }
    EXPECT_EQ(rows, 4u);
    EXPECT_NE(r.err.find("verified yes"), std::string::npos);
    EXPECT_EQ(run({"grgs", "--rgs", "2", "--p-grid", "1.0"}).out, run({"grgs", "--rgs", "2", "--p-grid", "1.0"}).out);
}

TEST_F(CliTest, ByteIdenticalReruns) {
    const auto g = write("g.g6", write_graph6(erdos_renyi(9, 0.5, 11)) + "\n");
    for (const char* method : {"sa", "ilp", "sailp", "orbit"}) {
        const auto a = run({"minimize", g, "--method", method, "--seed", "5"});
        const auto b = run({"minimize", g, "--method", method, "--seed", "5"});
        ASSERT_EQ(a.code, 0);
        EXPECT_EQ(without_runtime(a.out), without_runtime(b.out)) << method;
    }
}
