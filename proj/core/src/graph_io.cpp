#include "edgemin/graph_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace edgemin {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw ParseError("graph6: byte out of range");
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("graph6: empty input");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw ParseError("graph6: truncated size field");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
        if (n < 63) throw ParseError("graph6: non-canonical size field");
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("graph6: truncated size field");
        for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(text[k]));
        if (n < 258048) throw ParseError("graph6: non-canonical size field");
        pos = 8;
    }

    const std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos != nbytes)
        throw ParseError("graph6: expected " + std::to_string(nbytes) + " data bytes for n=" + std::to_string(n) +
                         ", found " + std::to_string(text.size() - pos));

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < nbytes * 6; ++k)
        if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) throw ParseError("graph6: non-zero padding bits");
    return g;
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.size();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < 258048) {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out += "~~";
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.size();
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph graph_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
        throw ParseError("graph JSON: missing non-negative integer field \"n\"");
    const auto n = j["n"].get<std::size_t>();
    Graph g(n);
    if (!j.contains("edges")) return g;
    if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError("graph JSON: each edge must be a pair of vertex indices");
        const auto a = e[0].get<std::size_t>();
        const auto b = e[1].get<std::size_t>();
        if (a >= n || b >= n || a == b) throw ParseError("graph JSON: invalid edge");
        g.add_edge(a, b);
    }
    return g;
}

std::string weights_to_json(const WeightMatrix& w) {
    nlohmann::json j;
    j["n"] = w.size();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t k = 0; k < w.size(); ++k) row.push_back(w.at(i, k));
        rows.push_back(std::move(row));
    }
    j["weights"] = std::move(rows);
    return j.dump();
}

WeightMatrix weights_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("weights JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() || !j.contains("weights"))
        throw ParseError("weights JSON: expected {\"n\", \"weights\"}");
    const auto n = j["n"].get<std::size_t>();
    const auto& rows = j["weights"];
    if (!rows.is_array() || rows.size() != n) throw ParseError("weights JSON: need n rows");
    WeightMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("weights JSON: need n columns");
        for (std::size_t k = 0; k < n; ++k) {
            if (!rows[i][k].is_number()) throw ParseError("weights JSON: non-numeric weight");
            const double v = rows[i][k].get<double>();
            if (i == k) {
                if (v != 0.0) throw ParseError("weights JSON: diagonal must be zero");
                continue;
            }
            const double mirrored = rows[k][i].is_number() ? rows[k][i].get<double>() : NAN;
            if (v != mirrored) throw ParseError("weights JSON: matrix must be symmetric");
            if (i < k) w.set(i, k, v);
        }
    }
    return w;
}

Graph parse_graph_auto(std::string_view text) {
    const auto t = trim(text);
    if (!t.empty() && t.front() == '{') return graph_from_json(t);
    return parse_graph6(t);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace edgemin
