#include "edgemin/lp_format.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "edgemin/graph_io.hpp"

namespace edgemin {

namespace {

std::string format_number(double v) {
    if (std::floor(v) == v && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

// LP lines are conventionally kept short; wrap long expressions.
void append_wrapped(std::string& out, std::string& line, const std::string& piece) {
    if (line.size() + piece.size() > 240) {
        out += line;
        out += '\n';
        line = "  ";
    }
    line += piece;
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

}  // namespace

std::string export_lp(const IlpModel& model) {
    const auto& vars = model.variables();
    std::string out = "\\ edge-minimisation model\nMinimize\n";
    std::string line = " obj:";
    if (model.objective().empty()) {
        if (!vars.empty()) line += " 0 " + vars[0].name;
    } else {
        bool first = true;
        for (const auto& t : model.objective()) {
            std::string piece = " ";
            if (t.coef < 0)
                piece += "- ";
            else if (!first)
                piece += "+ ";
            const double a = std::fabs(t.coef);
            if (a != 1.0) piece += format_number(a) + " ";
            piece += vars[t.var].name;
            append_wrapped(out, line, piece);
            first = false;
        }
    }
    out += line + "\nSubject To\n";

    for (const auto& c : model.constraints()) {
        line = " " + c.name + ":";
        bool first = true;
        for (const auto& t : c.terms) {
            std::string piece = " ";
            if (t.coef < 0)
                piece += "- ";
            else if (!first)
                piece += "+ ";
            const auto a = t.coef < 0 ? -t.coef : t.coef;
            if (a != 1) piece += std::to_string(a) + " ";
            piece += vars[t.var].name;
            append_wrapped(out, line, piece);
            first = false;
        }
        if (c.terms.empty()) line += " 0 " + vars[0].name;
        const char* rel = c.relation == Relation::less_equal ? " <= " : c.relation == Relation::equal ? " = " : " >= ";
        out += line + rel + std::to_string(c.rhs) + "\n";
    }

    out += "Bounds\n";
    for (const auto& v : vars)
        if (v.kind == VarKind::integer)
            out += " " + std::to_string(v.lower) + " <= " + v.name + " <= " + std::to_string(v.upper) + "\n";

    out += "Binaries\n";
    line.clear();
    for (const auto& v : vars)
        if (v.kind == VarKind::binary) append_wrapped(out, line, " " + v.name);
    if (!line.empty()) out += line + "\n";

    out += "Generals\n";
    line.clear();
    for (const auto& v : vars)
        if (v.kind == VarKind::integer) append_wrapped(out, line, " " + v.name);
    if (!line.empty()) out += line + "\n";
    out += "End\n";
    return out;
}

IlpSolution import_solution(const IlpModel& model, std::string_view text) {
    IlpSolution sol;
    sol.assignment.assign(model.variable_count(), 0);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string name;
        std::string value;
        if (!(ls >> name) || name[0] == '#') continue;
        if (!(ls >> value)) throw ParseError("solution line " + std::to_string(lineno) + ": missing value");
        const auto id = model.find(name);
        if (!id) throw ParseError("solution line " + std::to_string(lineno) + ": unknown variable " + name);
        double v = 0.0;
        try {
            v = std::stod(value);
        } catch (const std::exception&) {
            throw ParseError("solution line " + std::to_string(lineno) + ": bad value " + value);
        }
        const double r = std::round(v);
        if (std::fabs(v - r) > 1e-6) throw ParseError("solution line " + std::to_string(lineno) + ": non-integral value");
        sol.assignment[*id] = static_cast<std::int64_t>(r);
    }
    sol.objective_value = model.objective_value(sol.assignment);
    sol.status = model.is_feasible(sol.assignment) ? SolveStatus::optimal : SolveStatus::infeasible;
    return sol;
}

std::optional<IlpSolution> solve_external(const IlpModel& model, const std::string& solver,
                                          const std::string& work_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(work_dir);
    const fs::path lp = fs::path(work_dir) / "model.lp";
    const fs::path sol = fs::path(work_dir) / "model.sol";
    {
        std::ofstream f(lp);
        f << export_lp(model);
    }
    fs::remove(sol);
    const std::string cmd = shell_quote(solver) + " " + shell_quote(lp.string()) + " " + shell_quote(sol.string());
    if (std::system(cmd.c_str()) != 0 || !fs::exists(sol)) return std::nullopt;
    return import_solution(model, read_text_file(sol.string()));
}

}  // namespace edgemin
