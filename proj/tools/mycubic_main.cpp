// mycubic: evaluate the MY function, solve cubics, regenerate the bundled
// example tables, run the invariant suite, and emit plot grid data.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mycubic/closed_form.hpp"
#include "mycubic/fixed_point.hpp"
#include "mycubic/hypergeom.hpp"
#include "mycubic/oracle.hpp"
#include "mycubic/solver.hpp"
#include "mycubic/verify.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// value columns: 10 fractional digits, round-half-even via the libc
// correctly-rounded conversion
std::string fixed10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10f", v);
    return buf;
}

// error columns: scientific, 3 significant digits
std::string sci3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

void emit_json(const json& inputs, const json& results) {
    json doc;
    doc["inputs"] = inputs;
    doc["results"] = results;
    doc["meta"]["version"] = kVersion;
    std::cout << doc.dump(2) << "\n";
}

// Rows of strings -> aligned text columns (two spaces between columns).
std::string align(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += "\n";
    }
    return out;
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "csv") return Format::Csv;
    if (f == "json") return Format::Json;
    throw CLI::ValidationError("--format must be text, csv or json");
}

// ---------------------------------------------------------------- eval --

int cmd_eval(double x, const std::string& method, std::optional<int> iterations,
             std::optional<double> tol, Format fmt) {
    mycubic::EvalResult r;
    if (method == "closed") {
        r = mycubic::my_closed(x);
    } else if (method == "fixed") {
        if (iterations) {
            const mycubic::IterationTrace t = mycubic::iterate(x, *iterations);
            r.x = x;
            r.value = t.rows.back().value;
            r.method = mycubic::Method::FixedPoint;
            r.iterations = *iterations;
            r.error_bound =
                mycubic::kSeedErrorBound / std::pow(mycubic::kShrinkFactor, *iterations);
        } else {
            r = mycubic::my_fixed(x, tol.value_or(1e-12));
        }
    } else if (method == "hyper") {
        r = mycubic::my_hyper(x);
    } else if (method == "oracle") {
        const double t = tol.value_or(1e-13);
        r.x = x;
        r.value = mycubic::my_bisect(x, t);
        r.method = mycubic::Method::Oracle;
        r.iterations = 0;
        r.error_bound = t;
    } else {
        throw CLI::ValidationError("--method must be closed, fixed, hyper or oracle");
    }

    switch (fmt) {
        case Format::Text:
            std::cout << "MY(" << fixed10(r.x) << ") = " << fixed10(r.value)
                      << "  [method=" << mycubic::method_name(r.method)
                      << " iterations=" << r.iterations
                      << " error_bound=" << sci3(r.error_bound) << "]\n";
            break;
        case Format::Csv:
            std::cout << "x,value,method,iterations,error_bound\n"
                      << fixed10(r.x) << ',' << fixed10(r.value) << ','
                      << mycubic::method_name(r.method) << ',' << r.iterations << ','
                      << sci3(r.error_bound) << "\n";
            break;
        case Format::Json: {
            json inputs = {{"x", x}, {"method", method}};
            if (iterations) inputs["iterations"] = *iterations;
            if (tol) inputs["tol"] = *tol;
            emit_json(inputs, {{"x", r.x},
                               {"value", r.value},
                               {"method", mycubic::method_name(r.method)},
                               {"iterations", r.iterations},
                               {"error_bound", r.error_bound}});
            break;
        }
    }
    return 0;
}

// --------------------------------------------------------------- solve --

int cmd_solve(const std::vector<double>& depressed, const std::vector<double>& general,
              const std::string& method, std::optional<int> iterations, bool refine,
              Format fmt) {
    mycubic::DepressedCubic dep;
    double shift = 0.0;
    json inputs;
    if (!depressed.empty()) {
        dep.p = depressed[0];
        dep.q = depressed[1];
        inputs["p"] = dep.p;
        inputs["q"] = dep.q;
    } else {
        mycubic::GeneralCubic g{general[0], general[1], general[2], general[3]};
        dep = mycubic::depress(g);
        shift = g.b / (3.0 * g.a);
        inputs = {{"a", g.a}, {"b", g.b}, {"c", g.c}, {"d", g.d}};
    }
    inputs["method"] = method;
    if (iterations) inputs["iterations"] = *iterations;

    mycubic::RootSet rs;
    if (method == "viete") {
        const auto t = mycubic::viete_trig_roots(dep);  // throws outside case 4
        rs.kind = mycubic::RootKind::ThreeReal;
        rs.roots = {t[2], t[1], t[0]};
        rs.multiplicity = {1, 1, 1};
        rs.case_id = 4;
        rs.method_detail = "case 4 (p < 0, |xi| <= 1): trigonometric roots";
    } else if (iterations) {
        rs = mycubic::solve_depressed_iterative(dep, *iterations);
    } else {
        rs = mycubic::solve_depressed(dep);
    }

    std::optional<double> viete_delta;
    if (method == "both" && rs.case_id == 4 && !iterations) {
        const auto t = mycubic::viete_trig_roots(dep);
        const double d0 = std::fabs(rs.roots[0] - t[2]);
        const double d1 = std::fabs(rs.roots[1] - t[1]);
        const double d2 = std::fabs(rs.roots[2] - t[0]);
        viete_delta = std::max({d0, d1, d2});
    }

    if (refine) {
        // one Newton correction per root; not part of the MY construction
        for (double& r : rs.roots) {
            const double fval = r * r * r + dep.p * r + dep.q;
            const double fpr = 3.0 * r * r + dep.p;
            if (fpr != 0.0) r -= fval / fpr;
        }
    }

    for (double& r : rs.roots) r -= shift;

    std::vector<double> residuals;
    for (double r : rs.roots) {
        if (!general.empty()) {
            const double a = general[0], b = general[1], c2 = general[2], d2 = general[3];
            residuals.push_back(std::fabs(((a * r + b) * r + c2) * r + d2));
        } else {
            residuals.push_back(std::fabs(r * r * r + dep.p * r + dep.q));
        }
    }

    switch (fmt) {
        case Format::Text: {
            if (!depressed.empty())
                std::cout << "depressed cubic: p = " << fixed10(dep.p)
                          << ", q = " << fixed10(dep.q) << "\n";
            else
                std::cout << "general cubic depressed to: p = " << fixed10(dep.p)
                          << ", q = " << fixed10(dep.q) << "\n";
            std::cout << rs.method_detail << "\n";
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"root", "multiplicity", "residual"});
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                rows.push_back({fixed10(rs.roots[i]), std::to_string(rs.multiplicity[i]),
                                sci3(residuals[i])});
            std::cout << align(rows);
            if (viete_delta)
                std::cout << "viete cross-check: max |delta| = " << sci3(*viete_delta)
                          << "\n";
            break;
        }
        case Format::Csv:
            std::cout << "root,multiplicity,residual\n";
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                std::cout << fixed10(rs.roots[i]) << ',' << rs.multiplicity[i] << ','
                          << sci3(residuals[i]) << "\n";
            break;
        case Format::Json: {
            json roots = json::array();
            for (std::size_t i = 0; i < rs.roots.size(); ++i)
                roots.push_back({{"value", rs.roots[i]},
                                 {"multiplicity", rs.multiplicity[i]},
                                 {"residual", residuals[i]}});
            json results = {{"case", rs.case_id},
                            {"detail", rs.method_detail},
                            {"kind", rs.kind == mycubic::RootKind::OneReal ? "one-real"
                                                                           : "three-real"},
                            {"roots", roots}};
            if (viete_delta) results["viete_max_delta"] = *viete_delta;
            emit_json(inputs, results);
            break;
        }
    }
    return 0;
}

// --------------------------------------------------------------- table --

struct TableBlock {
    std::string label;        // value column label, e.g. "M_n(x)" or "alpha_n"
    std::string short_label;  // e.g. "value" or "alpha"
    double reference = 0.0;
    std::vector<mycubic::IterationRow> rows;
};

struct TableData {
    std::string name;
    std::string title;
    std::string reference_line;
    std::vector<TableBlock> blocks;
};

std::vector<mycubic::IterationRow> root_rows(const mycubic::DepressedCubic& c, int n_max,
                                             std::size_t which, double reference) {
    std::vector<mycubic::IterationRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const mycubic::RootSet rs = mycubic::solve_depressed_iterative(c, n);
        mycubic::IterationRow row;
        row.n = n;
        row.value = rs.roots.at(which);
        row.abs_err = std::fabs(row.value - reference);
        row.rel_err = std::fabs(row.value / reference - 1.0);
        rows.push_back(row);
    }
    return rows;
}

TableData make_table(const std::string& name) {
    TableData t;
    t.name = name;
    if (name == "my-ex1" || name == "my-ex2") {
        const double x = name == "my-ex1" ? 0.01 : 1000.0;
        const int n_max = name == "my-ex1" ? 5 : 2;
        const mycubic::IterationTrace trace = mycubic::iterate(x, n_max);
        t.title = "fixed-point approximation of MY(x) at x = " + fixed10(x);
        t.reference_line =
            "reference MY(x) = " + fixed10(trace.reference) + " (closed form)";
        t.blocks.push_back({"M_n(x)", "value", trace.reference, trace.rows});
        return t;
    }
    if (name == "cubic-ex1") {
        const mycubic::DepressedCubic c{1.0, 1.0};
        const double alpha = mycubic::solve_depressed(c).roots[0];
        t.title = "y^3 + p*y + q = 0 with p = 1, q = 1 (case 2)";
        t.reference_line = "reference root alpha = " + fixed10(alpha) + " (closed form)";
        t.blocks.push_back({"alpha_n", "alpha", alpha, root_rows(c, 3, 0, alpha)});
        return t;
    }
    if (name == "cubic-ex2") {
        const mycubic::DepressedCubic c{-3.0, 1.0};
        const mycubic::RootSet rs = mycubic::solve_depressed(c);
        const double gamma = rs.roots[0], beta = rs.roots[1], alpha = rs.roots[2];
        t.title = "y^3 + p*y + q = 0 with p = -3, q = 1 (case 4)";
        t.reference_line = "reference roots alpha = " + fixed10(alpha) + ", beta = " +
                           fixed10(beta) + ", gamma = " + fixed10(gamma) +
                           " (closed form)";
        t.blocks.push_back({"alpha_n", "alpha", alpha, root_rows(c, 5, 2, alpha)});
        t.blocks.push_back({"beta_n", "beta", beta, root_rows(c, 5, 1, beta)});
        t.blocks.push_back({"gamma_n", "gamma", gamma, root_rows(c, 5, 0, gamma)});
        return t;
    }
    throw CLI::ValidationError(
        "unknown table '" + name + "' (valid: my-ex1, my-ex2, cubic-ex1, cubic-ex2)");
}

int cmd_table(const std::string& name, Format fmt) {
    const TableData t = make_table(name);
    switch (fmt) {
        case Format::Text: {
            std::cout << "table " << t.name << ": " << t.title << "\n"
                      << t.reference_line << "\n";
            for (const TableBlock& b : t.blocks) {
                std::cout << "\n";
                std::vector<std::vector<std::string>> rows;
                const std::string& v = b.label;
                const std::string base = v.substr(0, v.size() - 2);  // strip "_n"
                rows.push_back({"n", v, "|" + v + "-" + base + "|",
                                "|" + v + "/" + base + "-1|"});
                if (name == "my-ex1" || name == "my-ex2")
                    rows[0] = {"n", "M_n(x)", "|M_n(x)-MY(x)|", "|M_n(x)/MY(x)-1|"};
                for (const auto& r : b.rows)
                    rows.push_back({std::to_string(r.n), fixed10(r.value), sci3(r.abs_err),
                                    sci3(r.rel_err)});
                std::cout << align(rows);
            }
            break;
        }
        case Format::Csv: {
            const bool multi = t.blocks.size() > 1;
            std::cout << (multi ? "root,n,value,abs_error,rel_error\n"
                                : "n,value,abs_error,rel_error\n");
            for (const TableBlock& b : t.blocks)
                for (const auto& r : b.rows) {
                    if (multi) std::cout << b.short_label << ',';
                    std::cout << r.n << ',' << fixed10(r.value) << ',' << sci3(r.abs_err)
                              << ',' << sci3(r.rel_err) << "\n";
                }
            break;
        }
        case Format::Json: {
            json blocks = json::array();
            for (const TableBlock& b : t.blocks) {
                json rows = json::array();
                for (const auto& r : b.rows)
                    rows.push_back({{"n", r.n},
                                    {"value", r.value},
                                    {"abs_error", r.abs_err},
                                    {"rel_error", r.rel_err}});
                blocks.push_back(
                    {{"label", b.short_label}, {"reference", b.reference}, {"rows", rows}});
            }
            emit_json({{"table", name}}, {{"title", t.title}, {"blocks", blocks}});
            break;
        }
    }
    return 0;
}

// -------------------------------------------------------------- verify --

int cmd_verify(long grid_points, double x_min, double x_max, std::uint64_t seed,
               Format fmt) {
    if (grid_points < 10)
        throw CLI::ValidationError("--grid-points must be at least 10");
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw CLI::ValidationError("requires 0 < x-min < x-max");
    mycubic::VerifyOptions opts;
    opts.grid_points = grid_points;
    opts.x_min = x_min;
    opts.x_max = x_max;
    opts.seed = seed;
    const std::vector<mycubic::CheckResult> checks = mycubic::run_verify(opts);
    long passed = 0;
    for (const auto& c : checks) passed += c.passed ? 1 : 0;

    switch (fmt) {
        case Format::Text:
            std::cout << "verify: grid-points=" << grid_points << " x-min=" << x_min
                      << " x-max=" << x_max << " seed=" << seed << "\n";
            for (const auto& c : checks) {
                std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << " ("
                          << c.samples << " samples)";
                if (!c.passed) std::cout << ": " << c.failure;
                std::cout << "\n";
            }
            std::cout << "verify: " << passed << "/" << checks.size()
                      << " checks passed\n";
            break;
        case Format::Csv:
            std::cout << "check,passed,samples,failure\n";
            for (const auto& c : checks)
                std::cout << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.samples << ','
                          << c.failure << "\n";
            break;
        case Format::Json: {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"name", c.name},
                               {"passed", c.passed},
                               {"samples", c.samples},
                               {"failure", c.failure}});
            emit_json({{"grid_points", grid_points},
                       {"x_min", x_min},
                       {"x_max", x_max},
                       {"seed", seed}},
                      {{"checks", arr},
                       {"passed", passed},
                       {"total", checks.size()}});
            break;
        }
    }
    return passed == static_cast<long>(checks.size()) ? 0 : 1;
}

// ----------------------------------------------------------- plot-data --

int cmd_plot_data(const std::string& curve, double x_min, double x_max, long points,
                  Format fmt) {
    if (points < 2) throw CLI::ValidationError("--points must be at least 2");
    if (!(x_max > x_min)) throw CLI::ValidationError("requires x-min < x-max");
    const bool needs_nonneg = curve != "f";
    if (needs_nonneg && x_min < 0.0)
        throw CLI::ValidationError("curve '" + curve + "' requires x-min >= 0");

    std::vector<std::string> header;
    if (curve == "my")
        header = {"x", "my"};
    else if (curve == "f")
        header = {"x", "f"};
    else if (curve == "bounds")
        header = {"x", "lower", "my", "upper"};
    else if (curve == "m0-error")
        header = {"x", "m0_abs_error"};
    else
        throw CLI::ValidationError("--curve must be my, f, bounds or m0-error");

    std::vector<std::vector<double>> data;
    for (long i = 0; i < points; ++i) {
        const double x =
            x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(points - 1);
        if (curve == "my")
            data.push_back({x, mycubic::my(x)});
        else if (curve == "f")
            data.push_back({x, mycubic::f_canonical(x)});
        else if (curve == "bounds") {
            const auto [lo, hi] = mycubic::bounds(x);
            data.push_back({x, lo, mycubic::my(x), hi});
        } else {
            data.push_back({x, std::fabs(mycubic::my_seed(x) - mycubic::my(x))});
        }
    }

    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& row : data) {
            json r;
            for (std::size_t i = 0; i < header.size(); ++i) r[header[i]] = row[i];
            rows.push_back(r);
        }
        emit_json({{"curve", curve}, {"x_min", x_min}, {"x_max", x_max}, {"points", points}},
                  {{"rows", rows}});
        return 0;
    }
    // text and csv coincide for grid emission
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    const bool error_col = curve == "m0-error";
    for (const auto& row : data) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << ',';
            std::cout << (i > 0 && error_col ? sci3(row[i]) : fixed10(row[i]));
        }
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MY function numerics and cubic equation solving"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate MY(x)");
    double eval_x = 0.0;
    std::string eval_method = "closed";
    std::optional<int> eval_iter;
    std::optional<double> eval_tol;
    eval->add_option("x", eval_x, "evaluation point (>= 0)")->required();
    eval->add_option("--method", eval_method, "closed|fixed|hyper|oracle");
    eval->add_option("--iterations", eval_iter, "fixed-point iteration count");
    eval->add_option("--tol", eval_tol, "tolerance for fixed/oracle methods");
    eval->add_option("--format", format, "text|csv|json");

    // solve
    auto* solve = app.add_subcommand("solve", "solve a cubic equation");
    std::vector<double> dep_coeff, gen_coeff;
    std::string solve_method = "my";
    std::optional<int> solve_iter;
    bool refine = false;
    auto* dep_opt =
        solve->add_option("--depressed", dep_coeff, "coefficients p q")->expected(2);
    auto* gen_opt =
        solve->add_option("--general", gen_coeff, "coefficients a b c d")->expected(4);
    dep_opt->excludes(gen_opt);
    solve->add_option("--method", solve_method, "my|viete|both");
    solve->add_option("--iterations", solve_iter, "use the n-step fixed point for MY");
    solve->add_flag("--refine", refine, "apply one Newton correction per root");
    solve->add_option("--format", format, "text|csv|json");

    // table
    auto* table = app.add_subcommand("table", "regenerate a bundled example table");
    std::string table_name;
    table->add_option("name", table_name, "my-ex1|my-ex2|cubic-ex1|cubic-ex2")->required();
    table->add_option("--format", format, "text|csv|json");

    // verify
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    long grid_points = 1000;
    double vx_min = 1e-6, vx_max = 1e6;
    std::uint64_t seed = 42;
    verify->add_option("--grid-points", grid_points, "grid density (>= 10)");
    verify->add_option("--x-min", vx_min, "lower end of the sampling range");
    verify->add_option("--x-max", vx_max, "upper end of the sampling range");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "text|csv|json");

    // plot-data
    auto* plot = app.add_subcommand("plot-data", "emit grid data for plots");
    std::string curve = "my";
    double px_min = 0.0, px_max = 1.0;
    long points = 100;
    plot->add_option("--curve", curve, "my|f|bounds|m0-error");
    plot->add_option("--x-min", px_min, "grid start");
    plot->add_option("--x-max", px_max, "grid end");
    plot->add_option("--points", points, "number of rows (>= 2)");
    plot->add_option("--format", format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (eval->parsed()) return cmd_eval(eval_x, eval_method, eval_iter, eval_tol, fmt);
        if (solve->parsed()) {
            if (dep_coeff.empty() && gen_coeff.empty())
                throw CLI::ValidationError("solve requires --depressed or --general");
            return cmd_solve(dep_coeff, gen_coeff, solve_method, solve_iter, refine, fmt);
        }
        if (table->parsed()) return cmd_table(table_name, fmt);
        if (verify->parsed()) return cmd_verify(grid_points, vx_min, vx_max, seed, fmt);
        if (plot->parsed())
            return cmd_plot_data(curve, px_min, px_max, points,
                                 fmt == Format::Text ? Format::Csv : fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
