#include "slet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "slet/closed_form.hpp"
#include "slet/diagnostics.hpp"
#include "slet/engine.hpp"
#include "slet/errors.hpp"
#include "slet/oracle.hpp"
#include "slet/record.hpp"
#include "slet/version.hpp"

namespace slet::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line;
}

void write_table(std::ostream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(head.size());
    for (std::size_t c = 0; c < head.size(); ++c) {
        width[c] = head[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c) s += "  ";
            s += r[c] + std::string(width[c] - r[c].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
}

template <class R, class F>
std::vector<R> parallel_map(std::size_t count, F&& fn) {
    std::vector<R> out(count);
    const std::size_t lanes = std::max(1U, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < count; start += lanes) {
        std::vector<std::future<R>> batch;
        for (std::size_t i = start; i < std::min(count, start + lanes); ++i)
            batch.push_back(std::async(std::launch::async, fn, i));
        for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
    }
    return out;
}

struct Options {
    int dim = 3;
    std::string potential;
    std::vector<std::string> params;
    int l = 0;
    int nr = 0;
    std::string terms;  // empty: config file or default (3)
    std::string format;
    std::string out_path;
    std::string config_path;
    bool no_header = false;

    // spectrum
    std::string l_range = "0..0";
    std::string nr_range = "0..0";
    // sweep
    int m = 0;
    std::string gamma;
    // validate
    std::optional<double> oracle_R;
    std::optional<int> oracle_N;
    std::optional<double> oracle_tol;
};

struct Settings {
    SolverSettings solver;
    oracle::OracleConfig oracle;
    bool oracle_R_set = false;
};

ParamMap parse_params(const std::vector<std::string>& items) {
    static const std::regex name_re("[A-Za-z_][A-Za-z0-9_]*");
    ParamMap out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects NAME=VALUE, got '" + item + "'");
        const std::string name = item.substr(0, eq), value = item.substr(eq + 1);
        if (!std::regex_match(name, name_re)) throw UsageError("invalid parameter name '" + name + "'");
        if (name == "r") throw UsageError("'r' is the radial variable and cannot be a parameter");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size() || value.empty() || !std::isfinite(v))
            throw UsageError("parameter '" + name + "' has non-numeric value '" + value + "'");
        out[name] = v;
    }
    return out;
}

TermOrder parse_terms(const std::string& s) {
    if (s == "0") return TermOrder::E0_only;
    if (s == "2") return TermOrder::through_E2;
    if (s == "3") return TermOrder::through_E3;
    throw UsageError("--terms must be 0, 2 or 3");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_number(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("config key '" + key + "' has non-numeric value '" + v + "'");
    return d;
}

void load_config(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "bracket_lo") s.solver.bracket_lo = to_number(key, value);
        else if (key == "bracket_hi") s.solver.bracket_hi = to_number(key, value);
        else if (key == "scan_points") s.solver.scan_points = static_cast<int>(to_number(key, value));
        else if (key == "root_tol") s.solver.root_tol = to_number(key, value);
        else if (key == "terms") s.solver.term_order = parse_terms(value);
        else if (key == "oracle_R") {
            s.oracle.box_radius = to_number(key, value);
            s.oracle_R_set = true;
        } else if (key == "oracle_N") s.oracle.grid_points = static_cast<int>(to_number(key, value));
        else if (key == "oracle_tol") s.oracle.eig_tol = to_number(key, value);
        else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

std::pair<int, int> parse_range(const std::string& flag, const std::string& text) {
    static const std::regex re(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError(flag + " expects A..B with non-negative integers");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("--gamma expects LO:HI:STEP");
    const double lo = to_number("--gamma", trim(parts[0])), hi = to_number("--gamma", trim(parts[1])),
                 step = to_number("--gamma", trim(parts[2]));
    if (!(step > 0.0)) throw UsageError("--gamma STEP must be positive");
    if (!(lo >= 0.0) || hi < lo) throw UsageError("--gamma requires 0 <= LO <= HI");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) g[i] = lo + static_cast<double>(i) * step;
    return g;
}

Dim to_dim(int d) {
    if (d == 3) return Dim::D3;
    if (d == 2) return Dim::D2;
    throw UsageError("--dim must be 2 or 3");
}

Problem make_problem(const Options& o, const Settings& s, const ParamMap& params, int l, int nr) {
    Problem p;
    p.dim = to_dim(o.dim);
    p.l = l;
    p.n_radial = nr;
    p.potential = Potential::from_text(o.potential, params);
    p.solver = s.solver;
    p.validate();
    return p;
}

ProblemEcho echo(const Problem& p, const std::string& potential_text) {
    return {std::string(dim_name(p.dim)), p.l, p.n_radial, potential_text, p.potential.params(), p.solver};
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "slet";
    for (const auto& a : args) s += " " + a;
    return s;
}

class Output {
public:
    Output(const Options& o, std::ostream& out) : no_header_(o.no_header) {
        if (!o.out_path.empty()) {
            file_.open(o.out_path);
            if (!file_) throw UsageError("cannot open output file '" + o.out_path + "'");
        }
        os_ = o.out_path.empty() ? &out : &file_;
    }
    std::ostream& os() { return *os_; }
    void comment_header(const std::string& timestamp) {
        if (!no_header_) *os_ << "# slet " << kVersion << ' ' << timestamp << '\n';
    }
    bool with_header() const { return !no_header_; }

private:
    std::ofstream file_;
    std::ostream* os_;
    bool no_header_;
};

std::vector<std::string> breakdown_columns() {
    return {"l", "nr", "r0", "w", "beta", "lbar", "E0", "E2term", "E3term", "E_total"};
}

std::vector<std::string> breakdown_row(int l, int nr, const Breakdown& b) {
    return {std::to_string(l), std::to_string(nr), fmt(b.r0),   fmt(b.w),
            fmt(b.beta),       fmt(b.lbar),        fmt(b.E0),   fmt(b.E2_over_lbar2),
            fmt(b.E3_over_lbar3), fmt(b.E_total)};
}

void print_breakdown_table(std::ostream& os, const RunRecord& rec) {
    const Breakdown& b = rec.result;
    std::vector<std::vector<std::string>> rows = {
        {"potential", rec.problem.potential},
        {"dim", rec.problem.dim},
        {"l", std::to_string(rec.problem.l)},
        {"n_radial", std::to_string(rec.problem.n_radial)},
        {"r0", fmt(b.r0)},
        {"w", fmt(b.w)},
        {"beta", fmt(b.beta)},
        {"lbar", fmt(b.lbar)},
        {"Q", fmt(b.Q)},
        {"E0", fmt(b.E0)},
        {"E1", fmt(b.E1)},
        {"E2/lbar^2", fmt(b.E2_over_lbar2)},
        {"E3/lbar^3", fmt(b.E3_over_lbar3)},
        {"E_total", fmt(b.E_total)},
        {"alpha1", fmt(b.alpha1)},
        {"alpha2", fmt(b.alpha2)},
        {"residual", fmt(b.residual)},
    };
    for (const auto& [k, v] : rec.problem.params) rows.insert(rows.begin() + 1, {"param " + k, fmt(v)});
    for (std::size_t j = 0; j < 4; ++j) rows.push_back({"eps" + std::to_string(j + 1), fmt(b.coeffs.eps[j])});
    for (std::size_t i = 0; i < 6; ++i) rows.push_back({"delta" + std::to_string(i + 1), fmt(b.coeffs.dlt[i])});
    for (const auto& c : b.candidates)
        rows.push_back({"candidate", "r0=" + fmt(c.r0) + " E0=" + fmt(c.E0) + (c.is_minimum ? " minimum" : " rejected")});
    if (rec.oracle) {
        const auto& o = *rec.oracle;
        rows.push_back({"oracle E", fmt(o.energy)});
        rows.push_back({"oracle E (2N)", fmt(o.energy_refined)});
        rows.push_back({"oracle E (extrap.)", fmt(o.energy_extrapolated)});
        rows.push_back({"oracle box shift", fmt(o.box_shift)});
        rows.push_back({"oracle converged", o.converged ? "true" : "false"});
    }
    write_table(os, {"quantity", "value"}, rows);
}

int cmd_solve(const Options& o, Settings& s, const std::vector<std::string>& args, std::ostream& out) {
    const ParamMap params = parse_params(o.params);
    const Problem p = make_problem(o, s, params, o.l, o.nr);
    RunRecord rec;
    rec.command = join_args(args);
    rec.problem = echo(p, o.potential);
    rec.result = solve(p);
    rec.timestamp = utc_timestamp();
    rec.version = kVersion;

    Output sink(o, out);
    const std::string format = o.format.empty() ? "table" : o.format;
    if (format == "json") {
        sink.os() << to_json(rec, sink.with_header()).dump(2) << '\n';
    } else if (format == "csv") {
        sink.comment_header(rec.timestamp);
        sink.os() << join_csv(breakdown_columns()) << '\n' << join_csv(breakdown_row(p.l, p.n_radial, rec.result)) << '\n';
    } else {
        sink.comment_header(rec.timestamp);
        print_breakdown_table(sink.os(), rec);
    }
    return kOk;
}

int cmd_spectrum(const Options& o, Settings& s, const std::vector<std::string>& args, std::ostream& out) {
    const ParamMap params = parse_params(o.params);
    const auto [l_lo, l_hi] = parse_range("--l-range", o.l_range);
    const auto [n_lo, n_hi] = parse_range("--nr-range", o.nr_range);
    // Construct once up front so flag-level mistakes exit with a usage error.
    (void)Potential::from_text(o.potential, params);
    to_dim(o.dim);

    std::vector<std::pair<int, int>> states;
    for (int l = l_lo; l <= l_hi; ++l)
        for (int n = n_lo; n <= n_hi; ++n) states.emplace_back(l, n);

    struct Row {
        std::optional<Breakdown> b;
        std::string error;
    };
    auto rows = parallel_map<Row>(states.size(), [&](std::size_t i) {
        Row r;
        try {
            r.b = solve(make_problem(o, s, params, states[i].first, states[i].second));
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    });

    Output sink(o, out);
    const std::string ts = utc_timestamp();
    const std::string format = o.format.empty() ? "csv" : o.format;
    auto columns = breakdown_columns();
    columns.push_back("error");
    auto cells = [&](std::size_t i) {
        if (rows[i].b) {
            auto c = breakdown_row(states[i].first, states[i].second, *rows[i].b);
            c.push_back("");
            return c;
        }
        std::vector<std::string> c(columns.size());
        c[0] = std::to_string(states[i].first);
        c[1] = std::to_string(states[i].second);
        c.back() = rows[i].error;
        return c;
    };
    if (format == "json") {
        json j{{"command", join_args(args)}, {"potential", o.potential}, {"params", params}, {"dim", std::to_string(o.dim)}};
        json list = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json row{{"l", states[i].first}, {"nr", states[i].second}};
            if (rows[i].b)
                row["result"] = *rows[i].b;
            else
                row["error"] = rows[i].error;
            list.push_back(row);
        }
        j["rows"] = list;
        if (sink.with_header()) j["header"] = json{{"tool", "slet"}, {"version", kVersion}, {"timestamp", ts}};
        sink.os() << j.dump(2) << '\n';
    } else if (format == "csv") {
        sink.comment_header(ts);
        sink.os() << join_csv(columns) << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) sink.os() << join_csv(cells(i)) << '\n';
    } else {
        sink.comment_header(ts);
        std::vector<std::vector<std::string>> table;
        for (std::size_t i = 0; i < rows.size(); ++i) table.push_back(cells(i));
        write_table(sink.os(), columns, table);
    }
    return kOk;
}

int cmd_sweep(const Options& o, Settings& s, const std::vector<std::string>& args, std::ostream& out) {
    if (o.gamma.empty()) throw UsageError("--gamma LO:HI:STEP is required");
    const std::vector<double> grid = parse_grid(o.gamma);
    ParamMap base = parse_params(o.params);
    base["m"] = o.m;
    const int l = std::abs(o.m);
    auto params_at = [&](double g) {
        ParamMap p = base;
        p["gamma"] = g;
        if (!p.empty() && family_from_name(o.potential) == std::nullopt) {
            // Expressions only receive the parameters they reference.
            const auto used = Expr::parse(o.potential).parameters();
            for (auto it = p.begin(); it != p.end();) it = used.count(it->first) ? std::next(it) : p.erase(it);
        }
        return p;
    };
    (void)make_problem(o, s, params_at(grid.front()), l, o.nr);

    struct Row {
        std::optional<Breakdown> b;
        std::string error;
    };
    auto rows = parallel_map<Row>(grid.size(), [&](std::size_t i) {
        Row r;
        try {
            r.b = solve(make_problem(o, s, params_at(grid[i]), l, o.nr));
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    });

    Output sink(o, out);
    const std::string ts = utc_timestamp();
    const std::string format = o.format.empty() ? "csv" : o.format;
    const std::vector<std::string> columns = {"gamma", "E_total", "E0", "E2term", "E3term", "error"};
    auto cells = [&](std::size_t i) -> std::vector<std::string> {
        if (rows[i].b) {
            const Breakdown& b = *rows[i].b;
            return {fmt(grid[i]), fmt(b.E_total), fmt(b.E0), fmt(b.E2_over_lbar2), fmt(b.E3_over_lbar3), ""};
        }
        return {fmt(grid[i]), "", "", "", "", rows[i].error};
    };
    if (format == "json") {
        json j{{"command", join_args(args)}, {"potential", o.potential}, {"m", o.m}, {"nr", o.nr}};
        json list = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json row{{"gamma", grid[i]}};
            if (rows[i].b)
                row["result"] = *rows[i].b;
            else
                row["error"] = rows[i].error;
            list.push_back(row);
        }
        j["rows"] = list;
        if (sink.with_header()) j["header"] = json{{"tool", "slet"}, {"version", kVersion}, {"timestamp", ts}};
        sink.os() << j.dump(2) << '\n';
    } else if (format == "csv") {
        sink.comment_header(ts);
        sink.os() << join_csv(columns) << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) sink.os() << join_csv(cells(i)) << '\n';
    } else {
        sink.comment_header(ts);
        std::vector<std::vector<std::string>> table;
        for (std::size_t i = 0; i < rows.size(); ++i) table.push_back(cells(i));
        write_table(sink.os(), columns, table);
    }
    return kOk;
}

int cmd_validate(const Options& o, Settings& s, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
    const ParamMap params = parse_params(o.params);
    const Problem p = make_problem(o, s, params, o.l, o.nr);
    oracle::OracleConfig cfg = s.oracle;
    if (o.oracle_R) cfg.box_radius = *o.oracle_R;
    else if (!s.oracle_R_set && p.potential.is_builtin() && p.potential.family() == Family::donor)
        cfg.box_radius = oracle::donor_box_radius(p.potential.param("gamma"));
    if (o.oracle_N) cfg.grid_points = *o.oracle_N;
    if (o.oracle_tol) cfg.eig_tol = *o.oracle_tol;
    cfg.validate();

    std::optional<Breakdown> b;
    std::optional<oracle::OracleResult> orc;
    std::string failure;
    try {
        b = solve(p);
    } catch (const Error& e) {
        failure = std::string("slet: ") + e.what();
    }
    try {
        orc = oracle::eigenvalue(p.dim, p.l, p.n_radial, p.potential, cfg);
    } catch (const Error& e) {
        failure += (failure.empty() ? "" : "; ") + std::string("oracle: ") + e.what();
    }

    Output sink(o, out);
    const std::string ts = utc_timestamp();
    const std::string format = o.format.empty() ? "table" : o.format;
    std::vector<std::pair<std::string, std::string>> kv = {
        {"potential", o.potential},
        {"dim", std::string(dim_name(p.dim))},
        {"l", std::to_string(p.l)},
        {"n_radial", std::to_string(p.n_radial)},
        {"oracle_R", fmt(cfg.box_radius)},
        {"oracle_N", std::to_string(cfg.grid_points)},
        {"oracle_tol", fmt(cfg.eig_tol)},
    };
    if (b) kv.push_back({"slet_E", fmt(b->E_total)});
    if (orc) {
        kv.push_back({"oracle_E", fmt(orc->energy)});
        kv.push_back({"oracle_E_refined", fmt(orc->energy_refined)});
        kv.push_back({"oracle_E_extrapolated", fmt(orc->energy_extrapolated)});
        kv.push_back({"oracle_box_shift", fmt(orc->box_shift)});
        kv.push_back({"converged", orc->converged ? "true" : "false"});
    }
    if (b && orc) {
        const double diff = b->E_total - orc->energy_extrapolated;
        kv.push_back({"abs_diff", fmt(std::fabs(diff))});
        kv.push_back({"rel_diff", fmt(std::fabs(diff) / std::max(std::fabs(orc->energy_extrapolated), 1e-300))});
    }
    if (!failure.empty()) kv.push_back({"error", failure});

    if (format == "json") {
        RunRecord rec;
        rec.command = join_args(args);
        rec.problem = echo(p, o.potential);
        if (b) rec.result = *b;
        rec.oracle = orc;
        rec.timestamp = ts;
        rec.version = kVersion;
        json j = to_json(rec, sink.with_header());
        json report = json::object();
        for (const auto& [k, v] : kv) report[k] = v;
        j["report"] = report;
        sink.os() << j.dump(2) << '\n';
    } else if (format == "csv") {
        sink.comment_header(ts);
        std::vector<std::string> head, row;
        for (const auto& [k, v] : kv) {
            head.push_back(k);
            row.push_back(v);
        }
        sink.os() << join_csv(head) << '\n' << join_csv(row) << '\n';
    } else {
        sink.comment_header(ts);
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : kv) rows.push_back({k, v});
        write_table(sink.os(), {"quantity", "value"}, rows);
    }
    if (!failure.empty()) {
        err << failure << '\n';
        return kComputation;
    }
    return kOk;
}

int cmd_discrepancies(const Options& o, Settings& s, std::ostream& out) {
    const auto report = discrepancy_report(s.oracle);
    Output sink(o, out);
    const std::string ts = utc_timestamp();
    const std::string format = o.format.empty() ? "table" : o.format;
    if (format == "json") {
        json j{{"discrepancies", report}};
        if (sink.with_header()) j["header"] = json{{"tool", "slet"}, {"version", kVersion}, {"timestamp", ts}};
        sink.os() << j.dump(2) << '\n';
        return kOk;
    }
    sink.comment_header(ts);
    const std::vector<std::string> head = {"id", "case", "published", "computed", "reference", "resolution"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : report)
        rows.push_back({d.id, d.case_label, fmt(d.published), fmt(d.computed), d.reference ? fmt(*d.reference) : "",
                        d.resolution});
    if (format == "csv") {
        sink.os() << join_csv(head) << '\n';
        for (const auto& r : rows) sink.os() << join_csv(r) << '\n';
    } else {
        write_table(sink.os(), head, rows);
    }
    return kOk;
}

void add_problem_flags(CLI::App* sub, Options& o, bool quantum_numbers = true) {
    sub->add_option("--dim", o.dim, "spatial dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
    sub->add_option("--potential", o.potential, "builtin name (coulomb, harmonic, power, log, donor) or expression in r")
        ->required();
    sub->add_option("--param", o.params, "parameter binding NAME=VALUE (repeatable)");
    if (quantum_numbers) {
        sub->add_option("--l", o.l, "angular momentum l (|m| in 2D)");
        sub->add_option("--nr", o.nr, "radial quantum number");
    }
    sub->add_option("--terms", o.terms, "series terms: 0 (E0), 2 (through E2), 3 (through E3)")
        ->check(CLI::IsMember({"0", "2", "3"}));
}

void add_output_flags(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", o.out_path, "write output to PATH instead of standard output");
    sub->add_flag("--no-header", o.no_header, "omit the timestamp header");
    sub->add_option("--config", o.config_path, "key=value file with solver and oracle defaults");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shifted-l expansion eigenvalues of radial Schroedinger equations", "slet"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;

    auto* solve_cmd = app.add_subcommand("solve", "energy of one state with the full series breakdown");
    add_problem_flags(solve_cmd, o);
    add_output_flags(solve_cmd, o);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "energies over a grid of (l, n_r)");
    add_problem_flags(spectrum_cmd, o, false);
    spectrum_cmd->add_option("--l-range", o.l_range, "A..B inclusive");
    spectrum_cmd->add_option("--nr-range", o.nr_range, "A..B inclusive");
    add_output_flags(spectrum_cmd, o);

    auto* sweep_cmd = app.add_subcommand("sweep", "donor energies over a magnetic-field grid");
    add_problem_flags(sweep_cmd, o, false);
    sweep_cmd->add_option("--m", o.m, "magnetic quantum number")->required();
    sweep_cmd->add_option("--nr", o.nr, "radial quantum number");
    sweep_cmd->add_option("--gamma", o.gamma, "LO:HI:STEP inclusive grid")->required();
    add_output_flags(sweep_cmd, o);

    auto* validate_cmd = app.add_subcommand("validate", "compare one state against the finite-difference oracle");
    add_problem_flags(validate_cmd, o);
    validate_cmd->add_option("--oracle-R", o.oracle_R, "oracle box radius");
    validate_cmd->add_option("--oracle-N", o.oracle_N, "oracle grid points");
    validate_cmd->add_option("--oracle-tol", o.oracle_tol, "oracle convergence tolerance");
    add_output_flags(validate_cmd, o);

    auto* disc_cmd = app.add_subcommand("discrepancies", "published closed forms that disagree with the general series");
    add_output_flags(disc_cmd, o);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            if (dynamic_cast<const CLI::CallForVersion*>(&e)) out << kVersion << '\n';
            else out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    Settings s;
    try {
        if (!o.config_path.empty()) load_config(o.config_path, s);
        if (!o.terms.empty()) s.solver.term_order = parse_terms(o.terms);
        if (o.l < 0) throw UsageError("l must be a non-negative integer");
        if (o.nr < 0) throw UsageError("nr must be a non-negative integer");
        s.solver.validate();

        if (app.got_subcommand(solve_cmd)) return cmd_solve(o, s, args, out);
        if (app.got_subcommand(spectrum_cmd)) return cmd_spectrum(o, s, args, out);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(o, s, args, out);
        if (app.got_subcommand(validate_cmd)) return cmd_validate(o, s, args, out, err);
        if (app.got_subcommand(disc_cmd)) return cmd_discrepancies(o, s, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kUsage;
}

}  // namespace slet::cli
