#include "magsteklov/cli.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "magsteklov/diamagnetic.hpp"
#include "magsteklov/error.hpp"
#include "magsteklov/figures.hpp"
#include "magsteklov/spectra.hpp"
#include "magsteklov/table_io.hpp"
#include "magsteklov/verify.hpp"

namespace magsteklov {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
    std::string domain;
    std::optional<double> t, t_start, t_stop;
    std::optional<int> t_steps;
    std::optional<int> k_max;
    std::string format = "csv";
    std::string out_path;
    std::optional<double> tolerance;
    std::optional<std::string> only;
    std::optional<int> n;
    std::string figure;
};

struct SweepDefaults {
    double start, stop;
    int steps;
};

std::vector<double> t_grid(const RunConfig& c, const SweepDefaults& d) {
    const bool ranged = c.t_start || c.t_stop || c.t_steps;
    if (c.t && ranged) throw ConfigurationError("give either --t or --t-start/--t-stop/--t-steps, not both");
    if (c.t) {
        MagneticParameter check(*c.t);
        return {*c.t};
    }
    const double a = c.t_start.value_or(d.start), b = c.t_stop.value_or(d.stop);
    const int n = c.t_steps.value_or(d.steps);
    if (n < 2) throw ConfigurationError("--t-steps must be at least 2");
    if (!(b > a)) throw ConfigurationError("--t-stop must exceed --t-start");
    if (a < 0.0) throw InvalidArgument("t must be non-negative");
    return linspace(a, b, n);
}

int k_max_of(const RunConfig& c, int fallback) {
    const int k = c.k_max.value_or(fallback);
    if (k < 1) throw ConfigurationError("--k-max must be at least 1");
    return k;
}

Table first_columns(const Table& t, std::size_t n) {
    Table out;
    out.columns.assign(t.columns.begin(), t.columns.begin() + std::min(n, t.columns.size()));
    out.comments = t.comments;
    for (const auto& r : t.rows) out.rows.emplace_back(r.begin(), r.begin() + std::min(n, r.size()));
    return out;
}

// Writes to --out when given, else to the console stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ConfigurationError("cannot open output file '" + path + "'");
            os_ = file_.get();
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

void emit_table(const RunConfig& c, std::ostream& out, const Table& table, std::size_t svg_columns,
                const std::string& title, const std::string& y_label) {
    Sink sink(c.out_path, out);
    if (c.format == "csv")
        write_csv(sink.stream(), table);
    else if (c.format == "json")
        write_json(sink.stream(), table);
    else
        write_svg(sink.stream(), svg_columns ? first_columns(table, svg_columns) : table, title, "t", y_label);
}

int note_excluded(const std::vector<ExcludedPoint>& excluded, std::ostream& err) {
    if (excluded.empty()) return kExitOk;
    for (const auto& e : excluded)
        err << "excluded: " << to_string(e.mode.family) << " k=" << e.mode.k << " p=" << e.mode.p.value_or(-1)
            << " t=" << format_number(e.t) << " (" << e.reason << ")\n";
    return kExitExcluded;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (!c.t) throw ConfigurationError("spectrum needs a single --t");
    if (c.t_start || c.t_stop || c.t_steps) throw ConfigurationError("spectrum takes a single --t, not a range");
    if (c.format == "svg") throw ConfigurationError("spectrum supports --format csv or json");
    const Domain d = parse_domain(c.domain);
    const MagneticParameter t(*c.t);
    const auto s = spectrum(d, t, k_max_of(c, 10));
    Sink sink(c.out_path, out);
    if (c.format == "csv")
        write_spectrum_csv(sink.stream(), s, {});
    else
        write_spectrum_json(sink.stream(), s, d, t.value());
    for (const auto& w : s.warnings) err << "warning: " << w << '\n';
    return note_excluded(s.excluded, err);
}

int cmd_first(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Domain d = parse_domain(c.domain);
    const auto grid = t_grid(c, {0.0, 12.0, kFigureSamples});
    std::vector<ExcludedPoint> excluded;
    const auto table = first_eigenvalue_sweep(d, grid, k_max_of(c, 50), &excluded);
    emit_table(c, out, table, 2, "first eigenvalue on " + to_string(d), "lambda_1");
    return note_excluded(excluded, err);
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
    Table table;
    std::string title;
    if (c.figure == "fig1-left") {
        table = figure_fig1_left(k_max_of(c, 3), t_grid(c, {0.0, 5.0, kFigureSamples}));
        title = "S^3 1-form eigenvalues";
    } else if (c.figure == "fig1-right") {
        table = figure_fig1_right(t_grid(c, {0.0, 12.0, kFigureSamples}), k_max_of(c, 50));
        title = "S^3 first 1-form eigenvalue";
    } else {
        table = figure_fig2(k_max_of(c, 3), t_grid(c, {0.0, 10.0, kFigureSamples}));
        title = "B^2 Steklov eigenvalues on 1-forms";
    }
    emit_table(c, out, table, c.figure == "fig1-right" ? 2 : 0, title, "eigenvalue");
    return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    VerifyOptions opt;
    opt.tolerance = c.tolerance;
    opt.only = c.only;
    opt.n = c.n;
    const auto results = run_verification(opt);
    nlohmann::json report;
    report["checks"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        report["checks"].push_back({{"name", r.name},
                                    {"status", r.pass ? "pass" : "fail"},
                                    {"max_error", r.max_error},
                                    {"tolerance", r.tolerance},
                                    {"details", r.details}});
        char line[160];
        std::snprintf(line, sizeof line, "%s %-22s max_error=%.3g tolerance=%.3g\n", r.pass ? "pass" : "FAIL",
                      r.name.c_str(), r.max_error, r.tolerance);
        err << line;
    }
    report["pass"] = all;
    Sink sink(c.out_path, out);
    sink.stream() << report.dump(2) << '\n';
    return all ? kExitOk : kExitFailure;
}

int cmd_diamagnetic(const RunConfig& c, std::ostream& out) {
    const Domain d = parse_domain(c.domain.empty() ? "b2" : c.domain);
    if (d != Domain::B2 && d != Domain::B4) throw ConfigurationError("diamagnetic supports --domain b2 or b4");
    const auto rep = check_violation(d, t_grid(c, {0.04, 2.0, 50}), k_max_of(c, 50));
    Table table;
    table.columns = {"t", "bound", "actual", "sigma0", "violated", "dominated", "k", "p"};
    for (const auto& r : rep.rows)
        table.rows.push_back({r.t, r.bound, r.actual, r.sigma0, r.violated ? 1.0 : 0.0, r.dominated ? 1.0 : 0.0,
                              double(r.mode.k), r.mode.p ? double(*r.mode.p) : kNaN});
    auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("none"); };
    const auto co = bound_coefficients_b2n(d == Domain::B2 ? 1 : 2);
    table.comments.push_back("bound = " + format_number(co.sigma0) + " + " + format_number(co.c1) + " t + " +
                             format_number(co.c2) + " t^2");
    table.comments.push_back("largest violating t on the grid: " + opt(rep.largest_violating_t));
    if (d == Domain::B4) {
        table.comments.push_back("exact k=1 p=0 branch reaches 3/2 at t = " + opt(rep.branch_crossing));
        table.comments.push_back("first eigenvalue reaches 3/2 at t = " + opt(rep.first_crossing));
    }
    emit_table(c, out, table, 4, "diamagnetic bound on " + to_string(d), "first Steklov eigenvalue");
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& c, bool with_domain, bool with_range) {
    if (with_domain)
        sub->add_option("--domain", c.domain, "s1, s3, b2 or b4")
            ->check(CLI::IsMember({"s1", "s3", "b2", "b4"}));
    sub->add_option("--t", c.t, "magnetic parameter t >= 0");
    if (with_range) {
        sub->add_option("--t-start", c.t_start, "sweep start");
        sub->add_option("--t-stop", c.t_stop, "sweep stop");
        sub->add_option("--t-steps", c.t_steps, "number of sweep points (>= 2)");
    }
    sub->add_option("--k-max", c.k_max, "largest branch index enumerated");
    sub->add_option("--format", c.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out", c.out_path, "output file (default: stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Magnetic Hodge Laplacian and Steklov spectra"};
    app.require_subcommand(1);
    RunConfig c;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalue table at one t");
    add_common(spectrum_cmd, c, true, true);
    spectrum_cmd->get_option("--domain")->required();

    auto* first = app.add_subcommand("first", "first eigenvalue at one t or over a sweep");
    add_common(first, c, true, true);
    first->get_option("--domain")->required();

    auto* fig = app.add_subcommand("figure", "regenerate figure data");
    fig->add_option("name", c.figure, "fig1-left, fig1-right or fig2")
        ->required()
        ->check(CLI::IsMember({"fig1-left", "fig1-right", "fig2"}));
    add_common(fig, c, false, true);

    auto* ver = app.add_subcommand("verify", "run the oracle suite and write a JSON report");
    ver->add_option("--tolerance", c.tolerance, "override every check tolerance");
    ver->add_option("--only", c.only, "run one named check");
    ver->add_option("--n", c.n, "harmonic-extension dimension n (1 or 2)");
    ver->add_option("--out", c.out_path, "report file (default: stdout)");
    std::string report_format = "json";
    ver->add_option("--format", report_format, "json")->check(CLI::IsMember({"json"}));

    auto* dia = app.add_subcommand("diamagnetic", "diamagnetic bound against the first eigenvalue");
    add_common(dia, c, true, true);

    std::vector<const char*> argv{"magsteklov"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidConfig;
    }
    try {
        if (spectrum_cmd->parsed()) return cmd_spectrum(c, out, err);
        if (first->parsed()) return cmd_first(c, out, err);
        if (fig->parsed()) return cmd_figure(c, out);
        if (ver->parsed()) return cmd_verify(c, out, err);
        return cmd_diamagnetic(c, out);
    } catch (const InvalidArgument& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const ConfigurationError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const CutoffInsufficient& e) {
        err << "invalid configuration: " << e.what() << " (raise --k-max)\n";
        return kExitInvalidConfig;
    } catch (const PoleError& e) {
        err << "pole: " << e.what() << '\n';
        return kExitExcluded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace magsteklov
