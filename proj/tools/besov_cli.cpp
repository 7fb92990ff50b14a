// besov: norms, isometry diagnostics and the acceptance battery from the shell.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besov/besov.hpp"

namespace {

using besov::complex;
using besov::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    double p = 1.5;
    int radial = besov::config::default_radial_nodes;
    int angular = besov::config::default_angular_nodes;
    long mc_samples = besov::config::default_mc_samples;
    std::uint64_t seed = besov::config::default_seed;
    bool csv = false;
    std::string out;

    std::string map_path;
    std::string kind = "besov";
    double alpha = 0.0;
    int order = 2;
    double tolerance = -1.0;  // < 0: use the library default
};

/// Everything a subcommand hands back for printing.
struct Output
{
    json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int code = exit_ok;
};

std::string num(double x) { return besov::format_number(x); }

json cjson(complex z) { return json::array({z.real(), z.imag()}); }

void validate(const RunConfig& cfg)
{
    if (!(cfg.p > 1.0))
        throw UsageError("--p must be > 1");
    try
    {
        besov::check_rule_sizes(cfg.radial, cfg.angular);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
    if (cfg.mc_samples < besov::config::min_mc_samples)
        throw UsageError("--mc-samples must be >= 10000");
}

besov::NormKind norm_kind(const RunConfig& cfg)
{
    if (cfg.kind == "besov")
        return besov::NormKind::besov_norm();
    if (cfg.kind == "besov-semi")
        return besov::NormKind::besov_seminorm();
    if (cfg.kind == "bergman")
        return besov::NormKind::bergman(cfg.alpha);
    if (cfg.kind == "equiv")
        return besov::NormKind::equivalent(cfg.order);
    throw UsageError("--kind must be one of besov, besov-semi, bergman, equiv");
}

besov::AnalyticMap load(const RunConfig& cfg, besov::MapRole role)
{
    if (cfg.map_path.empty())
        throw UsageError("--map is required");
    return besov::parse_map_file(cfg.map_path, role);
}

besov::QuadratureParams quad(const RunConfig& cfg) { return {cfg.radial, cfg.angular}; }

//-- subcommands ---------------------------------------------------------------

Output cmd_norm(const RunConfig& cfg)
{
    const auto f = load(cfg, besov::MapRole::function);
    const auto kind = norm_kind(cfg);
    const besov::RuleCache rules(quad(cfg));
    const double value = besov::norm(f, cfg.p, kind, rules);
    Output out;
    out.doc = {{"map", besov::to_json(f)}, {"p", cfg.p}, {"kind", kind.name()}, {"value", value}};
    out.header = {"map", "p", "kind", "value"};
    out.rows.push_back({f.describe(), num(cfg.p), kind.name(), num(value)});
    return out;
}

Output cmd_defect(const RunConfig& cfg)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    const auto kind = norm_kind(cfg);
    const besov::RuleCache rules(quad(cfg));
    const auto report = besov::isometry_defect(phi, cfg.p, kind, besov::default_basis(), rules);
    Output out;
    json rows = json::array();
    out.header = {"id", "function", "norm", "composed_norm", "defect"};
    for (const auto& r : report.rows)
    {
        rows.push_back({{"id", r.id},
                        {"function", r.label},
                        {"norm", r.norm},
                        {"composed_norm", r.composed_norm},
                        {"defect", r.defect}});
        out.rows.push_back({std::to_string(r.id), r.label, num(r.norm), num(r.composed_norm), num(r.defect)});
    }
    out.doc = {{"symbol", report.symbol},
               {"p", report.p},
               {"kind", report.kind},
               {"phi_at_zero", cjson(report.phi_at_zero)},
               {"max_defect", report.max_defect},
               {"rows", rows}};
    return out;
}

Output cmd_residual(const RunConfig& cfg, int density)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    const auto report = besov::schwarz_pick_residual(phi, density);
    const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : besov::config::schwarz_pick_tol;
    Output out;
    json field = json::array();
    out.header = {"re_z", "im_z", "residual"};
    for (const auto& s : report.field)
    {
        field.push_back({{"z", cjson(s.z)}, {"residual", s.residual}});
        out.rows.push_back({num(s.z.real()), num(s.z.imag()), num(s.residual)});
    }
    const bool pass = report.max_residual <= tol;
    out.doc = {{"map", phi.describe()},
               {"max_residual", report.max_residual},
               {"max_abs_residual", report.max_abs_residual},
               {"argmax", cjson(report.argmax)},
               {"tolerance", tol},
               {"pass", pass},
               {"field", field}};
    out.code = pass ? exit_ok : exit_check_failed;
    return out;
}

Output cmd_coverage(const RunConfig& cfg, long samples, double epsilon)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    const auto report = besov::fullness_defect(phi, samples, epsilon);
    std::vector<long> histogram;
    for (const auto& s : report.samples)
    {
        if (static_cast<std::size_t>(s.count) >= histogram.size())
            histogram.resize(static_cast<std::size_t>(s.count) + 1, 0);
        ++histogram[static_cast<std::size_t>(s.count)];
    }
    Output out;
    out.doc = {{"map", phi.describe()},
               {"samples", report.samples.size()},
               {"omitted_area", report.omitted_area},
               {"epsilon", report.epsilon},
               {"flagged", report.flagged},
               {"count_histogram", histogram}};
    out.header = {"preimages", "samples"};
    for (std::size_t k = 0; k < histogram.size(); ++k)
        out.rows.push_back({std::to_string(k), std::to_string(histogram[k])});
    return out;
}

besov::RealFunction radial_function(const std::string& name)
{
    if (name == "one")
        return [](complex) { return 1.0; };
    if (name == "r2")
        return [](complex w) { return std::norm(w); };
    if (name == "r4")
        return [](complex w) { return std::norm(w) * std::norm(w); };
    if (name == "one-minus-r2")
        return [](complex w) { return 1.0 - std::norm(w); };
    throw UsageError("--g must be one of one, r2, r4, one-minus-r2");
}

Output cmd_cov_check(const RunConfig& cfg, const std::string& g)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    const auto rule = besov::build_rule(0.0, cfg.radial, cfg.angular);
    const auto c = besov::change_of_variable_check(phi, radial_function(g), rule);
    const double tol = cfg.tolerance >= 0.0 ? cfg.tolerance : besov::config::change_of_variable_tol;
    const double rel = c.abs_diff / std::max(std::abs(c.rhs), 1e-300);
    const bool pass = rel <= tol;
    Output out;
    out.doc = {{"map", phi.describe()}, {"g", g},           {"lhs", c.lhs},     {"rhs", c.rhs},
               {"abs_diff", c.abs_diff}, {"rel_diff", rel}, {"tolerance", tol}, {"pass", pass}};
    out.header = {"map", "g", "lhs", "rhs", "rel_diff", "pass"};
    out.rows.push_back({phi.describe(), g, num(c.lhs), num(c.rhs), num(rel), pass ? "true" : "false"});
    out.code = pass ? exit_ok : exit_check_failed;
    return out;
}

Output cmd_borel_check(const RunConfig& cfg, double inner, double outer, std::optional<double> alpha,
                       const std::string& weight_path, bool use_quadrature)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    const double a = alpha.value_or(cfg.p - 2.0);
    const auto ws = weight_path.empty()
                        ? besov::WeightedSymbol::with_derivative_weight(phi)
                        : besov::WeightedSymbol(besov::parse_map_file(weight_path, besov::MapRole::function), phi);
    besov::BorelOptions options;
    options.method = use_quadrature ? besov::IntegrationMethod::quadrature : besov::IntegrationMethod::monte_carlo;
    options.quadrature = quad(cfg);
    options.mc_samples = cfg.mc_samples;
    options.seed = cfg.seed;
    const auto c = besov::borel_equality_check(ws, a, cfg.p, {inner, outer}, options);
    const double diff = std::abs(c.lhs - c.rhs);
    double allowed = besov::config::mc_sigma_multiple * c.standard_error;
    if (use_quadrature)
        allowed = (cfg.tolerance >= 0.0 ? cfg.tolerance : besov::config::change_of_variable_tol) * std::abs(c.rhs);
    const bool pass = diff <= allowed;
    Output out;
    out.doc = {{"map", phi.describe()},
               {"weight", weight_path.empty() ? "derivative" : weight_path},
               {"alpha", a},
               {"p", cfg.p},
               {"region", {{"inner", inner}, {"outer", outer}}},
               {"method", use_quadrature ? "quadrature" : "monte_carlo"},
               {"lhs", c.lhs},
               {"rhs", c.rhs},
               {"standard_error", c.standard_error},
               {"allowed", allowed},
               {"pass", pass}};
    out.header = {"inner", "outer", "alpha", "lhs", "rhs", "standard_error", "pass"};
    out.rows.push_back({num(inner), num(outer), num(a), num(c.lhs), num(c.rhs), num(c.standard_error),
                        pass ? "true" : "false"});
    out.code = pass ? exit_ok : exit_check_failed;
    return out;
}

Output cmd_local_check(const RunConfig& cfg, double radius)
{
    const auto phi = load(cfg, besov::MapRole::symbol);
    if (!(radius > 0.0 && radius < 1.0))
        throw UsageError("--radius must lie in (0, 1)");
    const auto c = besov::local_isometry_check(phi, cfg.p, radius, quad(cfg));
    // Direction of the inequality depends on the side of p = 2.
    const double tol = (cfg.tolerance >= 0.0 ? cfg.tolerance : 1e-10) * std::max(std::abs(c.i1), std::abs(c.i2));
    const bool pass = cfg.p > 2.0 ? c.i1 <= c.i2 + tol : (cfg.p < 2.0 ? c.i1 >= c.i2 - tol : true);
    Output out;
    json univalent = c.univalent_near_origin ? json(*c.univalent_near_origin) : json(nullptr);
    out.doc = {{"map", phi.describe()},
               {"p", cfg.p},
               {"radius", radius},
               {"i1", c.i1},
               {"i2", c.i2},
               {"relation", cfg.p > 2.0 ? "i1 <= i2" : (cfg.p < 2.0 ? "i1 >= i2" : "none")},
               {"univalent_near_origin", univalent},
               {"pass", pass}};
    out.header = {"p", "radius", "i1", "i2", "pass"};
    out.rows.push_back({num(cfg.p), num(radius), num(c.i1), num(c.i2), pass ? "true" : "false"});
    out.code = pass ? exit_ok : exit_check_failed;
    return out;
}

Output cmd_search(const RunConfig& cfg, const std::string& family, int degree, int restarts, int budget)
{
    std::optional<besov::SearchSpace> space;
    if (family == "blaschke")
        space = besov::SearchSpace::blaschke_fixing_zero(degree);
    else if (family == "series")
        space = besov::SearchSpace::series_fixing_zero(degree);
    else
        throw UsageError("--family must be blaschke or series");
    if (restarts < 1)
        throw UsageError("--restarts must be >= 1");
    if (budget < 200)
        throw UsageError("--budget must be >= 200");
    const besov::SearchProblem problem{*space, cfg.p, norm_kind(cfg), besov::default_basis()};
    const auto r = besov::minimize(problem, restarts, cfg.seed, budget);
    Output out;
    json runs = json::array();
    out.header = {"restart", "best_defect", "evaluations", "converged", "iterations"};
    for (const auto& rr : r.restarts)
    {
        runs.push_back({{"restart", rr.restart},
                        {"start", rr.start},
                        {"best_params", rr.best_params},
                        {"best_defect", rr.best_defect},
                        {"evaluations", rr.evaluations},
                        {"converged", rr.converged},
                        {"trace", rr.trace}});
        out.rows.push_back({std::to_string(rr.restart), num(rr.best_defect), std::to_string(rr.evaluations),
                            rr.converged ? "true" : "false", std::to_string(rr.trace.size())});
    }
    out.doc = {{"family", r.family},
               {"p", r.p},
               {"kind", r.kind},
               {"seed", r.seed},
               {"budget", r.budget},
               {"best_restart", r.best_restart},
               {"best_params", r.best_params},
               {"best_defect", r.best_defect},
               {"refined_defect", r.refined_defect},
               {"best_map", r.best_map},
               {"proximity_warning", r.proximity_warning},
               {"restarts", runs}};
    return out;
}

Output cmd_verify(const RunConfig& cfg, const std::vector<int>& only, long coverage_samples)
{
    besov::AcceptanceConfig acfg;
    acfg.radial = cfg.radial;
    acfg.angular = cfg.angular;
    acfg.mc_samples = cfg.mc_samples;
    acfg.seed = cfg.seed;
    acfg.coverage_samples = coverage_samples;
    for (int id : only)
        if (id < 1 || id > 13)
            throw UsageError("--only ids must lie in 1..13");
    const auto report = besov::run_acceptance(acfg, only);
    std::cerr << besov::to_table(report);
    Output out;
    out.doc = besov::to_json(report);
    out.header = {"id", "anchor", "check", "measured", "relation", "threshold", "pass",
                  "subchecks", "failed", "seconds", "detail"};
    for (const auto& r : report.rows)
        out.rows.push_back({std::to_string(r.id), r.anchor, r.check,
                            std::isfinite(r.measured) ? num(r.measured) : "", r.relation, num(r.threshold),
                            r.pass ? "true" : "false", std::to_string(r.subchecks), std::to_string(r.failed),
                            num(r.seconds), r.detail});
    out.code = report.all_pass() ? exit_ok : exit_check_failed;
    return out;
}

//-- output --------------------------------------------------------------------

std::string render(const Output& out, bool csv)
{
    if (!csv)
        return out.doc.dump(2) + "\n";
    std::ostringstream os;
    for (std::size_t i = 0; i < out.header.size(); ++i)
        os << (i ? "," : "") << besov::csv_field(out.header[i]);
    os << "\r\n";
    for (const auto& row : out.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << besov::csv_field(row[i]);
        os << "\r\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Besov-space norms and isometry diagnostics for composition operators on the disk"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--p", cfg.p, "Exponent p > 1");
    app.add_option("--radial-nodes", cfg.radial, "Radial Gauss-Jacobi nodes K");
    app.add_option("--angular-nodes", cfg.angular, "Base angular nodes per ring M");
    app.add_option("--mc-samples", cfg.mc_samples, "Monte Carlo samples");
    app.add_option("--seed", cfg.seed, "Random seed");
    auto* json_flag = app.add_flag("--json", "JSON output (default)");
    app.add_flag("--csv", cfg.csv, "RFC 4180 CSV output")->excludes(json_flag);
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
    app.add_option("--tolerance", cfg.tolerance, "Override the pass tolerance of a check");

    auto add_map = [&](CLI::App* sub) { sub->add_option("--map", cfg.map_path, "Map JSON file")->required(); };
    auto add_kind = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind, "besov | besov-semi | bergman | equiv");
        sub->add_option("--alpha", cfg.alpha, "Bergman weight exponent");
        sub->add_option("--n", cfg.order, "Order of the equivalent norm");
    };

    auto* norm = app.add_subcommand("norm", "Norm of an analytic function");
    add_map(norm);
    add_kind(norm);

    auto* defect = app.add_subcommand("defect", "Isometry defect of C_Phi on the default basis");
    add_map(defect);
    add_kind(defect);

    int density = 64;
    auto* residual = app.add_subcommand("residual", "Schwarz-Pick residual field");
    add_map(residual);
    residual->add_option("--grid", density, "Grid density (>= 16)");

    long samples = besov::config::default_coverage_samples;
    double epsilon = besov::config::counting_boundary_epsilon;
    auto* coverage = app.add_subcommand("coverage", "Counting function and omitted area");
    add_map(coverage);
    coverage->add_option("--samples", samples, "Number of w samples");
    coverage->add_option("--epsilon", epsilon, "Boundary flag width");

    std::string g = "one";
    auto* cov = app.add_subcommand("cov-check", "Change-of-variable identity");
    add_map(cov);
    cov->add_option("--g", g, "one | r2 | r4 | one-minus-r2");

    double inner = 0.0;
    double outer = 0.5;
    std::optional<double> alpha;
    std::string weight_path;
    bool use_quadrature = false;
    auto* borel = app.add_subcommand("borel-check", "Weighted pull-back measure on a centered annulus");
    add_map(borel);
    borel->add_option("--inner", inner, "Inner radius");
    borel->add_option("--outer", outer, "Outer radius");
    borel->add_option("--weight-alpha", alpha, "Weight exponent (default p - 2)");
    borel->add_option("--psi", weight_path, "Weight function JSON (default Phi')");
    borel->add_flag("--quadrature", use_quadrature, "Use quadrature instead of Monte Carlo");

    double radius = 0.5;
    auto* local = app.add_subcommand("local-check", "Local integrals I1, I2 on D(0, r)");
    add_map(local);
    local->add_option("--radius", radius, "Radius r");

    std::string family = "blaschke";
    int degree = 2;
    int restarts = besov::config::search_restarts;
    int budget = besov::config::search_budget;
    auto* search = app.add_subcommand("search", "Minimize the isometry defect over origin-fixing maps");
    search->add_option("--family", family, "blaschke | series");
    search->add_option("--degree", degree, "Blaschke degree or series order");
    search->add_option("--restarts", restarts, "Restarts");
    search->add_option("--budget", budget, "Evaluations per restart (>= 200)");
    add_kind(search);

    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance battery");
    verify->add_option("--only", only, "Criterion ids to run")->delimiter(',');
    verify->add_option("--coverage-samples", samples, "Samples for the fullness criterion");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        validate(cfg);
        Output out;
        if (*norm)
            out = cmd_norm(cfg);
        else if (*defect)
            out = cmd_defect(cfg);
        else if (*residual)
            out = cmd_residual(cfg, density);
        else if (*coverage)
            out = cmd_coverage(cfg, samples, epsilon);
        else if (*cov)
            out = cmd_cov_check(cfg, g);
        else if (*borel)
            out = cmd_borel_check(cfg, inner, outer, alpha, weight_path, use_quadrature);
        else if (*local)
            out = cmd_local_check(cfg, radius);
        else if (*search)
            out = cmd_search(cfg, family, degree, restarts, budget);
        else
            out = cmd_verify(cfg, only, samples);

        const std::string text = render(out, cfg.csv);
        if (cfg.out.empty())
            std::cout << text;
        else
        {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file)
                throw UsageError("cannot write '" + cfg.out + "'");
            file << text;
        }
        return out.code;
    }
    catch (const UsageError& e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const besov::MapParseError& e)
    {
        std::cerr << "map error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
}
