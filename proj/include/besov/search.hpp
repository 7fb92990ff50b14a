#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "analytic_map.hpp"
#include "config.hpp"
#include "norms.hpp"
#include "operators.hpp"

namespace besov {

//-- Nelder-Mead ---------------------------------------------------------------

struct NelderMeadOptions
{
    int budget = 200;            // objective evaluations
    double initial_step = 0.5;   // simplex edge along each axis
    double f_tolerance = 1e-15;  // spread of simplex values at convergence
    double x_tolerance = 1e-10;  // simplex diameter at convergence
};

struct NelderMeadResult
{
    std::vector<double> x;
    double value;
    std::vector<double> trace;  // best value after each iteration
    int evaluations;
    bool converged;
};

/// Standard simplex method (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2). Deterministic for a deterministic objective.
template <class F>
NelderMeadResult nelder_mead(F&& f, std::vector<double> x0, const NelderMeadOptions& options)
{
    const std::size_t n = x0.size();
    if (n == 0)
        throw std::invalid_argument("nelder_mead: empty parameter vector");
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(std::span<const double>(x));
    };

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> values(n + 1);
    values[0] = eval(simplex[0]);
    for (std::size_t i = 0; i < n; ++i)
    {
        simplex[i + 1][i] += options.initial_step;
        values[i + 1] = eval(simplex[i + 1]);
    }

    NelderMeadResult out{{}, 0.0, {}, 0, false};
    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s(n + 1);
        std::vector<double> v(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
        {
            s[i] = std::move(simplex[order[i]]);
            v[i] = values[order[i]];
        }
        simplex = std::move(s);
        values = std::move(v);
    };
    auto blend = [&](const std::vector<double>& a, const std::vector<double>& b, double t) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = a[i] + t * (b[i] - a[i]);
        return r;
    };

    sort_simplex();
    out.trace.push_back(values[0]);
    while (evals < options.budget)
    {
        double diameter = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[0][j]));
        if (values[n] - values[0] <= options.f_tolerance && diameter <= options.x_tolerance)
        {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                centroid[j] += simplex[i][j] / static_cast<double>(n);

        const auto reflected = blend(centroid, simplex[n], -1.0);
        const double fr = eval(reflected);
        if (fr < values[0] && evals >= options.budget)
        {
            simplex[n] = reflected;
            values[n] = fr;
        }
        else if (fr < values[0])
        {
            const auto expanded = blend(centroid, simplex[n], -2.0);
            const double fe = eval(expanded);
            if (fe < fr)
            {
                simplex[n] = expanded;
                values[n] = fe;
            }
            else
            {
                simplex[n] = reflected;
                values[n] = fr;
            }
        }
        else if (fr < values[n - 1])
        {
            simplex[n] = reflected;
            values[n] = fr;
        }
        else if (evals < options.budget)
        {
            const bool outside = fr < values[n];
            const auto contracted = outside ? blend(centroid, simplex[n], -0.5) : blend(centroid, simplex[n], 0.5);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : values[n]))
            {
                simplex[n] = contracted;
                values[n] = fc;
            }
            else
            {
                // A shrink cut short by the budget leaves the remaining vertices in place.
                for (std::size_t i = 1; i <= n && evals < options.budget; ++i)
                {
                    simplex[i] = blend(simplex[0], simplex[i], 0.5);
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
        out.trace.push_back(std::min(out.trace.back(), values[0]));
    }
    out.x = simplex[0];
    out.value = values[0];
    out.evaluations = evals;
    return out;
}

//-- search spaces -------------------------------------------------------------

enum class SearchFamily
{
    blaschke_fixing_zero,
    series_fixing_zero,
};

struct DecodedMap
{
    AnalyticMap map;
    double penalty;
    bool proximity_warning;
};

/// Parameterized self-maps with Phi(0) = 0.
///
/// blaschke_fixing_zero(d): lambda z prod_{j<d} (a_j - z)/(1 - conj(a_j) z) with
///   params [theta, s_1, phi_1, ..., s_{d-1}, phi_{d-1}],
///   a_j = cap * logistic(s_j) * e^{i phi_j}.
/// series_fixing_zero(N): sum_{k=1..N} c_k z^k with params
///   [Re c_1, Im c_1, ..., Re c_N, Im c_N] and a feasibility penalty.
class SearchSpace
{
  public:
    static SearchSpace blaschke_fixing_zero(int degree)
    {
        if (degree < 1)
            throw std::invalid_argument("blaschke_fixing_zero: degree must be >= 1");
        return SearchSpace(SearchFamily::blaschke_fixing_zero, degree);
    }

    static SearchSpace series_fixing_zero(int order)
    {
        if (order < 1)
            throw std::invalid_argument("series_fixing_zero: order must be >= 1");
        return SearchSpace(SearchFamily::series_fixing_zero, order);
    }

    SearchFamily family() const { return family_; }
    int size() const { return size_; }

    std::size_t dimension() const
    {
        return family_ == SearchFamily::blaschke_fixing_zero ? static_cast<std::size_t>(1 + 2 * (size_ - 1))
                                                             : static_cast<std::size_t>(2 * size_);
    }

    std::string name() const
    {
        return (family_ == SearchFamily::blaschke_fixing_zero ? "blaschke_fixing_zero(" : "series_fixing_zero(") +
               std::to_string(size_) + ")";
    }

    DecodedMap decode(std::span<const double> params) const
    {
        if (params.size() != dimension())
            throw std::invalid_argument("SearchSpace::decode: expected " + std::to_string(dimension()) +
                                        " parameters");
        for (double x : params)
            if (!std::isfinite(x))
                throw std::invalid_argument("SearchSpace::decode: non-finite parameter");

        if (family_ == SearchFamily::blaschke_fixing_zero)
        {
            std::vector<complex> zeros{0.0};
            bool warn = false;
            for (int j = 0; j < size_ - 1; ++j)
            {
                const double s = params[static_cast<std::size_t>(1 + 2 * j)];
                const double angle = params[static_cast<std::size_t>(2 + 2 * j)];
                const double radius = config::search_radius_cap / (1.0 + std::exp(-s));
                warn = warn || radius > config::search_proximity_fraction * config::search_radius_cap;
                zeros.push_back(std::polar(radius, angle));
            }
            return {AnalyticMap::blaschke(std::polar(1.0, params[0]), std::move(zeros)), 0.0, warn};
        }

        std::vector<complex> c(static_cast<std::size_t>(size_) + 1, complex{});
        for (int k = 1; k <= size_; ++k)
            c[static_cast<std::size_t>(k)] = {params[static_cast<std::size_t>(2 * k - 2)],
                                              params[static_cast<std::size_t>(2 * k - 1)]};
        PowerSeries s(std::move(c));
        double max_mod = 0.0;
        constexpr int grid = 256;
        for (int j = 0; j < grid; ++j)
            max_mod = std::max(max_mod, std::abs(s.value(std::polar(1.0, 2.0 * std::numbers::pi * j / grid))));
        const double penalty = std::max(0.0, max_mod - 1.0) * config::search_penalty_weight;
        return {AnalyticMap(std::move(s)), penalty, false};
    }

    /// Random starting point drawn from rng.
    std::vector<double> random_start(std::mt19937_64& rng) const
    {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        std::vector<double> x(dimension());
        if (family_ == SearchFamily::blaschke_fixing_zero)
        {
            std::uniform_real_distribution<double> squash(-3.0, 3.0);
            x[0] = angle(rng);
            for (int j = 0; j < size_ - 1; ++j)
            {
                x[static_cast<std::size_t>(1 + 2 * j)] = squash(rng);
                x[static_cast<std::size_t>(2 + 2 * j)] = angle(rng);
            }
            return x;
        }
        // Leading coefficient on a circle of radius in [0.3, 0.8], the rest small,
        // so the start is feasible.
        std::uniform_real_distribution<double> lead(0.3, 0.8);
        std::uniform_real_distribution<double> rest(-0.1, 0.1);
        const complex c1 = std::polar(lead(rng), angle(rng));
        x[0] = c1.real();
        x[1] = c1.imag();
        for (std::size_t i = 2; i < x.size(); ++i)
            x[i] = rest(rng);
        return x;
    }

  private:
    SearchSpace(SearchFamily family, int size) : family_(family), size_(size) {}

    SearchFamily family_;
    int size_;
};

//-- objective and minimization ------------------------------------------------

/// Shared inputs of the search objective.
struct SearchProblem
{
    SearchSpace space;
    double p;
    NormKind kind;
    std::vector<TestFunction> basis;
    QuadratureParams quadrature{config::search_radial_nodes, config::search_angular_nodes};
};

/// Evaluates max isometry defect plus feasibility penalty. Basis norms are
/// computed once at construction.
class SearchObjective
{
  public:
    explicit SearchObjective(SearchProblem problem)
        : problem_(std::move(problem)),
          rule_(build_rule(problem_.kind.weight_exponent(problem_.p), problem_.quadrature.radial,
                           problem_.quadrature.angular)),
          norms_(basis_norms(problem_.basis, problem_.p, problem_.kind, rule_))
    {
        if (problem_.basis.empty())
            throw std::invalid_argument("search: basis must be nonempty");
    }

    double operator()(std::span<const double> params) const
    {
        const auto decoded = problem_.space.decode(params);
        const auto report = isometry_defect(decoded.map, problem_.p, problem_.kind, problem_.basis, rule_, norms_);
        return report.max_defect + decoded.penalty;
    }

    const SearchProblem& problem() const { return problem_; }

  private:
    SearchProblem problem_;
    WeightedDiskRule rule_;
    std::vector<double> norms_;
};

/// objective(space, params, p, kind, basis) with the search quadrature.
inline double objective(const SearchSpace& space, std::span<const double> params, double p,
                        const NormKind& kind, std::vector<TestFunction> basis = default_basis())
{
    return SearchObjective(SearchProblem{space, p, kind, std::move(basis)})(params);
}

struct RestartResult
{
    int restart;
    std::vector<double> start;
    std::vector<double> best_params;
    double best_defect;
    std::vector<double> trace;
    int evaluations;
    bool converged;
};

struct SearchResult
{
    std::string family;
    double p;
    std::string kind;
    std::uint64_t seed;
    int budget;
    std::vector<RestartResult> restarts;
    int best_restart;
    std::vector<double> best_params;
    double best_defect;
    double refined_defect;  // best map re-evaluated at the default rule
    std::string best_map;
    bool proximity_warning;
};

namespace detail {

/// splitmix64 step, used to give each restart its own stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace detail

/// Nelder-Mead from `restarts` seeded random starts; the global best is the
/// lowest defect, ties broken by restart index.
inline SearchResult minimize(const SearchProblem& problem, int restarts, std::uint64_t seed, int budget)
{
    if (restarts < 1)
        throw std::invalid_argument("minimize: restarts must be >= 1");
    if (budget < 200)
        throw std::invalid_argument("minimize: budget must be >= 200 evaluations per restart");

    const SearchObjective objective(problem);
    SearchResult result{problem.space.name(), problem.p, problem.kind.name(), seed, budget, {}, 0, {}, 0.0, 0.0, {}, false};
    for (int r = 0; r < restarts; ++r)
    {
        std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(r)));
        auto start = problem.space.random_start(rng);
        NelderMeadOptions options;
        options.budget = budget;
        auto nm = nelder_mead(objective, start, options);
        result.restarts.push_back({r, std::move(start), nm.x, nm.value, std::move(nm.trace), nm.evaluations,
                                   nm.converged});
    }
    for (const auto& r : result.restarts)
        if (r.best_defect < result.restarts[static_cast<std::size_t>(result.best_restart)].best_defect)
            result.best_restart = r.restart;
    const auto& best = result.restarts[static_cast<std::size_t>(result.best_restart)];
    result.best_params = best.best_params;
    result.best_defect = best.best_defect;
    const auto decoded = problem.space.decode(best.best_params);
    result.best_map = decoded.map.describe();
    result.proximity_warning = decoded.proximity_warning;
    // Zeros near the cap concentrate |Phi'| in a boundary layer the search rule
    // cannot resolve; the refined value is the one to trust.
    const RuleCache fine;
    result.refined_defect =
        isometry_defect(decoded.map, problem.p, problem.kind, problem.basis,
                        fine.rule(problem.kind.weight_exponent(problem.p)),
                        basis_norms(problem.basis, problem.p, problem.kind,
                                    fine.rule(problem.kind.weight_exponent(problem.p))))
            .max_defect +
        decoded.penalty;
    return result;
}

}  // namespace besov
