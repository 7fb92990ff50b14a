#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "analytic_map.hpp"
#include "config.hpp"
#include "norms.hpp"
#include "polynomial_roots.hpp"
#include "quadrature.hpp"

namespace besov {

//-- test functions ------------------------------------------------------------

struct TestFunction
{
    int id;
    std::string label;
    AnalyticMap f;
};

/// {z, z^2, z^3, z^4, z + z^2/2, (z - 0.3) z}.
inline std::vector<TestFunction> default_basis()
{
    return {
        {0, "z", AnalyticMap::monomial(1)},
        {1, "z^2", AnalyticMap::monomial(2)},
        {2, "z^3", AnalyticMap::monomial(3)},
        {3, "z^4", AnalyticMap::monomial(4)},
        {4, "z+z^2/2", AnalyticMap::series({0.0, 1.0, 0.5})},
        {5, "(z-0.3)z", AnalyticMap::series({0.0, -0.3, 1.0})},
    };
}

/// Test functions for weighted composition operators on A^p_alpha.
inline std::vector<TestFunction> default_bergman_basis()
{
    return {
        {0, "1", AnalyticMap::constant(1.0)},
        {1, "z", AnalyticMap::monomial(1)},
        {2, "z^2", AnalyticMap::monomial(2)},
        {3, "z^3", AnalyticMap::monomial(3)},
        {4, "1+z/2", AnalyticMap::series({1.0, 0.5})},
    };
}

inline void require_self_map(const AnalyticMap& phi, const char* who)
{
    if (phi.is_self_map_by_construction())
        return;
    const auto check = validate_self_map(phi, config::self_map_grid_density);
    if (!check.valid)
    {
        std::ostringstream os;
        os.precision(17);
        os << who << ": symbol is not a self-map of the disk (|Phi| = " << check.max_modulus
           << " at " << check.witness << ")";
        throw std::invalid_argument(os.str());
    }
}

/// C_Phi f = f o Phi.
inline AnalyticMap compose(const AnalyticMap& phi, const AnalyticMap& f)
{
    require_self_map(phi, "compose");
    return AnalyticMap::compose(f, phi);
}

//-- norms of composed functions -----------------------------------------------

/// Norms of f_i o Phi for every basis element in one pass over the nodes.
/// Phi and its jet are evaluated once per node.
inline std::vector<double> composed_norms(const AnalyticMap& phi, std::span<const TestFunction> basis,
                                          double p, const NormKind& kind, const WeightedDiskRule& rule)
{
    detail::check_weight(rule, kind.weight_exponent(p), "composed_norms");
    const std::size_t count = basis.size();
    std::vector<double> integrals;
    switch (kind.selector())
    {
    case NormSelector::besov_seminorm:
    case NormSelector::besov_norm:
        integrals = integrate_many(rule, count, [&](complex z, std::span<double> out) {
            const complex w = phi.value_unchecked(z);
            const complex dphi = phi.derivative_unchecked(z);
            for (std::size_t i = 0; i < count; ++i)
                out[i] = detail::abs_pow(basis[i].f.derivative_unchecked(w) * dphi, p);
        });
        break;
    case NormSelector::bergman:
        integrals = integrate_many(rule, count, [&](complex z, std::span<double> out) {
            const complex w = phi.value_unchecked(z);
            for (std::size_t i = 0; i < count; ++i)
                out[i] = detail::abs_pow(basis[i].f.value_unchecked(w), p);
        });
        break;
    case NormSelector::equivalent:
    {
        const int n = kind.order();
        const double scale = factorial(n);
        integrals = integrate_many(rule, count, [&](complex z, std::span<double> out) {
            const auto inner = phi.taylor_unchecked(z, n);
            for (std::size_t i = 0; i < count; ++i)
            {
                const auto outer = basis[i].f.taylor_unchecked(inner[0], n);
                const auto jet = series::compose(outer, inner, n);
                out[i] = detail::abs_pow(scale * jet[static_cast<std::size_t>(n)], p);
            }
        });
        break;
    }
    }

    std::vector<double> result(count);
    const complex phi0 = phi.value(0.0);
    for (std::size_t i = 0; i < count; ++i)
    {
        double v = std::pow(integrals[i], 1.0 / p);
        if (kind.selector() == NormSelector::besov_norm)
            v += std::abs(basis[i].f.value_unchecked(phi0));
        else if (kind.selector() == NormSelector::equivalent)
        {
            const AnalyticMap composed = AnalyticMap::compose(basis[i].f, phi);
            for (int k = 0; k < kind.order(); ++k)
                v += std::abs(nth_derivative_at_zero(composed, k));
        }
        result[i] = v;
    }
    return result;
}

//-- isometry defect -----------------------------------------------------------

struct DefectRow
{
    int id;
    std::string label;
    double norm;
    double composed_norm;
    double defect;
};

/// Norm pairs (||f||, ||C_Phi f||) over a finite basis. A small max_defect is
/// consistent with an isometry on the span of the basis; it proves nothing
/// about the whole space.
struct DefectReport
{
    std::string symbol;
    double p;
    std::string kind;
    std::vector<DefectRow> rows;
    double max_defect;
    complex phi_at_zero;
};

inline std::vector<double> basis_norms(std::span<const TestFunction> basis, double p, const NormKind& kind,
                                       const WeightedDiskRule& rule)
{
    std::vector<double> out;
    out.reserve(basis.size());
    for (const auto& t : basis)
        out.push_back(norm(t.f, p, kind, rule));
    return out;
}

/// As below, with ||f|| for the basis supplied by the caller.
inline DefectReport isometry_defect(const AnalyticMap& phi, double p, const NormKind& kind,
                                    std::span<const TestFunction> basis, const WeightedDiskRule& rule,
                                    std::span<const double> precomputed_norms)
{
    if (basis.empty())
        throw std::invalid_argument("isometry_defect: basis must be nonempty");
    if (precomputed_norms.size() != basis.size())
        throw std::invalid_argument("isometry_defect: one norm per basis element required");
    const auto composed = composed_norms(phi, basis, p, kind, rule);

    DefectReport report{phi.describe(), p, kind.name(), {}, 0.0, phi.value(0.0)};
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        const double d = std::abs(composed[i] - precomputed_norms[i]);
        report.rows.push_back({basis[i].id, basis[i].label, precomputed_norms[i], composed[i], d});
        report.max_defect = std::max(report.max_defect, d);
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const DefectRow& a, const DefectRow& b) { return a.id < b.id; });
    return report;
}

inline DefectReport isometry_defect(const AnalyticMap& phi, double p, const NormKind& kind,
                                    std::span<const TestFunction> basis, const WeightedDiskRule& rule)
{
    require_self_map(phi, "isometry_defect");
    if (basis.empty())
        throw std::invalid_argument("isometry_defect: basis must be nonempty");
    const auto norms = basis_norms(basis, p, kind, rule);
    return isometry_defect(phi, p, kind, basis, rule, norms);
}

inline DefectReport isometry_defect(const AnalyticMap& phi, double p, const NormKind& kind,
                                    std::span<const TestFunction> basis, const RuleCache& rules)
{
    return isometry_defect(phi, p, kind, basis, rules.rule(kind.weight_exponent(p)));
}

/// max_f | ||f o Phi||_p - ||f||_p | / max(||f||_p, 1e-15).
inline double seminorm_preservation_check(const AnalyticMap& phi, double p,
                                          std::span<const TestFunction> basis, const WeightedDiskRule& rule)
{
    require_self_map(phi, "seminorm_preservation_check");
    const auto kind = NormKind::besov_seminorm();
    const auto composed = composed_norms(phi, basis, p, kind, rule);
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        const double base = besov_seminorm(basis[i].f, p, rule);
        worst = std::max(worst, std::abs(composed[i] - base) / std::max(base, 1e-15));
    }
    return worst;
}

//-- Schwarz-Pick --------------------------------------------------------------

struct ResidualSample
{
    complex z;
    double residual;
};

struct ResidualReport
{
    double max_residual;
    double max_abs_residual;
    complex argmax;
    std::vector<ResidualSample> field;
};

/// |Phi'(z)| (1 - |z|^2) - (1 - |Phi(z)|^2) on a polar grid (origin plus
/// grid_density / 4 rings of grid_density points out to radius 1 - 1e-4).
/// Nonpositive for self-maps; identically zero for automorphisms.
inline ResidualReport schwarz_pick_residual(const AnalyticMap& phi, int grid_density)
{
    if (grid_density < 16)
        throw std::invalid_argument("schwarz_pick_residual: grid_density must be >= 16");
    require_self_map(phi, "schwarz_pick_residual");
    auto residual = [&](complex z) {
        return std::abs(phi.derivative_value(z)) * (1.0 - std::norm(z)) - (1.0 - std::norm(phi.value(z)));
    };
    ResidualReport report{-std::numeric_limits<double>::infinity(), 0.0, complex{}, {}};
    auto record = [&](complex z) {
        const double r = residual(z);
        report.field.push_back({z, r});
        if (r > report.max_residual)
        {
            report.max_residual = r;
            report.argmax = z;
        }
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
    };
    record(0.0);
    const int rings = std::max(4, grid_density / 4);
    for (int i = 1; i <= rings; ++i)
    {
        const double r = config::self_map_radius * i / rings;
        for (int j = 0; j < grid_density; ++j)
            record(std::polar(r, 2.0 * std::numbers::pi * j / grid_density));
    }
    return report;
}

//-- counting function ---------------------------------------------------------

struct CountResult
{
    int count;
    int flagged;
    std::vector<complex> preimages;
};

/// n_Phi(w) for rational symbols: distinct roots of N(z) - w D(z) with
/// |z| < 1 - epsilon. Roots in [1 - epsilon, 1) are flagged instead.
class PreimageCounter
{
  public:
    explicit PreimageCounter(const AnalyticMap& phi, double epsilon = config::counting_boundary_epsilon)
        : epsilon_(epsilon)
    {
        if (!(epsilon > 0.0 && epsilon < 0.01))
            throw std::invalid_argument("counting_function: epsilon must lie in (0, 0.01)");
        auto form = rational_form(phi);
        if (!form)
            throw std::invalid_argument("counting_function: symbol has no rational form");
        form_ = std::move(*form);
        for (const complex& c : form_.denominator)
            denominator_scale_ = std::max(denominator_scale_, std::abs(c));
    }

    CountResult operator()(complex w) const
    {
        const auto eq = poly::add(form_.numerator, poly::scale(form_.denominator, -w));
        const auto roots = polynomial_roots(eq);
        CountResult out{0, 0, {}};
        for (const complex& z : roots)
        {
            const double mod = std::abs(z);
            if (mod >= 1.0)
                continue;
            // Common root of N and D: not a preimage.
            if (std::abs(poly::evaluate(form_.denominator, z)) < 1e-14 * denominator_scale_)
                continue;
            if (mod >= 1.0 - epsilon_)
            {
                ++out.flagged;
                continue;
            }
            const bool seen = std::any_of(out.preimages.begin(), out.preimages.end(), [&](complex q) {
                return std::abs(q - z) < config::root_merge_distance;
            });
            if (!seen)
                out.preimages.push_back(z);
        }
        out.count = static_cast<int>(out.preimages.size());
        return out;
    }

    double epsilon() const { return epsilon_; }

  private:
    double epsilon_;
    RationalForm form_;
    double denominator_scale_ = 0.0;
};

inline CountResult counting_function(const AnalyticMap& phi, complex w,
                                     double epsilon = config::counting_boundary_epsilon)
{
    if (!(std::abs(w) < 1.0))
        throw DomainError("counting_function: w must lie in the open unit disk");
    return PreimageCounter(phi, epsilon)(w);
}

//-- change of variables -------------------------------------------------------

struct IdentityCheck
{
    double lhs;
    double rhs;
    double abs_diff;
};

using RealFunction = std::function<double(complex)>;

/// lhs = int g(Phi(z)) |Phi'(z)|^2 dA(z), rhs = int g(w) n_Phi(w) dA(w).
/// The rule must be an unweighted full-disk rule.
inline IdentityCheck change_of_variable_check(const AnalyticMap& phi, const RealFunction& g,
                                              const WeightedDiskRule& rule)
{
    detail::check_weight(rule, 0.0, "change_of_variable_check");
    require_self_map(phi, "change_of_variable_check");
    const PreimageCounter counter(phi);
    const double lhs = integrate(rule, [&](complex z) {
        return g(phi.value_unchecked(z)) * std::norm(phi.derivative_unchecked(z));
    });
    const double rhs = integrate(rule, [&](complex w) { return g(w) * counter(w).count; });
    return {lhs, rhs, std::abs(lhs - rhs)};
}

//-- weighted symbols and the Borel-set identity ------------------------------

/// psi and Phi of W_{psi,Phi} f = psi (f o Phi). A missing weight means psi = Phi'.
class WeightedSymbol
{
  public:
    WeightedSymbol(AnalyticMap weight, AnalyticMap symbol)
        : weight_(std::move(weight)), symbol_(std::move(symbol))
    {
        require_self_map(symbol_, "WeightedSymbol");
    }

    static WeightedSymbol with_derivative_weight(AnalyticMap symbol)
    {
        return WeightedSymbol(std::move(symbol));
    }

    const AnalyticMap& symbol() const { return symbol_; }
    bool weight_is_derivative() const { return !weight_.has_value(); }

    complex weight_value(complex z) const
    {
        return weight_ ? weight_->value_unchecked(z) : symbol_.derivative_unchecked(z);
    }

  private:
    explicit WeightedSymbol(AnalyticMap symbol) : symbol_(std::move(symbol))
    {
        require_self_map(symbol_, "WeightedSymbol");
    }

    std::optional<AnalyticMap> weight_;
    AnalyticMap symbol_;
};

/// Centered annulus inner <= |w| < outer; inner = 0 gives the disk D(0, outer).
struct CenteredRegion
{
    double inner;
    double outer;

    static CenteredRegion disk(double radius) { return {0.0, radius}; }

    bool contains(complex w) const
    {
        const double r = std::abs(w);
        return r >= inner && r < outer;
    }

    /// int_E (1 - |w|^2)^alpha dA(w).
    double weighted_area(double alpha) const
    {
        return (std::pow(1.0 - inner * inner, alpha + 1.0) - std::pow(1.0 - outer * outer, alpha + 1.0)) /
               (alpha + 1.0);
    }
};

enum class IntegrationMethod
{
    quadrature,
    monte_carlo,
};

struct BorelOptions
{
    IntegrationMethod method = IntegrationMethod::monte_carlo;
    QuadratureParams quadrature{};
    long mc_samples = config::default_mc_samples;
    std::uint64_t seed = config::default_seed;
};

struct BorelCheck
{
    double lhs;
    double rhs;
    double standard_error;
};

/// lhs = int chi_E(Phi(z)) |psi(z)|^p (1 - |z|^2)^alpha dA,
/// rhs = int_E (1 - |w|^2)^alpha dA (closed form).
inline BorelCheck borel_equality_check(const WeightedSymbol& ws, double alpha, double p,
                                       const CenteredRegion& region, const BorelOptions& options = {})
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("borel_equality_check: alpha must be > -1");
    if (!(region.inner >= 0.0 && region.inner < region.outer && region.outer <= 1.0))
        throw std::invalid_argument("borel_equality_check: need 0 <= inner < outer <= 1");
    auto g = [&](complex z) -> double {
        if (!region.contains(ws.symbol().value_unchecked(z)))
            return 0.0;
        return detail::abs_pow(ws.weight_value(z), p);
    };
    BorelCheck out{0.0, region.weighted_area(alpha), 0.0};
    if (options.method == IntegrationMethod::monte_carlo)
    {
        const auto est = integrate_mc(alpha, g, options.mc_samples, options.seed);
        out.lhs = est.value;
        out.standard_error = est.standard_error;
    }
    else
    {
        const auto rule = build_rule(alpha, options.quadrature.radial, options.quadrature.angular);
        out.lhs = integrate(rule, g);
    }
    return out;
}

//-- fullness ------------------------------------------------------------------

struct CoverageSample
{
    complex w;
    int count;
};

struct CoverageReport
{
    std::vector<CoverageSample> samples;
    double omitted_area;
    double epsilon;
    long flagged;
};

/// Fraction of an area-uniform stratified grid of w in D with n_Phi(w) = 0.
/// Cell (i, j) of an n_r x n_theta partition into equal areas contributes its
/// center r = sqrt((i + 1/2) / n_r), theta = 2 pi (j + 1/2) / n_theta.
inline CoverageReport fullness_defect(const AnalyticMap& phi, long w_samples,
                                      double epsilon = config::counting_boundary_epsilon)
{
    if (w_samples < 16)
        throw std::invalid_argument("fullness_defect: at least 16 samples required");
    const PreimageCounter counter(phi, epsilon);
    const long n_theta = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(w_samples))));
    const long n_r = (w_samples + n_theta - 1) / n_theta;
    CoverageReport report{{}, 0.0, epsilon, 0};
    report.samples.reserve(static_cast<std::size_t>(n_r * n_theta));
    long omitted = 0;
    for (long i = 0; i < n_r; ++i)
    {
        const double r = std::sqrt((i + 0.5) / static_cast<double>(n_r));
        for (long j = 0; j < n_theta; ++j)
        {
            const complex w = std::polar(r, 2.0 * std::numbers::pi * (j + 0.5) / static_cast<double>(n_theta));
            const auto c = counter(w);
            report.samples.push_back({w, c.count});
            report.flagged += c.flagged;
            if (c.count == 0)
                ++omitted;
        }
    }
    report.omitted_area = static_cast<double>(omitted) / static_cast<double>(report.samples.size());
    return report;
}

//-- proof-chain integrals -----------------------------------------------------

/// For p > 2 the contract is I1 <= I2, for p < 2 it is I1 >= I2.
struct LocalCheck
{
    double i1;
    double i2;
    double radius;
    /// Whether n_Phi = 1 on the probe grid around the origin; nullopt when the
    /// symbol has no rational form.
    std::optional<bool> univalent_near_origin;
};

/// n_Phi(w) <= 1 on a polar grid in D(0, radius) (radius in w).
inline std::optional<bool> univalent_near_origin(const AnalyticMap& phi,
                                                 double radius = config::univalence_probe_radius)
{
    if (!rational_form(phi))
        return std::nullopt;
    const PreimageCounter counter(phi);
    for (int i = 1; i <= 8; ++i)
        for (int j = 0; j < 16; ++j)
        {
            const complex w = std::polar(radius * i / 8.0 * 0.999, 2.0 * std::numbers::pi * (j + 0.25) / 16.0);
            if (counter(w).count != 1)
                return false;
        }
    return true;
}

/// I1 = int_{D(0,r)} |Phi'|^p (1 - |z|^2)^{p-2} dA,
/// I2 = int_{D(0,r)} |Phi'|^2 (1 - |Phi|^2)^{p-2} dA.
inline LocalCheck local_isometry_check(const AnalyticMap& phi, double p, double radius,
                                       QuadratureParams quad = {})
{
    detail::check_besov_exponent(p, "local_isometry_check");
    require_self_map(phi, "local_isometry_check");
    const auto rule = build_subdisk_rule(radius, quad.radial, quad.angular);
    const double i1 = integrate(rule, [&](complex z) {
        return detail::abs_pow(phi.derivative_unchecked(z), p) * std::pow(1.0 - std::norm(z), p - 2.0);
    });
    const double i2 = integrate(rule, [&](complex z) {
        return std::norm(phi.derivative_unchecked(z)) * std::pow(1.0 - std::norm(phi.value_unchecked(z)), p - 2.0);
    });
    return {i1, i2, radius, univalent_near_origin(phi)};
}

/// The three sides of the univalence chain over the whole disk:
///   schwarz_pick_side = int |Phi'|^p (1-|z|^2)^{p-2} dA = ||Phi||_p^p,
///   pulled_back       = int |Phi'|^2 (1-|Phi|^2)^{p-2} dA,
///   counting_side     = int n_Phi(w) (1-|w|^2)^{p-2} dA(w).
/// For p < 2, schwarz_pick_side >= pulled_back = counting_side.
struct ChainCheck
{
    double schwarz_pick_side;
    double pulled_back;
    double counting_side;
};

/// Both rules must carry alpha = p - 2. The counting side uses its own rule
/// since every node costs a root solve.
inline ChainCheck proof_chain(const AnalyticMap& phi, double p, const WeightedDiskRule& rule,
                              const WeightedDiskRule& counting_rule)
{
    detail::check_besov_exponent(p, "proof_chain");
    detail::check_weight(rule, p - 2.0, "proof_chain");
    detail::check_weight(counting_rule, p - 2.0, "proof_chain");
    require_self_map(phi, "proof_chain");
    const PreimageCounter counter(phi);
    ChainCheck out{};
    out.schwarz_pick_side =
        integrate(rule, [&](complex z) { return detail::abs_pow(phi.derivative_unchecked(z), p); });
    out.pulled_back = integrate(rule, [&](complex z) {
        const double ratio = (1.0 - std::norm(phi.value_unchecked(z))) / (1.0 - std::norm(z));
        return std::norm(phi.derivative_unchecked(z)) * std::pow(ratio, p - 2.0);
    });
    out.counting_side = integrate(counting_rule, [&](complex w) { return double(counter(w).count); });
    return out;
}

//-- weighted composition operators --------------------------------------------

struct WeightedDefect
{
    double max_defect;
    std::vector<DefectRow> rows;
};

/// max_g | ||psi (g o Phi)||_{A^p_{p-2}} - ||g||_{A^p_{p-2}} |. Rule alpha = p - 2.
inline WeightedDefect weighted_isometry_check(const WeightedSymbol& ws, double p,
                                              std::span<const TestFunction> basis, const WeightedDiskRule& rule)
{
    detail::check_besov_exponent(p, "weighted_isometry_check");
    detail::check_weight(rule, p - 2.0, "weighted_isometry_check");
    if (basis.empty())
        throw std::invalid_argument("weighted_isometry_check: basis must be nonempty");
    const auto integrals = integrate_many(rule, basis.size(), [&](complex z, std::span<double> out) {
        const complex w = ws.symbol().value_unchecked(z);
        const complex psi = ws.weight_value(z);
        for (std::size_t i = 0; i < basis.size(); ++i)
            out[i] = detail::abs_pow(psi * basis[i].f.value_unchecked(w), p);
    });
    WeightedDefect out{0.0, {}};
    for (std::size_t i = 0; i < basis.size(); ++i)
    {
        const double base = bergman_norm(basis[i].f, p, p - 2.0, rule);
        const double image = std::pow(integrals[i], 1.0 / p);
        const double d = std::abs(image - base);
        out.rows.push_back({basis[i].id, basis[i].label, base, image, d});
        out.max_defect = std::max(out.max_defect, d);
    }
    return out;
}

//-- equivalent-norm structure -------------------------------------------------

struct MonomialImage
{
    int k;
    double norm;          // equivalent norm of z^k/k!
    double image_norm;    // equivalent norm of (z^k/k!) o Phi
    complex lambda;       // k! times the z^k coefficient of the image
    double off_diagonal;  // largest other Taylor coefficient of the image
};

/// Images of z^k/k!, k < n, under C_Phi. For an isometry of the order-n norm
/// each image is lambda_k z^{pi(k)}/pi(k)! with |lambda_k| = 1; rotations keep
/// pi the identity.
inline std::vector<MonomialImage> monomial_image_check(const AnalyticMap& phi, double p, int n,
                                                       const WeightedDiskRule& rule)
{
    require_self_map(phi, "monomial_image_check");
    std::vector<MonomialImage> out;
    for (int k = 0; k < n; ++k)
    {
        const AnalyticMap mono = AnalyticMap::monomial(k, 1.0 / factorial(k));
        const AnalyticMap image = AnalyticMap::compose(mono, phi);
        const auto coeffs = taylor_truncate(image, config::taylor_order);
        double off = 0.0;
        for (int j = 0; j <= coeffs.degree(); ++j)
            if (j != k)
                off = std::max(off, std::abs(coeffs.coefficient(static_cast<std::size_t>(j))));
        out.push_back({k, equivalent_norm(mono, p, n, rule), equivalent_norm(image, p, n, rule),
                       factorial(k) * coeffs.coefficient(static_cast<std::size_t>(k)), off});
    }
    return out;
}

/// Exact test of 2 (k!)^2 = (2k)!, the modulus condition forced on pi(1) = k.
/// Holds only for k = 1. Valid for 1 <= k <= 16.
inline bool factorial_identity_holds(int k)
{
    if (k < 1 || k > 16)
        throw std::out_of_range("factorial_identity_holds: k must lie in [1, 16]");
    __extension__ using wide = unsigned __int128;
    wide fk = 1;
    for (int j = 2; j <= k; ++j)
        fk *= static_cast<wide>(j);
    wide f2k = 1;
    for (int j = 2; j <= 2 * k; ++j)
        f2k *= static_cast<wide>(j);
    return 2 * fk * fk == f2k;
}

}  // namespace besov
