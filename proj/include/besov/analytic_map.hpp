#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "config.hpp"
#include "power_series.hpp"

namespace besov {

/// Evaluation requested outside the open unit disk.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// A Taylor coefficient beyond the configured truncation order was requested.
class TruncationError : public std::length_error
{
  public:
    TruncationError(int required, int available)
        : std::length_error("truncation order " + std::to_string(available) +
                            " too short; order >= " + std::to_string(required) +
                            " required"),
          required_(required)
    {
    }

    int required_order() const { return required_; }

  private:
    int required_;
};

//-- variants ------------------------------------------------------------------

/// z -> lambda (a - z) / (1 - conj(a) z).
struct DiskAutomorphism
{
    complex lambda;
    complex a;

    complex value(complex z) const { return lambda * (a - z) / (1.0 - std::conj(a) * z); }

    complex derivative_value(complex z) const
    {
        const complex d = 1.0 - std::conj(a) * z;
        return lambda * (std::norm(a) - 1.0) / (d * d);
    }

    std::vector<complex> taylor_at(complex z0, int order) const
    {
        const complex num[] = {lambda * (a - z0), -lambda};
        const complex den[] = {1.0 - std::conj(a) * z0, -std::conj(a)};
        return series::divide(num, den, order);
    }

    bool is_rotation() const { return a == complex{}; }
};

/// lambda * prod_j b_j(z) with b_j(z) = z when a_j = 0 and
/// (a_j - z) / (1 - conj(a_j) z) otherwise.
struct BlaschkeProduct
{
    complex lambda;
    std::vector<complex> zeros;

    static complex factor(complex a, complex z)
    {
        if (a == complex{})
            return z;
        return (a - z) / (1.0 - std::conj(a) * z);
    }

    static complex factor_derivative(complex a, complex z)
    {
        if (a == complex{})
            return 1.0;
        const complex d = 1.0 - std::conj(a) * z;
        return (std::norm(a) - 1.0) / (d * d);
    }

    complex value(complex z) const
    {
        complex acc = lambda;
        for (const complex& a : zeros)
            acc *= factor(a, z);
        return acc;
    }

    complex derivative_value(complex z) const
    {
        const complex v = value(z);
        if (std::abs(v) >= config::blaschke_log_derivative_floor)
        {
            // Phi'/Phi = sum_j [-1/(a_j - z) + conj(a_j)/(1 - conj(a_j) z)]
            complex log_derivative{};
            for (const complex& a : zeros)
            {
                if (a == complex{})
                    log_derivative += 1.0 / z;
                else
                    log_derivative += -1.0 / (a - z) + std::conj(a) / (1.0 - std::conj(a) * z);
            }
            return v * log_derivative;
        }
        // Near a zero of Phi: product rule.
        complex sum{};
        for (std::size_t j = 0; j < zeros.size(); ++j)
        {
            complex term = factor_derivative(zeros[j], z);
            for (std::size_t i = 0; i < zeros.size(); ++i)
                if (i != j)
                    term *= factor(zeros[i], z);
            sum += term;
        }
        return lambda * sum;
    }

    std::vector<complex> taylor_at(complex z0, int order) const
    {
        std::vector<complex> acc = series::truncate(std::vector<complex>{lambda}, order);
        for (const complex& a : zeros)
        {
            std::vector<complex> f;
            if (a == complex{})
            {
                const complex lin[] = {z0, 1.0};
                f = series::truncate(lin, order);
            }
            else
            {
                const complex num[] = {a - z0, -1.0};
                const complex den[] = {1.0 - std::conj(a) * z0, -std::conj(a)};
                f = series::divide(num, den, order);
            }
            acc = series::multiply(acc, f, order);
        }
        return acc;
    }

    int degree() const { return static_cast<int>(zeros.size()); }
};

class AnalyticMap;

/// outer o inner.
struct Composition
{
    std::shared_ptr<const AnalyticMap> outer;
    std::shared_ptr<const AnalyticMap> inner;
};

//-- AnalyticMap ---------------------------------------------------------------

/// An analytic function on the unit disk, immutable after construction.
///
/// Variants: a finite power series, a disk automorphism (rotations included),
/// a finite Blaschke product, or the composition of two maps. value() and
/// derivative_value() use closed forms per variant and the chain rule for
/// compositions; taylor_at() returns exact local Taylor jets.
class AnalyticMap
{
  public:
    using Variant = std::variant<PowerSeries, DiskAutomorphism, BlaschkeProduct, Composition>;

    explicit AnalyticMap(PowerSeries s) : v_(std::move(s)) {}

    static AnalyticMap series(std::vector<complex> coefficients)
    {
        return AnalyticMap(PowerSeries(std::move(coefficients)));
    }

    static AnalyticMap identity() { return AnalyticMap(PowerSeries::identity()); }

    static AnalyticMap constant(complex c) { return series({c}); }

    static AnalyticMap monomial(int k, complex c = 1.0)
    {
        return AnalyticMap(PowerSeries::monomial(k, c));
    }

    /// z -> e^{i theta} z.
    static AnalyticMap rotation(double theta)
    {
        // lambda (0 - z) with lambda = -e^{i theta} is exactly e^{i theta} z.
        return AnalyticMap(DiskAutomorphism{-std::polar(1.0, theta), complex{}});
    }

    static AnalyticMap automorphism(complex lambda, complex a)
    {
        check_unimodular(lambda, "automorphism");
        if (!(std::abs(a) < 1.0))
            throw std::invalid_argument("automorphism: |a| must be < 1");
        return AnalyticMap(DiskAutomorphism{lambda, a});
    }

    static AnalyticMap blaschke(complex lambda, std::vector<complex> zeros)
    {
        check_unimodular(lambda, "blaschke");
        if (zeros.empty())
            throw std::invalid_argument("blaschke: degree must be >= 1");
        for (const complex& a : zeros)
            if (!(std::abs(a) < 1.0))
                throw std::invalid_argument("blaschke: every zero must satisfy |a| < 1");
        return AnalyticMap(BlaschkeProduct{lambda, std::move(zeros)});
    }

    /// outer o inner.
    static AnalyticMap compose(AnalyticMap outer, AnalyticMap inner)
    {
        return AnalyticMap(Composition{std::make_shared<const AnalyticMap>(std::move(outer)),
                                       std::make_shared<const AnalyticMap>(std::move(inner))});
    }

    const Variant& variant() const { return v_; }

    complex value(complex z) const
    {
        check_domain(z);
        return value_unchecked(z);
    }

    complex derivative_value(complex z) const
    {
        check_domain(z);
        return derivative_unchecked(z);
    }

    /// Coefficients c_0..c_order with m(z0 + h) = sum c_k h^k + O(h^{order+1}).
    std::vector<complex> taylor_at(complex z0, int order) const
    {
        check_domain(z0);
        return taylor_unchecked(z0, order);
    }

    // Unchecked evaluation, used where the argument is produced by another
    // map (a composed symbol) and may legitimately sit on or past |z| = 1
    // for polynomial outer maps.
    complex value_unchecked(complex z) const
    {
        return std::visit(
            [z](const auto& m) -> complex {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Composition>)
                    return m.outer->value_unchecked(m.inner->value_unchecked(z));
                else
                    return m.value(z);
            },
            v_);
    }

    complex derivative_unchecked(complex z) const
    {
        return std::visit(
            [z](const auto& m) -> complex {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, Composition>)
                    return m.outer->derivative_unchecked(m.inner->value_unchecked(z)) *
                           m.inner->derivative_unchecked(z);
                else
                    return m.derivative_value(z);
            },
            v_);
    }

    std::vector<complex> taylor_unchecked(complex z0, int order) const
    {
        return std::visit(
            [z0, order](const auto& m) -> std::vector<complex> {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, PowerSeries>)
                    return series::recenter(m.coefficients(), z0, order);
                else if constexpr (std::is_same_v<T, Composition>)
                {
                    auto inner = m.inner->taylor_unchecked(z0, order);
                    auto outer = m.outer->taylor_unchecked(inner[0], order);
                    return series::compose(outer, inner, order);
                }
                else
                    return m.taylor_at(z0, order);
            },
            v_);
    }

    bool is_rotation() const
    {
        if (const auto* a = std::get_if<DiskAutomorphism>(&v_))
            return a->is_rotation();
        return false;
    }

    /// Automorphisms and Blaschke products are self-maps by construction.
    bool is_self_map_by_construction() const
    {
        return std::holds_alternative<DiskAutomorphism>(v_) ||
               std::holds_alternative<BlaschkeProduct>(v_);
    }

    std::string describe() const
    {
        std::ostringstream os;
        os.precision(17);
        std::visit(
            [&os](const auto& m) {
                using T = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<T, PowerSeries>)
                {
                    os << "series[";
                    for (std::size_t k = 0; k < m.coefficients().size(); ++k)
                        os << (k ? "," : "") << m.coefficients()[k];
                    os << "]";
                }
                else if constexpr (std::is_same_v<T, DiskAutomorphism>)
                {
                    if (m.is_rotation())
                        os << "rotation(theta=" << std::arg(-m.lambda) << ")";
                    else
                        os << "automorphism(lambda=" << m.lambda << ",a=" << m.a << ")";
                }
                else if constexpr (std::is_same_v<T, BlaschkeProduct>)
                {
                    os << "blaschke(lambda=" << m.lambda << ",zeros=[";
                    for (std::size_t k = 0; k < m.zeros.size(); ++k)
                        os << (k ? "," : "") << m.zeros[k];
                    os << "])";
                }
                else
                    os << "compose(" << m.outer->describe() << "," << m.inner->describe() << ")";
            },
            v_);
        return os.str();
    }

  private:
    explicit AnalyticMap(Variant v) : v_(std::move(v)) {}

    static void check_unimodular(complex lambda, const char* who)
    {
        if (std::abs(std::abs(lambda) - 1.0) > config::unimodular_tolerance)
            throw std::invalid_argument(std::string(who) + ": |lambda| must equal 1");
    }

    static void check_domain(complex z)
    {
        if (!(std::abs(z) < 1.0))
        {
            std::ostringstream os;
            os.precision(17);
            os << "point " << z << " lies outside the open unit disk";
            throw DomainError(os.str());
        }
    }

    Variant v_;
};

//-- operations ----------------------------------------------------------------

inline complex value(const AnalyticMap& m, complex z) { return m.value(z); }

inline complex derivative_value(const AnalyticMap& m, complex z)
{
    return m.derivative_value(z);
}

/// Taylor polynomial of m at the origin through degree N.
inline PowerSeries taylor_truncate(const AnalyticMap& m, int order)
{
    if (order < 0)
        throw std::invalid_argument("taylor_truncate: order must be >= 0");
    return PowerSeries(m.taylor_at(0.0, order));
}

inline double factorial(int k)
{
    double f = 1.0;
    for (int j = 2; j <= k; ++j)
        f *= j;
    return f;
}

/// f^{(k)}(0). Non-polynomial maps go through a Taylor expansion truncated at
/// the given order; asking for k beyond it is an error.
inline complex nth_derivative_at_zero(const AnalyticMap& m, int k,
                                      int truncation = config::taylor_order)
{
    if (k < 0)
        throw std::invalid_argument("nth_derivative_at_zero: k must be >= 0");
    if (const auto* s = std::get_if<PowerSeries>(&m.variant()))
        return factorial(k) * s->coefficient(static_cast<std::size_t>(k));
    if (k > truncation)
        throw TruncationError(k, truncation);
    return factorial(k) * taylor_truncate(m, truncation).coefficient(static_cast<std::size_t>(k));
}

struct SelfMapCheck
{
    bool valid;
    double max_modulus;
    complex witness;
};

/// Boundary-adjacent polar grid check of max |m| <= 1. grid_density is the
/// angular count; the number of rings is grid_density / 8 (at least 4).
inline SelfMapCheck validate_self_map(const AnalyticMap& m, int grid_density)
{
    if (grid_density < 16)
        throw std::invalid_argument("validate_self_map: grid_density must be >= 16");
    const int rings = std::max(4, grid_density / 8);
    SelfMapCheck out{true, 0.0, complex{}};
    for (int j = 1; j <= rings; ++j)
    {
        const double r = config::self_map_radius * j / rings;
        for (int k = 0; k < grid_density; ++k)
        {
            const complex z = std::polar(r, 2.0 * std::numbers::pi * k / grid_density);
            const double mod = std::abs(m.value_unchecked(z));
            if (mod > out.max_modulus || !std::isfinite(mod))
            {
                out.max_modulus = mod;
                out.witness = z;
            }
        }
    }
    out.valid = m.is_self_map_by_construction() ||
                (std::isfinite(out.max_modulus) && out.max_modulus <= 1.0 + config::self_map_slack);
    return out;
}

}  // namespace besov
