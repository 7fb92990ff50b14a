#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "analytic_map.hpp"
#include "config.hpp"
#include "quadrature.hpp"

namespace besov {

enum class NormSelector
{
    besov_seminorm,
    besov_norm,
    bergman,
    equivalent,
};

/// Which norm to evaluate. The exponent p is passed separately.
class NormKind
{
  public:
    static NormKind besov_seminorm() { return NormKind(NormSelector::besov_seminorm, 0.0, 0); }
    static NormKind besov_norm() { return NormKind(NormSelector::besov_norm, 0.0, 0); }

    static NormKind bergman(double alpha)
    {
        if (!(alpha > -1.0))
            throw std::invalid_argument("bergman norm requires alpha > -1");
        return NormKind(NormSelector::bergman, alpha, 0);
    }

    /// sum_{k<n} |f^(k)(0)| + ||f^(n)||_{A^p_{np-2}}, n >= 2.
    static NormKind equivalent(int n)
    {
        if (n < 2)
            throw std::invalid_argument("equivalent norm requires n >= 2");
        return NormKind(NormSelector::equivalent, 0.0, n);
    }

    NormSelector selector() const { return selector_; }
    double alpha() const { return alpha_; }
    int order() const { return order_; }

    /// Exponent of (1 - |z|^2) in the integral part of the norm.
    double weight_exponent(double p) const
    {
        switch (selector_)
        {
        case NormSelector::bergman:
            return alpha_;
        case NormSelector::equivalent:
            return order_ * p - 2.0;
        default:
            return p - 2.0;
        }
    }

    std::string name() const
    {
        std::ostringstream os;
        switch (selector_)
        {
        case NormSelector::besov_seminorm:
            os << "besov-semi";
            break;
        case NormSelector::besov_norm:
            os << "besov";
            break;
        case NormSelector::bergman:
            os << "bergman(alpha=" << alpha_ << ")";
            break;
        case NormSelector::equivalent:
            os << "equiv(n=" << order_ << ")";
            break;
        }
        return os.str();
    }

  private:
    NormKind(NormSelector s, double alpha, int order) : selector_(s), alpha_(alpha), order_(order) {}

    NormSelector selector_;
    double alpha_;
    int order_;
};

struct QuadratureParams
{
    int radial = config::default_radial_nodes;
    int angular = config::default_angular_nodes;
};

/// Lazily built rules keyed by weight exponent. Safe to share across threads.
class RuleCache
{
  public:
    explicit RuleCache(QuadratureParams params = {}) : params_(params)
    {
        check_rule_sizes(params.radial, params.angular);
    }

    const QuadratureParams& params() const { return params_; }

    const WeightedDiskRule& rule(double alpha) const
    {
        std::lock_guard lock(mutex_);
        auto it = rules_.find(alpha);
        if (it == rules_.end())
            it = rules_
                     .emplace(alpha, std::make_unique<WeightedDiskRule>(
                                         build_rule(alpha, params_.radial, params_.angular)))
                     .first;
        return *it->second;
    }

  private:
    QuadratureParams params_;
    mutable std::mutex mutex_;
    mutable std::map<double, std::unique_ptr<WeightedDiskRule>> rules_;
};

namespace detail {

inline void check_weight(const WeightedDiskRule& rule, double alpha, const char* who)
{
    if (!rule.is_full_disk() || std::abs(rule.alpha() - alpha) > 1e-12)
    {
        std::ostringstream os;
        os << who << ": rule built for alpha = " << rule.alpha() << " but alpha = " << alpha
           << " is required";
        throw std::invalid_argument(os.str());
    }
}

inline void check_besov_exponent(double p, const char* who)
{
    if (!(p > 1.0))
        throw std::invalid_argument(std::string(who) + ": p must be > 1");
}

/// |x|^p without a square root.
inline double abs_pow(complex x, double p) { return std::pow(std::norm(x), 0.5 * p); }

/// Pointwise f^(n)(z).
class NthDerivative
{
  public:
    NthDerivative(const AnalyticMap& f, int n) : f_(f), n_(n), scale_(factorial(n))
    {
        if (const auto* s = std::get_if<PowerSeries>(&f.variant()))
        {
            PowerSeries d = *s;
            for (int k = 0; k < n; ++k)
                d = d.derivative();
            poly_ = std::move(d);
        }
    }

    complex operator()(complex z) const
    {
        if (poly_)
            return poly_->value(z);
        return scale_ * f_.taylor_unchecked(z, n_)[static_cast<std::size_t>(n_)];
    }

  private:
    const AnalyticMap& f_;
    int n_;
    double scale_;
    std::optional<PowerSeries> poly_;
};

}  // namespace detail

/// ||f||_p = (int_D |f'|^p (1 - |z|^2)^{p-2} dA)^{1/p}. Rule must carry alpha = p - 2.
inline double besov_seminorm(const AnalyticMap& f, double p, const WeightedDiskRule& rule)
{
    detail::check_besov_exponent(p, "besov_seminorm");
    detail::check_weight(rule, p - 2.0, "besov_seminorm");
    const double s = integrate(rule, [&](complex z) { return detail::abs_pow(f.derivative_unchecked(z), p); });
    return std::pow(s, 1.0 / p);
}

/// |f(0)| + ||f||_p.
inline double besov_norm(const AnalyticMap& f, double p, const WeightedDiskRule& rule)
{
    return std::abs(f.value(0.0)) + besov_seminorm(f, p, rule);
}

/// (int_D |f|^p (1 - |z|^2)^alpha dA)^{1/p}.
inline double bergman_norm(const AnalyticMap& f, double p, double alpha, const WeightedDiskRule& rule)
{
    if (!(p >= 1.0))
        throw std::invalid_argument("bergman_norm: p must be >= 1");
    if (!(alpha > -1.0))
        throw std::invalid_argument("bergman_norm: alpha must be > -1");
    detail::check_weight(rule, alpha, "bergman_norm");
    const double s = integrate(rule, [&](complex z) { return detail::abs_pow(f.value_unchecked(z), p); });
    return std::pow(s, 1.0 / p);
}

/// sum_{k<n} |f^(k)(0)| + ||f^(n)||_{A^p_{np-2}}. Rule must carry alpha = np - 2.
inline double equivalent_norm(const AnalyticMap& f, double p, int n, const WeightedDiskRule& rule)
{
    if (n < 2)
        throw std::invalid_argument("equivalent_norm: n must be >= 2");
    detail::check_besov_exponent(p, "equivalent_norm");
    detail::check_weight(rule, n * p - 2.0, "equivalent_norm");
    double head = 0.0;
    for (int k = 0; k < n; ++k)
        head += std::abs(nth_derivative_at_zero(f, k));
    const detail::NthDerivative dn(f, n);
    const double s = integrate(rule, [&](complex z) { return detail::abs_pow(dn(z), p); });
    return head + std::pow(s, 1.0 / p);
}

inline double norm(const AnalyticMap& f, double p, const NormKind& kind, const WeightedDiskRule& rule)
{
    switch (kind.selector())
    {
    case NormSelector::besov_seminorm:
        return besov_seminorm(f, p, rule);
    case NormSelector::besov_norm:
        return besov_norm(f, p, rule);
    case NormSelector::bergman:
        return bergman_norm(f, p, kind.alpha(), rule);
    case NormSelector::equivalent:
        return equivalent_norm(f, p, kind.order(), rule);
    }
    throw std::logic_error("norm: unknown selector");
}

inline double norm(const AnalyticMap& f, double p, const NormKind& kind, const RuleCache& rules)
{
    return norm(f, p, kind, rules.rule(kind.weight_exponent(p)));
}

}  // namespace besov
