#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Eigenvalues>

#include "config.hpp"
#include "power_series.hpp"

namespace besov {

//-- summation -----------------------------------------------------------------

template <class T>
T pairwise_sum(std::span<const T> x)
{
    if (x.size() <= 16)
    {
        T acc{};
        for (const T& v : x)
            acc += v;
        return acc;
    }
    const std::size_t half = x.size() / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

//-- Gauss-Jacobi on [0, 1] ----------------------------------------------------

/// Nodes u_i in (0, 1) and weights w_i with
///   sum_i w_i g(u_i) ~ int_0^1 g(u) (1 - u)^alpha du,
/// exact for polynomials of degree <= 2K - 1.
struct GaussJacobiRule
{
    double alpha;
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

/// P_n^{(a,0)}(x) and P_{n-1}^{(a,0)}(x) by the three-term recurrence.
inline std::pair<long double, long double> jacobi_pair(int n, long double a, long double x)
{
    const long double b = 0.0L;
    long double p0 = 1.0L;
    if (n == 0)
        return {p0, 0.0L};
    long double p1 = (a + 1.0L) + (a + b + 2.0L) * (x - 1.0L) / 2.0L;
    for (int k = 2; k <= n; ++k)
    {
        const long double s = 2.0L * k + a + b;
        const long double c1 = 2.0L * k * (k + a + b) * (s - 2.0L);
        const long double c2 = (s - 1.0L) * (s * (s - 2.0L) * x + a * a - b * b);
        const long double c3 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s;
        const long double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

/// d/dx P_n^{(a,0)} from (2n+a)(1-x^2) P_n' = n(a - (2n+a)x) P_n + 2(n+a) n P_{n-1}.
inline long double jacobi_derivative(int n, long double a, long double x, long double pn,
                                     long double pnm1)
{
    const long double s = 2.0L * n + a;
    return (n * (a - s * x) * pn + 2.0L * (n + a) * n * pnm1) / (s * (1.0L - x * x));
}

}  // namespace detail

inline GaussJacobiRule gauss_jacobi(double alpha, int count)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("gauss_jacobi: alpha must be > -1 (weight not integrable)");
    if (count < 1)
        throw std::invalid_argument("gauss_jacobi: node count must be >= 1");

    // Golub-Welsch starting values on [-1, 1] for weight (1 - x)^a.
    const double a = alpha;
    Eigen::VectorXd diag(count);
    Eigen::VectorXd off(std::max(count - 1, 1));
    for (int k = 0; k < count; ++k)
    {
        const double s = 2.0 * k + a;
        diag[k] = (k == 0) ? -a / (a + 2.0) : -a * a / (s * (s + 2.0));
        if (k >= 1)
        {
            const double num = 4.0 * k * (k + a) * k * (k + a);
            const double den = s * s * (s + 1.0) * (s - 1.0);
            off[k - 1] = std::sqrt(num / den);
        }
    }
    std::vector<long double> x(static_cast<std::size_t>(count));
    if (count == 1)
        x[0] = diag[0];
    else
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, off.head(count - 1), Eigen::EigenvaluesOnly);
        for (int i = 0; i < count; ++i)
            x[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }

    // Newton polish in extended precision; weights from 1/((1-x^2) P_n'^2),
    // normalized to the exact moment 2^{a+1}/(a+1).
    std::vector<long double> w(x.size());
    long double total = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        long double xi = x[i];
        for (int it = 0; it < 8; ++it)
        {
            auto [pn, pnm1] = detail::jacobi_pair(count, a, xi);
            const long double dp = detail::jacobi_derivative(count, a, xi, pn, pnm1);
            const long double step = pn / dp;
            xi -= step;
            if (std::fabs(step) < 1e-19L)
                break;
        }
        auto [pn, pnm1] = detail::jacobi_pair(count, a, xi);
        const long double dp = detail::jacobi_derivative(count, a, xi, pn, pnm1);
        x[i] = xi;
        w[i] = 1.0L / ((1.0L - xi * xi) * dp * dp);
        total += w[i];
    }

    GaussJacobiRule rule{alpha, {}, {}};
    rule.nodes.resize(x.size());
    rule.weights.resize(x.size());
    const long double moment = 1.0L / (static_cast<long double>(a) + 1.0L);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        rule.nodes[i] = static_cast<double>((1.0L + x[i]) / 2.0L);
        rule.weights[i] = static_cast<double>(w[i] / total * moment);
    }
    return rule;
}

//-- rules on the disk ---------------------------------------------------------

/// Product rule for int_D g(z) (1 - |z|^2)^alpha dA(z) with dA normalized so
/// that A(D) = 1. Under u = |z|^2 the normalized measure is du dtheta / 2pi.
///
/// Radial nodes are Gauss-Jacobi(alpha, 0) in u. Each ring carries an
/// equispaced angular rule of at least M points, refined near the boundary
/// so that M_k (1 - r_k) >= config::angular_refinement.
///
/// The sub-disk form integrates over D(0, r) with plain area measure:
/// Gauss-Legendre in u on [0, r^2], no weight.
class WeightedDiskRule
{
  public:
    double alpha() const { return alpha_; }
    double radius() const { return radius_; }
    int radial_count() const { return static_cast<int>(u_.size()); }
    int angular_count() const { return angular_; }
    std::span<const double> radial_nodes() const { return u_; }
    std::span<const double> radial_weights() const { return w_; }
    std::span<const int> ring_sizes() const { return ring_; }

    std::size_t node_count() const
    {
        std::size_t n = 0;
        for (int m : ring_)
            n += static_cast<std::size_t>(m);
        return n;
    }

    bool is_full_disk() const { return radius_ == 1.0; }

    friend WeightedDiskRule build_rule(double alpha, int radial, int angular);
    friend WeightedDiskRule build_subdisk_rule(double radius, int radial, int angular);

  private:
    WeightedDiskRule() = default;

    void grade_rings()
    {
        ring_.resize(u_.size());
        for (std::size_t k = 0; k < u_.size(); ++k)
        {
            const double gap = 1.0 - std::sqrt(u_[k]);
            const double needed = config::angular_refinement / gap;
            int m = angular_;
            if (needed > m)
                m = 8 * static_cast<int>(std::ceil(needed / 8.0));
            ring_[k] = m;
        }
    }

    double alpha_ = 0.0;
    double radius_ = 1.0;
    int angular_ = 0;
    std::vector<double> u_;
    std::vector<double> w_;
    std::vector<int> ring_;
};

inline void check_rule_sizes(int radial, int angular)
{
    if (radial < config::min_radial_nodes)
        throw std::invalid_argument("quadrature: radial node count must be >= 4");
    if (angular < config::min_angular_nodes)
        throw std::invalid_argument("quadrature: angular node count must be >= 8");
    if (radial > config::max_radial_nodes)
        throw std::invalid_argument("quadrature: radial node count must be <= 4096");
    if (angular > config::max_angular_nodes)
        throw std::invalid_argument("quadrature: angular node count must be <= 65536");
}

inline WeightedDiskRule build_rule(double alpha, int radial, int angular)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("build_rule: alpha must be > -1 (weight not integrable)");
    check_rule_sizes(radial, angular);
    auto gj = gauss_jacobi(alpha, radial);
    WeightedDiskRule rule;
    rule.alpha_ = alpha;
    rule.radius_ = 1.0;
    rule.angular_ = angular;
    rule.u_ = std::move(gj.nodes);
    rule.w_ = std::move(gj.weights);
    rule.grade_rings();
    return rule;
}

inline WeightedDiskRule build_subdisk_rule(double radius, int radial, int angular)
{
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("build_subdisk_rule: radius must lie in (0, 1)");
    check_rule_sizes(radial, angular);
    auto gl = gauss_jacobi(0.0, radial);
    const double top = radius * radius;
    WeightedDiskRule rule;
    rule.alpha_ = 0.0;
    rule.radius_ = radius;
    rule.angular_ = angular;
    rule.u_.resize(gl.nodes.size());
    rule.w_.resize(gl.nodes.size());
    for (std::size_t k = 0; k < gl.nodes.size(); ++k)
    {
        rule.u_[k] = top * gl.nodes[k];
        rule.w_[k] = top * gl.weights[k];
    }
    rule.grade_rings();
    return rule;
}

namespace detail {

template <class T>
bool finite(const T& v)
{
    if constexpr (std::is_same_v<T, complex>)
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    else
        return std::isfinite(v);
}

[[noreturn]] inline void non_finite_at(complex z)
{
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at node " << z;
    throw std::domain_error(os.str());
}

}  // namespace detail

/// Weighted sum of g over the rule. Rings are reduced by pairwise summation,
/// then the ring totals are reduced the same way; the order is fixed.
template <class F>
auto integrate(const WeightedDiskRule& rule, F&& g)
{
    using T = std::decay_t<std::invoke_result_t<F&, complex>>;
    const auto u = rule.radial_nodes();
    const auto w = rule.radial_weights();
    const auto rings = rule.ring_sizes();
    std::vector<T> totals(u.size());
    std::vector<T> buf;
    for (std::size_t k = 0; k < u.size(); ++k)
    {
        const int m = rings[k];
        const double r = std::sqrt(u[k]);
        buf.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
        {
            const complex z = std::polar(r, 2.0 * std::numbers::pi * j / m);
            T v = g(z);
            if (!detail::finite(v))
                detail::non_finite_at(z);
            buf[static_cast<std::size_t>(j)] = v;
        }
        totals[k] = (w[k] / m) * pairwise_sum<T>(buf);
    }
    return pairwise_sum<T>(totals);
}

/// integrate() for `count` real integrands sharing one pass over the nodes.
/// g(z, out) writes out[0..count).
template <class F>
std::vector<double> integrate_many(const WeightedDiskRule& rule, std::size_t count, F&& g)
{
    const auto u = rule.radial_nodes();
    const auto w = rule.radial_weights();
    const auto rings = rule.ring_sizes();
    std::vector<std::vector<double>> totals(count, std::vector<double>(u.size()));
    std::vector<std::vector<double>> buf(count);
    std::vector<double> out(count);
    for (std::size_t k = 0; k < u.size(); ++k)
    {
        const int m = rings[k];
        const double r = std::sqrt(u[k]);
        for (auto& b : buf)
            b.resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
        {
            const complex z = std::polar(r, 2.0 * std::numbers::pi * j / m);
            g(z, std::span<double>(out));
            for (std::size_t i = 0; i < count; ++i)
            {
                if (!std::isfinite(out[i]))
                    detail::non_finite_at(z);
                buf[i][static_cast<std::size_t>(j)] = out[i];
            }
        }
        for (std::size_t i = 0; i < count; ++i)
            totals[i][k] = (w[k] / m) * pairwise_sum<double>(buf[i]);
    }
    std::vector<double> result(count);
    for (std::size_t i = 0; i < count; ++i)
        result[i] = pairwise_sum<double>(totals[i]);
    return result;
}

//-- Monte Carlo oracle --------------------------------------------------------

struct McEstimate
{
    double value;
    double standard_error;
    long samples;
};

/// Importance-sampled estimate of int_D g (1 - |z|^2)^alpha dA. The radial
/// density (alpha+1)(1-u)^alpha is drawn by inverse transform, so the
/// estimate is mean(g) / (alpha + 1).
template <class F>
McEstimate integrate_mc(double alpha, F&& g, long samples, std::uint64_t seed)
{
    if (!(alpha > -1.0))
        throw std::invalid_argument("integrate_mc: alpha must be > -1 (weight not integrable)");
    if (samples < config::min_mc_samples)
        throw std::invalid_argument("integrate_mc: at least 10^4 samples required");

    std::mt19937_64 rng(seed);
    const double inv = 1.0 / (alpha + 1.0);
    std::vector<double> values(static_cast<std::size_t>(samples));
    for (auto& v : values)
    {
        // 1 - canonical lies in (0, 1], keeping u in [0, 1).
        const double s = 1.0 - std::generate_canonical<double, 53>(rng);
        const double t = std::generate_canonical<double, 53>(rng);
        const double u = 1.0 - std::pow(s, inv);
        const complex z = std::polar(std::sqrt(u), 2.0 * std::numbers::pi * t);
        v = static_cast<double>(g(z));
        if (!std::isfinite(v))
            detail::non_finite_at(z);
    }
    const double n = static_cast<double>(samples);
    const double mean = pairwise_sum<double>(values) / n;
    for (auto& v : values)
        v = (v - mean) * (v - mean);
    const double var = pairwise_sum<double>(values) / (n - 1.0);
    return {mean * inv, std::sqrt(var / n) * inv, samples};
}

}  // namespace besov
