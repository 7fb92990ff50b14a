#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Eigenvalues>

#include "analytic_map.hpp"

namespace besov {

//-- polynomial helpers --------------------------------------------------------

namespace poly {

/// Coefficients low degree first.
using Coefficients = std::vector<complex>;

inline Coefficients multiply(std::span<const complex> a, std::span<const complex> b)
{
    if (a.empty() || b.empty())
        return {};
    Coefficients out(a.size() + b.size() - 1, complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

inline Coefficients add(std::span<const complex> a, std::span<const complex> b)
{
    Coefficients out(std::max(a.size(), b.size()), complex{});
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

inline Coefficients scale(std::span<const complex> a, complex c)
{
    Coefficients out(a.begin(), a.end());
    for (auto& x : out)
        x *= c;
    return out;
}

inline Coefficients power(std::span<const complex> a, int k)
{
    Coefficients out{1.0};
    for (int i = 0; i < k; ++i)
        out = multiply(out, a);
    return out;
}

inline complex evaluate(std::span<const complex> a, complex z)
{
    complex acc{};
    for (std::size_t k = a.size(); k-- > 0;)
        acc = acc * z + a[k];
    return acc;
}

/// Drop exactly-zero leading coefficients.
inline Coefficients trimmed(Coefficients a)
{
    while (!a.empty() && a.back() == complex{})
        a.pop_back();
    return a;
}

}  // namespace poly

/// Roots of sum_k c_k z^k as eigenvalues of the companion matrix, each
/// refined by two Newton steps. Throws std::runtime_error when the eigen
/// solver does not converge.
inline std::vector<complex> polynomial_roots(std::span<const complex> coefficients)
{
    const poly::Coefficients c = poly::trimmed({coefficients.begin(), coefficients.end()});
    if (c.size() <= 1)
        return {};
    const auto n = static_cast<Eigen::Index>(c.size() - 1);

    // Leading zeros of the polynomial (c_0 = c_1 = ... = 0) are exact roots.
    std::vector<complex> roots;
    std::size_t low = 0;
    while (c[low] == complex{})
    {
        roots.push_back(complex{});
        ++low;
    }
    const auto m = n - static_cast<Eigen::Index>(low);
    if (m == 0)
        return roots;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    const complex lead = c.back();
    for (Eigen::Index i = 1; i < m; ++i)
        companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < m; ++i)
        companion(i, m - 1) = -c[low + static_cast<std::size_t>(i)] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("polynomial_roots: companion eigenvalue solve did not converge");

    poly::Coefficients dc(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        dc[k - 1] = static_cast<double>(k) * c[k];

    for (Eigen::Index i = 0; i < m; ++i)
    {
        complex z = solver.eigenvalues()[i];
        for (int step = 0; step < 2; ++step)
        {
            const complex d = poly::evaluate(dc, z);
            if (std::abs(d) == 0.0)
                break;
            const complex dz = poly::evaluate(c, z) / d;
            if (!std::isfinite(dz.real()) || !std::isfinite(dz.imag()) ||
                std::abs(dz) > 1e-6 * (1.0 + std::abs(z)))
                break;
            z -= dz;
        }
        roots.push_back(z);
    }
    return roots;
}

//-- rational form of a map ----------------------------------------------------

/// Phi = numerator / denominator as polynomials.
struct RationalForm
{
    poly::Coefficients numerator;
    poly::Coefficients denominator;

    int degree() const
    {
        return static_cast<int>(std::max(numerator.size(), denominator.size())) - 1;
    }
};

/// Rational representation for series, automorphisms, Blaschke products and
/// compositions of those; nullopt never occurs for the current variants but
/// is kept in the signature so callers handle non-rational symbols.
inline std::optional<RationalForm> rational_form(const AnalyticMap& m)
{
    return std::visit(
        [](const auto& v) -> std::optional<RationalForm> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PowerSeries>)
                return RationalForm{{v.coefficients().begin(), v.coefficients().end()}, {1.0}};
            else if constexpr (std::is_same_v<T, DiskAutomorphism>)
                return RationalForm{{v.lambda * v.a, -v.lambda}, {1.0, -std::conj(v.a)}};
            else if constexpr (std::is_same_v<T, BlaschkeProduct>)
            {
                RationalForm r{{v.lambda}, {1.0}};
                for (const complex& a : v.zeros)
                {
                    if (a == complex{})
                    {
                        const complex z[] = {0.0, 1.0};
                        r.numerator = poly::multiply(r.numerator, z);
                    }
                    else
                    {
                        const complex num[] = {a, -1.0};
                        const complex den[] = {1.0, -std::conj(a)};
                        r.numerator = poly::multiply(r.numerator, num);
                        r.denominator = poly::multiply(r.denominator, den);
                    }
                }
                return r;
            }
            else
            {
                auto outer = rational_form(*v.outer);
                auto inner = rational_form(*v.inner);
                if (!outer || !inner)
                    return std::nullopt;
                // P(N/D)/Q(N/D) = [sum p_k N^k D^{d-k}] / [sum q_k N^k D^{d-k}]
                const int d = outer->degree();
                auto homogenize = [&](const poly::Coefficients& c) {
                    poly::Coefficients acc{};
                    for (std::size_t k = 0; k < c.size(); ++k)
                    {
                        auto term = poly::multiply(poly::power(inner->numerator, static_cast<int>(k)),
                                                   poly::power(inner->denominator, d - static_cast<int>(k)));
                        acc = poly::add(acc, poly::scale(term, c[k]));
                    }
                    return acc;
                };
                return RationalForm{homogenize(outer->numerator), homogenize(outer->denominator)};
            }
        },
        m.variant());
}

}  // namespace besov
