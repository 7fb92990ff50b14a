#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace besov {

using complex = std::complex<double>;

//-- truncated series arithmetic ----------------------------------------------
//
// Coefficient vectors c_0..c_N. Every routine returns exactly order+1
// coefficients; missing input coefficients are treated as zero.
//
namespace series {

inline std::vector<complex> truncate(std::span<const complex> a, int order)
{
    std::vector<complex> out(static_cast<std::size_t>(order) + 1, complex{});
    for (std::size_t k = 0; k < a.size() && k < out.size(); ++k)
        out[k] = a[k];
    return out;
}

inline std::vector<complex> multiply(std::span<const complex> a,
                                     std::span<const complex> b, int order)
{
    std::vector<complex> out(static_cast<std::size_t>(order) + 1, complex{});
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < a.size() && i < n; ++i)
    {
        if (a[i] == complex{})
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Series of 1/a. Requires a[0] != 0.
inline std::vector<complex> reciprocal(std::span<const complex> a, int order)
{
    if (a.empty() || a[0] == complex{})
        throw std::domain_error("series::reciprocal: zero constant term");
    const std::size_t n = static_cast<std::size_t>(order) + 1;
    std::vector<complex> out(n, complex{});
    out[0] = 1.0 / a[0];
    for (std::size_t k = 1; k < n; ++k)
    {
        complex acc{};
        for (std::size_t j = 1; j <= k && j < a.size(); ++j)
            acc += a[j] * out[k - j];
        out[k] = -acc * out[0];
    }
    return out;
}

inline std::vector<complex> divide(std::span<const complex> num,
                                   std::span<const complex> den, int order)
{
    auto inv = reciprocal(den, order);
    return multiply(num, inv, order);
}

/// Composition of jets: outer holds the expansion of g about inner[0], so the
/// result is sum_k outer[k] (inner - inner[0])^k through the given order.
inline std::vector<complex> compose(std::span<const complex> outer,
                                    std::span<const complex> inner, int order)
{
    std::vector<complex> h = truncate(inner, order);
    h[0] = complex{};
    const std::size_t top = std::min(outer.size(), static_cast<std::size_t>(order) + 1);
    std::vector<complex> acc(static_cast<std::size_t>(order) + 1, complex{});
    if (top == 0)
        return acc;
    acc[0] = outer[top - 1];
    for (std::size_t k = top - 1; k-- > 0;)
    {
        acc = multiply(acc, h, order);
        acc[0] += outer[k];
    }
    return acc;
}

/// Taylor coefficients of the polynomial sum_j a_j z^j about z0, by repeated
/// synthetic division.
inline std::vector<complex> recenter(std::span<const complex> a, complex z0, int order)
{
    std::vector<complex> work(a.begin(), a.end());
    std::vector<complex> out(static_cast<std::size_t>(order) + 1, complex{});
    for (std::size_t k = 0; k < out.size() && !work.empty(); ++k)
    {
        // Horner pass: remainder is the value, work becomes the quotient.
        complex carry{};
        for (std::size_t j = work.size(); j-- > 0;)
        {
            carry = carry * z0 + work[j];
            work[j] = carry;
        }
        out[k] = work[0];
        work.erase(work.begin());
    }
    return out;
}

}  // namespace series

//-- PowerSeries ---------------------------------------------------------------

/// Finite Taylor polynomial c_0 + c_1 z + ... + c_N z^N.
class PowerSeries
{
  public:
    explicit PowerSeries(std::vector<complex> coefficients)
        : coeffs_(std::move(coefficients))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: empty coefficient list");
    }

    static PowerSeries monomial(int k, complex c = 1.0)
    {
        std::vector<complex> co(static_cast<std::size_t>(k) + 1, complex{});
        co.back() = c;
        return PowerSeries(std::move(co));
    }

    static PowerSeries identity() { return PowerSeries({0.0, 1.0}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::span<const complex> coefficients() const { return coeffs_; }

    complex coefficient(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : complex{};
    }

    // Horner, highest degree first.
    complex value(complex z) const
    {
        complex acc{};
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * z + coeffs_[k];
        return acc;
    }

    complex derivative_value(complex z) const
    {
        complex acc{};
        for (std::size_t k = coeffs_.size(); k-- > 1;)
            acc = acc * z + static_cast<double>(k) * coeffs_[k];
        return acc;
    }

    PowerSeries derivative() const
    {
        if (coeffs_.size() == 1)
            return PowerSeries({0.0});
        std::vector<complex> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return PowerSeries(std::move(d));
    }

    PowerSeries scaled(complex c) const
    {
        auto co = coeffs_;
        for (auto& x : co)
            x *= c;
        return PowerSeries(std::move(co));
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  private:
    std::vector<complex> coeffs_;
};

}  // namespace besov
