#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "besov/norms.hpp"

using besov::AnalyticMap;
using besov::complex;
using besov::NormKind;

namespace {

const double exponents[] = {1.25, 1.5, 3.0, 5.0};

double beta(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

/// Default-size rules, shared by the tests in this file.
const besov::RuleCache& rules()
{
    static const besov::RuleCache cache;
    return cache;
}

const besov::RuleCache& coarse()
{
    static const besov::RuleCache cache({64, 256});
    return cache;
}

}  // namespace

TEST(NormKind, ValidatesParameters)
{
    EXPECT_THROW(NormKind::bergman(-1.0), std::invalid_argument);
    EXPECT_THROW(NormKind::equivalent(1), std::invalid_argument);
    EXPECT_EQ(NormKind::equivalent(3).weight_exponent(2.0), 4.0);
    EXPECT_EQ(NormKind::besov_norm().weight_exponent(1.5), -0.5);
    EXPECT_EQ(NormKind::bergman(0.7).weight_exponent(9.0), 0.7);
}

TEST(RuleCache, BuildsEachWeightOnce)
{
    const besov::RuleCache cache({16, 32});
    const auto& a = cache.rule(0.5);
    const auto& b = cache.rule(0.5);
    EXPECT_EQ(&a, &b);
    EXPECT_EQ(a.alpha(), 0.5);
}

TEST(BesovSeminorm, IdentityHasClosedForm)
{
    for (double p : exponents)
        EXPECT_NEAR(besov::besov_seminorm(AnalyticMap::identity(), p, coarse().rule(p - 2.0)),
                    std::pow(1.0 / (p - 1.0), 1.0 / p), 1e-13)
            << p;
}

TEST(BesovSeminorm, ConstantIsZero)
{
    EXPECT_EQ(besov::besov_seminorm(AnalyticMap::constant(complex(2.0, 1.0)), 3.0, coarse().rule(1.0)), 0.0);
}

TEST(BesovSeminorm, MonomialsMatchBetaIntegrals)
{
    for (double p : exponents)
        for (int m = 1; m <= 3; ++m)
        {
            const double s = std::pow(besov::besov_seminorm(AnalyticMap::monomial(m), p, rules().rule(p - 2.0)), p);
            const double oracle = std::pow(m, p) * beta((m - 1) * p / 2.0 + 1.0, p - 1.0);
            EXPECT_NEAR(s / oracle, 1.0, 1e-8) << "m=" << m << " p=" << p;
        }
}

TEST(BesovSeminorm, RejectsMismatchedRuleAndBadExponent)
{
    EXPECT_THROW(besov::besov_seminorm(AnalyticMap::identity(), 3.0, coarse().rule(0.0)), std::invalid_argument);
    EXPECT_THROW(besov::besov_seminorm(AnalyticMap::identity(), 1.0, coarse().rule(-1.0 + 0.5)),
                 std::invalid_argument);
    const auto sub = besov::build_subdisk_rule(0.5, 16, 32);
    EXPECT_THROW(besov::besov_seminorm(AnalyticMap::identity(), 2.0, sub), std::invalid_argument);
}

TEST(BesovNorm, SpecExamples)
{
    for (double p : exponents)
        EXPECT_NEAR(besov::besov_norm(AnalyticMap::identity(), p, coarse().rule(p - 2.0)),
                    std::pow(1.0 / (p - 1.0), 1.0 / p), 1e-13);
    EXPECT_NEAR(besov::besov_norm(AnalyticMap::constant(complex(0.6, 0.8)), 1.5, coarse().rule(-0.5)), 1.0, 1e-15);
    EXPECT_NEAR(besov::besov_norm(AnalyticMap::series({1.0, 1.0}), 3.0, coarse().rule(1.0)),
                1.0 + std::pow(0.5, 1.0 / 3.0), 1e-13);
}

TEST(BergmanNorm, SpecExamples)
{
    for (double a : {-0.5, 0.0, 2.0})
        for (double p : {1.0, 2.5})
            EXPECT_NEAR(besov::bergman_norm(AnalyticMap::constant(1.0), p, a, coarse().rule(a)),
                        std::pow(1.0 / (a + 1.0), 1.0 / p), 1e-13);
    EXPECT_NEAR(besov::bergman_norm(AnalyticMap::identity(), 2.0, 0.0, coarse().rule(0.0)), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(besov::bergman_norm(AnalyticMap::constant(0.0), 2.0, 0.0, coarse().rule(0.0)), 0.0);
    EXPECT_THROW(besov::bergman_norm(AnalyticMap::identity(), 0.5, 0.0, coarse().rule(0.0)), std::invalid_argument);
}

TEST(EquivalentNorm, SpecExamples)
{
    EXPECT_NEAR(besov::equivalent_norm(AnalyticMap::identity(), 1.5, 2, coarse().rule(1.0)), 1.0, 1e-15);
    EXPECT_NEAR(besov::equivalent_norm(AnalyticMap::monomial(2), 3.0, 2, coarse().rule(4.0)),
                2.0 * std::pow(0.2, 1.0 / 3.0), 1e-13);
    for (int n : {2, 3, 4})
        for (int k = 0; k < n; ++k)
        {
            const double p = 1.5;
            const auto f = AnalyticMap::monomial(k, 1.0 / besov::factorial(k));
            EXPECT_NEAR(besov::equivalent_norm(f, p, n, coarse().rule(n * p - 2.0)), 1.0, 1e-14)
                << "n=" << n << " k=" << k;
        }
}

TEST(EquivalentNorm, CompositeMapsUseLocalJets)
{
    // (z^3) o rotation = e^{3 i t} z^3; its second derivative is 6 e^{3it} z.
    const double p = 3.0;
    const auto f = AnalyticMap::compose(AnalyticMap::monomial(3), AnalyticMap::rotation(0.4));
    const double got = besov::equivalent_norm(f, p, 2, coarse().rule(4.0));
    const double plain = besov::equivalent_norm(AnalyticMap::monomial(3), p, 2, coarse().rule(4.0));
    EXPECT_NEAR(got / plain, 1.0, 1e-12);
    const double fine = besov::equivalent_norm(f, p, 2, rules().rule(4.0));
    const double expect = std::pow(std::pow(6.0, p) * beta(p / 2.0 + 1.0, 5.0), 1.0 / p);
    EXPECT_NEAR(fine / expect, 1.0, 1e-8);
}

TEST(Norms, SeminormEqualsBergmanNormOfDerivative)
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double p : exponents)
        for (int i = 0; i < 10; ++i)
        {
            std::vector<complex> c(6);
            for (auto& x : c)
                x = {u(rng), u(rng)};
            const besov::PowerSeries f(c);
            const auto& rule = coarse().rule(p - 2.0);
            const double s = besov::besov_seminorm(AnalyticMap(f), p, rule);
            const double b = besov::bergman_norm(AnalyticMap(f.derivative()), p, p - 2.0, rule);
            EXPECT_NEAR(s / b, 1.0, 1e-12);
        }
}

TEST(Norms, RotationInvarianceOfEveryKind)
{
    const NormKind kinds[] = {NormKind::besov_seminorm(), NormKind::besov_norm(), NormKind::bergman(0.5),
                              NormKind::equivalent(2)};
    for (const auto& kind : kinds)
        for (double p : {1.5, 3.0})
            for (int m = 1; m <= 3; ++m)
            {
                const auto f = AnalyticMap::monomial(m);
                const auto g = AnalyticMap::compose(f, AnalyticMap::rotation(1.3));
                const double a = besov::norm(f, p, kind, coarse());
                const double b = besov::norm(g, p, kind, coarse());
                EXPECT_NEAR(b / a, 1.0, 1e-10) << kind.name() << " p=" << p << " m=" << m;
            }
}

TEST(Norms, HomogeneousUnderScaling)
{
    const complex c{-1.7, 0.4};
    const std::vector<complex> coeffs{0.3, 0.1, -0.5, complex(0.0, 0.2)};
    std::vector<complex> scaled = coeffs;
    for (auto& x : scaled)
        x *= c;
    const auto f = AnalyticMap::series(coeffs);
    const auto g = AnalyticMap::series(scaled);
    const NormKind kinds[] = {NormKind::besov_seminorm(), NormKind::besov_norm(), NormKind::bergman(0.5),
                              NormKind::equivalent(2)};
    for (const auto& kind : kinds)
    {
        const double a = besov::norm(f, 1.5, kind, coarse());
        const double b = besov::norm(g, 1.5, kind, coarse());
        EXPECT_NEAR(b / (std::abs(c) * a), 1.0, 1e-13) << kind.name();
    }
}
