#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "besov/search.hpp"

using besov::complex;
using besov::NormKind;
using besov::SearchProblem;
using besov::SearchSpace;

namespace {

SearchProblem blaschke_problem(int degree, double p, NormKind kind)
{
    return {SearchSpace::blaschke_fixing_zero(degree), p, kind, besov::default_basis()};
}

void expect_trace_monotone(const besov::RestartResult& r)
{
    ASSERT_FALSE(r.trace.empty());
    for (std::size_t i = 1; i < r.trace.size(); ++i)
        EXPECT_LE(r.trace[i], r.trace[i - 1]) << i;
    EXPECT_EQ(r.trace.back(), *std::min_element(r.trace.begin(), r.trace.end()));
    EXPECT_EQ(r.best_defect, r.trace.back());
}

}  // namespace

TEST(NelderMead, MinimizesAShiftedQuadratic)
{
    auto f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 0.5) * (x[1] + 0.5) + 0.25;
    };
    besov::NelderMeadOptions options;
    options.budget = 2000;
    const auto r = besov::nelder_mead(f, {0.0, 0.0}, options);
    EXPECT_NEAR(r.x[0], 1.0, 1e-5);
    EXPECT_NEAR(r.x[1], -0.5, 1e-5);
    EXPECT_NEAR(r.value, 0.25, 1e-10);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.evaluations, options.budget);
}

TEST(NelderMead, RespectsTheBudget)
{
    int calls = 0;
    auto f = [&](std::span<const double> x) {
        ++calls;
        return std::cos(3.0 * x[0]) + x[1] * x[1] + std::sin(x[2]);
    };
    besov::NelderMeadOptions options;
    options.budget = 50;
    const auto r = besov::nelder_mead(f, {0.1, 0.2, 0.3}, options);
    EXPECT_EQ(r.evaluations, calls);
    EXPECT_LE(calls, 50);
}

TEST(SearchSpace, Dimensions)
{
    EXPECT_EQ(SearchSpace::blaschke_fixing_zero(1).dimension(), 1u);
    EXPECT_EQ(SearchSpace::blaschke_fixing_zero(3).dimension(), 5u);
    EXPECT_EQ(SearchSpace::series_fixing_zero(4).dimension(), 8u);
    EXPECT_THROW(SearchSpace::blaschke_fixing_zero(0), std::invalid_argument);
    EXPECT_THROW(SearchSpace::series_fixing_zero(0), std::invalid_argument);
}

TEST(SearchSpace, DecodedMapsFixZero)
{
    std::mt19937_64 rng(5);
    for (const auto& space : {SearchSpace::blaschke_fixing_zero(3), SearchSpace::series_fixing_zero(3)})
        for (int i = 0; i < 20; ++i)
        {
            const auto x = space.random_start(rng);
            EXPECT_EQ(space.decode(x).map.value(0.0), complex(0.0)) << space.name();
        }
}

TEST(SearchSpace, BlaschkeDecodeIsASelfMapWithCappedZeros)
{
    const auto space = SearchSpace::blaschke_fixing_zero(2);
    const std::vector<double> far{0.3, 50.0, 1.0};
    const auto d = space.decode(far);
    EXPECT_EQ(d.penalty, 0.0);
    EXPECT_TRUE(d.proximity_warning);
    EXPECT_TRUE(besov::validate_self_map(d.map, 256).valid);
    // Zero radius is at most the cap, so phi vanishes at 0.999 e^{i}.
    EXPECT_NEAR(std::abs(d.map.value(std::polar(besov::config::search_radius_cap, 1.0))), 0.0, 1e-12);
    const std::vector<double> near{0.3, 0.0, 1.0};
    EXPECT_FALSE(space.decode(near).proximity_warning);
    EXPECT_THROW(space.decode(std::vector<double>{0.0}), std::invalid_argument);
    EXPECT_THROW(space.decode(std::vector<double>{0.0, NAN, 0.0}), std::invalid_argument);
}

TEST(SearchSpace, SeriesPenaltyCountsBoundaryExcess)
{
    const auto space = SearchSpace::series_fixing_zero(1);
    EXPECT_EQ(space.decode(std::vector<double>{0.8, 0.0}).penalty, 0.0);
    EXPECT_NEAR(space.decode(std::vector<double>{1.2, 0.0}).penalty, 0.2 * 1e6, 1e-6);
}

TEST(Objective, RotationsHaveZeroDefect)
{
    const auto space = SearchSpace::blaschke_fixing_zero(1);
    for (double theta : {0.0, 1.0, -2.5})
        EXPECT_LE(besov::objective(space, std::vector<double>{theta}, 1.5, NormKind::besov_norm()),
                  besov::config::search_rotation_tol);
}

TEST(Objective, MatchesIsometryDefectPlusPenalty)
{
    const auto space = SearchSpace::series_fixing_zero(2);
    const std::vector<double> x{0.5, 0.1, 0.2, -0.1};
    const auto decoded = space.decode(x);
    const auto rule = besov::build_rule(1.0, 32, 64);
    const auto basis = besov::default_basis();
    const double direct =
        besov::isometry_defect(decoded.map, 3.0, NormKind::besov_norm(), basis, rule).max_defect;
    EXPECT_NEAR(besov::objective(space, x, 3.0, NormKind::besov_norm()), direct + decoded.penalty, 1e-14);
    const std::vector<double> bad{1.5, 0.0, 0.0, 0.0};
    EXPECT_GT(besov::objective(space, bad, 3.0, NormKind::besov_norm()), 1e5);
}

TEST(Minimize, DegreeOneFindsARotation)
{
    const auto r = besov::minimize(blaschke_problem(1, 1.5, NormKind::besov_norm()), 2, 7, 200);
    EXPECT_LE(r.best_defect, 1e-8);
    EXPECT_LE(r.refined_defect, 1e-8);
    EXPECT_EQ(r.restarts.size(), 2u);
}

TEST(Minimize, PreconditionErrors)
{
    const auto problem = blaschke_problem(1, 1.5, NormKind::besov_norm());
    EXPECT_THROW(besov::minimize(problem, 0, 1, 200), std::invalid_argument);
    EXPECT_THROW(besov::minimize(problem, 1, 1, 199), std::invalid_argument);
    EXPECT_THROW(besov::SearchObjective({SearchSpace::blaschke_fixing_zero(1), 1.5, NormKind::besov_norm(), {}}),
                 std::invalid_argument);
}

TEST(Minimize, DeterministicGivenTheSeed)
{
    const auto problem = blaschke_problem(2, 3.0, NormKind::besov_norm());
    const auto a = besov::minimize(problem, 2, 42, 200);
    const auto b = besov::minimize(problem, 2, 42, 200);
    ASSERT_EQ(a.restarts.size(), b.restarts.size());
    for (std::size_t i = 0; i < a.restarts.size(); ++i)
    {
        EXPECT_EQ(a.restarts[i].start, b.restarts[i].start);
        EXPECT_EQ(a.restarts[i].trace, b.restarts[i].trace);
        EXPECT_EQ(a.restarts[i].best_params, b.restarts[i].best_params);
    }
    EXPECT_EQ(a.best_defect, b.best_defect);
    EXPECT_EQ(a.refined_defect, b.refined_defect);
    const auto c = besov::minimize(problem, 2, 43, 200);
    EXPECT_NE(a.restarts[0].start, c.restarts[0].start);
}

TEST(Minimize, TracesAreNonIncreasingAndBestIsTheMinimum)
{
    const auto r = besov::minimize(blaschke_problem(2, 1.5, NormKind::besov_norm()), 3, 11, 200);
    double lowest = r.restarts.front().best_defect;
    for (const auto& restart : r.restarts)
    {
        expect_trace_monotone(restart);
        EXPECT_LE(restart.evaluations, 200);
        lowest = std::min(lowest, restart.best_defect);
    }
    EXPECT_EQ(r.best_defect, lowest);
    const auto& best = r.restarts[static_cast<std::size_t>(r.best_restart)];
    for (int i = 0; i < r.best_restart; ++i)
        EXPECT_GT(r.restarts[static_cast<std::size_t>(i)].best_defect, best.best_defect);
}

TEST(Minimize, SeedStreamsDifferPerRestart)
{
    EXPECT_NE(besov::detail::mix_seed(1, 0), besov::detail::mix_seed(1, 1));
    EXPECT_NE(besov::detail::mix_seed(1, 0), besov::detail::mix_seed(2, 0));
}

// Frozen from a first run; the search must never report a smaller defect.
struct FloorCase
{
    double p;
    NormKind kind;
    double floor;
};

class SearchFloor : public ::testing::TestWithParam<int>
{
};

TEST_P(SearchFloor, DegreeTwoStaysAboveTheFrozenFloor)
{
    namespace cfg = besov::config;
    const FloorCase cases[] = {
        {1.5, NormKind::besov_norm(), cfg::search_floor_p15_besov},
        {3.0, NormKind::besov_norm(), cfg::search_floor_p3_besov},
        {3.0, NormKind::equivalent(2), cfg::search_floor_p3_equiv2},
    };
    const auto& c = cases[GetParam()];
    const auto r =
        besov::minimize(blaschke_problem(2, c.p, c.kind), cfg::search_restarts, cfg::default_seed, cfg::search_budget);
    EXPECT_GE(r.best_defect, c.floor * (1.0 - cfg::search_floor_rel_tol));
    EXPECT_GT(r.refined_defect, cfg::search_separation_floor);
}

INSTANTIATE_TEST_SUITE_P(Frozen, SearchFloor, ::testing::Values(0, 1, 2));
