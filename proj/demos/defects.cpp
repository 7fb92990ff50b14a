// Isometry defects of a few symbols under the B_p norm, p = 1.5 and p = 3.

#include <cstdio>

#include "besov/besov.hpp"

int main()
{
    using namespace besov;
    struct Named
    {
        const char* name;
        AnalyticMap phi;
    };
    const Named symbols[] = {
        {"rotation(0.7)", AnalyticMap::rotation(0.7)},
        {"automorphism(1, 0.5)", AnalyticMap::automorphism(1.0, 0.5)},
        {"z^2", AnalyticMap::monomial(2)},
        {"z/2", AnalyticMap::monomial(1, 0.5)},
        {"blaschke(0, 0.4)", AnalyticMap::blaschke(1.0, {0.0, 0.4})},
    };
    const RuleCache rules({64, 256});
    const auto basis = default_basis();
    std::printf("%-22s %12s %12s\n", "symbol", "p = 1.5", "p = 3");
    for (const auto& s : symbols)
    {
        const double d15 = isometry_defect(s.phi, 1.5, NormKind::besov_norm(), basis, rules).max_defect;
        const double d3 = isometry_defect(s.phi, 3.0, NormKind::besov_norm(), basis, rules).max_defect;
        std::printf("%-22s %12.4e %12.4e\n", s.name, d15, d3);
    }
}
