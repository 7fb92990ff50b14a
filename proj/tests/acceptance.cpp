// Acceptance battery at the default configuration: one line per criterion.

#include <iostream>

#include "besov/acceptance.hpp"

int main()
{
    const auto report = besov::run_acceptance(besov::AcceptanceConfig{});
    std::cout << besov::to_table(report);
    std::cout << (report.all_pass() ? "all criteria passed" : "some criteria FAILED") << " in "
              << besov::fmt_seconds(report.seconds) << "\n";
    return report.all_pass() ? 0 : 1;
}
