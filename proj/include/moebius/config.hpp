#pragma once

#include <cstdint>

namespace moebius {

// Process-wide resource limits. Defaults can be overridden by the
// environment variables MOEBIUS_HALF_EDGE_BUDGET, MOEBIUS_MU_BUDGET and
// MOEBIUS_ORACLE_DEGREE_BUDGET, and by explicit setters (CLI flags).
struct Budgets {
  int half_edges = 16;
  std::int64_t mu_assignments = 1048576;  // 4^10
  int oracle_degree = 8;
};

Budgets budgets();
void set_budgets(const Budgets& b);

}  // namespace moebius
