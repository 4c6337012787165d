#include "moebius/config.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include "moebius/errors.hpp"
#include "moebius/parallel.hpp"

namespace moebius {

namespace {

std::int64_t env_or(const char* name, std::int64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0)
    throw UsageError(std::string("environment variable ") + name +
                     " must be a positive integer");
  return v;
}

std::mutex budget_mutex;
bool budgets_loaded = false;
Budgets current;

int threads = 0;

}  // namespace

Budgets budgets() {
  std::lock_guard lock(budget_mutex);
  if (!budgets_loaded) {
    current.half_edges = static_cast<int>(
        env_or("MOEBIUS_HALF_EDGE_BUDGET", current.half_edges));
    current.mu_assignments = env_or("MOEBIUS_MU_BUDGET", current.mu_assignments);
    current.oracle_degree = static_cast<int>(
        env_or("MOEBIUS_ORACLE_DEGREE_BUDGET", current.oracle_degree));
    budgets_loaded = true;
  }
  return current;
}

void set_budgets(const Budgets& b) {
  std::lock_guard lock(budget_mutex);
  current = b;
  budgets_loaded = true;
}

int thread_count() {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { threads = n; }

}  // namespace moebius
