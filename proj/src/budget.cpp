#include "locmod/budget.hpp"

#include <cstdlib>
#include <string>

namespace locmod {

Budgets& global_budgets() {
  static Budgets budgets = [] {
    Budgets b;
    if (const char* env = std::getenv(kBudgetEnvVar)) {
      try {
        const unsigned long long v = std::stoull(env);
        if (v > 0) {
          b.groebner_s_pairs = v;
          b.groebner_terms = v;
          b.enumeration = v;
        }
      } catch (const std::exception&) {
        // Malformed value: keep compiled-in defaults.
      }
    }
    return b;
  }();
  return budgets;
}

void set_all_budgets(std::uint64_t v) {
  Budgets& b = global_budgets();
  b.groebner_s_pairs = v;
  b.groebner_terms = v;
  b.enumeration = v;
}

}  // namespace locmod
