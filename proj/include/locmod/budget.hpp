#pragma once

#include <cstdint>

namespace locmod {

// Resource budgets. Groebner computations count processed S-pairs and live
// terms per intermediate polynomial; enumerations (subspaces, flags, closure
// seeds) count generated candidates.
struct Budgets {
  std::uint64_t groebner_s_pairs = 1'000'000;
  std::uint64_t groebner_terms = 1'000'000;
  std::uint64_t enumeration = 10'000'000;
};

// Name of the environment variable that overrides every default budget with a
// single scalar. Single source of truth; the CLI's --budget flag has the same
// effect for one invocation.
inline constexpr const char* kBudgetEnvVar = "LOCMOD_BUDGET";

// Process-wide defaults: initialized from kBudgetEnvVar on first use,
// mutable afterwards (the CLI applies --budget here).
Budgets& global_budgets();

// Set every budget field to the same scalar.
void set_all_budgets(std::uint64_t value);

}  // namespace locmod
