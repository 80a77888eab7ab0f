#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locmod/budget.hpp"

namespace locmod {

// One verified statement: an expected value (with the kind of evidence backing
// it), the value the library computed, and the comparison outcome.
//
// `source` tags where the expected value comes from; the allowed tags are
//   "closed-form"   evaluated from an explicit formula
//   "identity"      two internal computations that must agree
//   "cross-check"   independent algorithm for the same quantity
//   "enumeration"   exhaustive count
//   "pinned"        frozen literal value
struct CaseResult {
  std::string name;        // unique within a report; reports sort by it
  std::string parameters;  // human-readable, e.g. "r=3, e=2, field=QQ"
  std::string expected;
  std::string computed;
  std::string source;
  bool pass = false;
  bool budget_exceeded = false;            // a resource limit stopped the case
  std::optional<std::int64_t> elapsed_ms;  // set only when timings requested
};

// A campaign's worth of cases plus enough context to reproduce the run.
// Serialization is canonical: keys sorted, numbers emitted as decimal strings
// (so arbitrarily large values survive any JSON reader), cases sorted by name.
// Two runs with the same inputs, seed and budgets produce identical bytes as
// long as timings are off.
struct VerificationReport {
  std::string campaign;
  std::string toolchain;  // compiler/version stamp, see toolchain_stamp()
  std::uint64_t seed = 0;
  Budgets budgets;
  std::vector<CaseResult> cases;

  bool all_pass() const;
  bool any_budget_exceeded() const;
  void sort_cases();  // by name, ties broken by parameters

  // Canonical JSON (schema 1). Pretty-printed, trailing newline.
  std::string to_json() const;
  // Inverse of to_json; throws ParseError on malformed or wrong-schema input.
  static VerificationReport from_json(const std::string& text);

  // Plain-text table: one PASS/FAIL line per case plus a summary line.
  std::string to_text() const;
};

// Compiler + standard stamp baked in at build time, e.g. "gcc 13.2.0 c++20".
std::string toolchain_stamp();

}  // namespace locmod
