#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "locmod/report.hpp"

namespace locmod {

// What a campaign case's runner reports back. `source` uses the CaseResult
// provenance tags.
struct CaseOutcome {
  std::string expected;
  std::string computed;
  std::string source;
  bool pass = false;
};

// A named unit of verification work. Runners must be safe to execute
// concurrently with each other (they only touch value types they own).
struct CampaignCase {
  std::string name;
  std::string parameters;
  std::function<CaseOutcome()> run;
};

// Runs the cases on a worker pool and assembles a report sorted by case name,
// so the output does not depend on scheduling. A LimitError inside a runner
// becomes a failed case with budget_exceeded set rather than propagating; any
// other exception is rethrown after the pool drains. With `timings` true each
// case records wall-clock elapsed_ms — that makes reports differ between runs,
// so it is opt-in. `threads` 0 means hardware concurrency.
VerificationReport run_campaign(const std::string& campaign, std::vector<CampaignCase> cases,
                                std::uint64_t seed, bool timings = false, unsigned threads = 0);

}  // namespace locmod
