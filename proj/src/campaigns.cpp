#include "locmod/campaigns.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "locmod/errors.hpp"

namespace locmod {

VerificationReport run_campaign(const std::string& campaign, std::vector<CampaignCase> cases,
                                std::uint64_t seed, bool timings, unsigned threads) {
  VerificationReport rep;
  rep.campaign = campaign;
  rep.toolchain = toolchain_stamp();
  rep.seed = seed;
  rep.budgets = global_budgets();
  rep.cases.resize(cases.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      CaseResult& slot = rep.cases[i];
      slot.name = cases[i].name;
      slot.parameters = cases[i].parameters;
      auto start = std::chrono::steady_clock::now();
      try {
        CaseOutcome out = cases[i].run();
        slot.expected = std::move(out.expected);
        slot.computed = std::move(out.computed);
        slot.source = std::move(out.source);
        slot.pass = out.pass;
      } catch (const LimitError& e) {
        slot.computed = std::string("budget exceeded: ") + e.what();
        slot.budget_exceeded = true;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
      if (timings) {
        auto stop = std::chrono::steady_clock::now();
        slot.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
      }
    }
  };

  unsigned pool = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (pool == 0) pool = 1;
  if (pool > cases.size() && !cases.empty()) pool = static_cast<unsigned>(cases.size());
  if (pool <= 1 || cases.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
    for (std::thread& w : workers) w.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  rep.sort_cases();
  return rep;
}

}  // namespace locmod
