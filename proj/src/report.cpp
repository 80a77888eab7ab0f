#include "locmod/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "locmod/errors.hpp"

namespace locmod {
namespace {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

std::string require_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ParseError(std::string("report: missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

bool require_bool(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_boolean())
    throw ParseError(std::string("report: missing boolean field '") + key + "'");
  return j.at(key).get<bool>();
}

std::uint64_t parse_u64(const std::string& text, const char* key) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("report: field '") + key + "' is not a decimal integer: " + text);
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

bool VerificationReport::any_budget_exceeded() const {
  return std::any_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.budget_exceeded; });
}

void VerificationReport::sort_cases() {
  std::sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.parameters < b.parameters;
  });
}

std::string VerificationReport::to_json() const {
  json root;
  root["schema"] = 1;
  root["campaign"] = campaign;
  root["toolchain"] = toolchain;
  root["seed"] = std::to_string(seed);
  root["budgets"] = {{"groebner_s_pairs", std::to_string(budgets.groebner_s_pairs)},
                     {"groebner_terms", std::to_string(budgets.groebner_terms)},
                     {"enumeration", std::to_string(budgets.enumeration)}};
  root["status"] = all_pass() ? "pass" : "fail";
  json arr = json::array();
  for (const CaseResult& c : cases) {
    json jc;
    jc["name"] = c.name;
    jc["parameters"] = c.parameters;
    jc["expected"] = c.expected;
    jc["computed"] = c.computed;
    jc["source"] = c.source;
    jc["pass"] = c.pass;
    jc["budget_exceeded"] = c.budget_exceeded;
    if (c.elapsed_ms) jc["elapsed_ms"] = std::to_string(*c.elapsed_ms);
    arr.push_back(std::move(jc));
  }
  root["cases"] = std::move(arr);
  return root.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: invalid JSON: ") + e.what());
  }
  if (!root.is_object() || !root.contains("schema") || !root.at("schema").is_number_integer() ||
      root.at("schema").get<int>() != 1)
    throw ParseError("report: unsupported schema (expected 1)");

  VerificationReport rep;
  rep.campaign = require_string(root, "campaign");
  rep.toolchain = require_string(root, "toolchain");
  rep.seed = parse_u64(require_string(root, "seed"), "seed");
  if (!root.contains("budgets") || !root.at("budgets").is_object())
    throw ParseError("report: missing 'budgets' object");
  const json& jb = root.at("budgets");
  rep.budgets.groebner_s_pairs = parse_u64(require_string(jb, "groebner_s_pairs"), "groebner_s_pairs");
  rep.budgets.groebner_terms = parse_u64(require_string(jb, "groebner_terms"), "groebner_terms");
  rep.budgets.enumeration = parse_u64(require_string(jb, "enumeration"), "enumeration");
  if (!root.contains("cases") || !root.at("cases").is_array())
    throw ParseError("report: missing 'cases' array");
  for (const json& jc : root.at("cases")) {
    CaseResult c;
    c.name = require_string(jc, "name");
    c.parameters = require_string(jc, "parameters");
    c.expected = require_string(jc, "expected");
    c.computed = require_string(jc, "computed");
    c.source = require_string(jc, "source");
    c.pass = require_bool(jc, "pass");
    c.budget_exceeded = require_bool(jc, "budget_exceeded");
    if (jc.contains("elapsed_ms"))
      c.elapsed_ms = static_cast<std::int64_t>(parse_u64(require_string(jc, "elapsed_ms"), "elapsed_ms"));
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "campaign: " << campaign << "\n";
  std::size_t passed = 0;
  for (const CaseResult& c : cases) {
    out << (c.pass ? "PASS" : (c.budget_exceeded ? "BUDGET" : "FAIL")) << "  " << c.name;
    if (!c.parameters.empty()) out << " (" << c.parameters << ")";
    out << ": expected=" << c.expected << " computed=" << c.computed << " [" << c.source << "]";
    if (c.elapsed_ms) out << " " << *c.elapsed_ms << "ms";
    out << "\n";
    if (c.pass) ++passed;
  }
  out << passed << "/" << cases.size() << " cases passed\n";
  return out.str();
}

std::string toolchain_stamp() {
  std::ostringstream out;
#if defined(__clang__)
  out << "clang " << __clang_major__ << "." << __clang_minor__ << "." << __clang_patchlevel__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << "." << __GNUC_MINOR__ << "." << __GNUC_PATCHLEVEL__;
#else
  out << "unknown-compiler";
#endif
  out << " c++" << (__cplusplus / 100 % 100);
  return out.str();
}

}  // namespace locmod
