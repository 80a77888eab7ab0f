#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locmod/budget.hpp"
#include "locmod/campaigns.hpp"
#include "locmod/errors.hpp"
#include "locmod/exact_matrix.hpp"
#include "locmod/field.hpp"
#include "locmod/ideal.hpp"
#include "locmod/lattice.hpp"
#include "locmod/matrix_ideals.hpp"
#include "locmod/multiplicity.hpp"
#include "locmod/orbits.hpp"
#include "locmod/partition.hpp"
#include "locmod/polynomial.hpp"
#include "locmod/report.hpp"

namespace {

using namespace locmod;
using nlohmann::json;  // std::map-backed: keys serialize sorted, so output is canonical

constexpr std::uint64_t kDefaultSeed = 20260815;

// ---------------------------------------------------------------- parsing

std::vector<int> parse_int_list(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' '; }),
             body.end());
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not an integer list entry: '" + item + "'");
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_int_list(text)); }

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ" || text == "rationals") return Field::rationals();
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
    return Field::prime(static_cast<std::uint32_t>(std::stoul(text)));
  return Field::from_string(text);
}

// Eigenvalue data "3:2,-1:1" -> {value 3 multiplicity 2, value -1 multiplicity 1};
// values may be rational literals like 1/2.
std::vector<EigenvalueDatum> parse_eigenvalues(const std::string& text) {
  std::vector<EigenvalueDatum> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected value:multiplicity, got '" + item + "'");
    const std::string value = item.substr(0, colon);
    const std::string mult = item.substr(colon + 1);
    try {
      Rat v;
      const auto slash = value.find('/');
      if (slash == std::string::npos)
        v = Rat(Int(value));
      else
        v = Rat(Int(value.substr(0, slash)), Int(value.substr(slash + 1)));
      out.push_back({v, std::stoi(mult)});
    } catch (const std::exception&) {
      throw ParseError("bad eigenvalue entry '" + item + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------- rendering

json partition_json(const Partition& p) {
  json a = json::array();
  for (int q : p.parts()) a.push_back(q);
  return a;
}

std::string partition_list_string(const std::vector<Partition>& list) {
  std::string out = "[";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) out += ",";
    out += list[i].to_string();
  }
  return out + "]";
}

// Coefficient vector (index = exponent) as a polynomial in q, highest term first.
std::string q_polynomial_string(const std::vector<long long>& coeffs) {
  std::string out;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    const long long c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const long long mag = c > 0 ? c : -c;
    std::string term;
    if (mag != 1 || k == 0) term += std::to_string(mag);
    if (k > 0) {
      if (!term.empty()) term += "*";
      term += k == 1 ? "q" : "q^" + std::to_string(k);
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string tally_string(const std::map<Partition, long long>& tally) {
  // descending lexicographic keys: a linear extension of dominance-descending
  std::string out = "{";
  bool first = true;
  for (auto it = tally.rbegin(); it != tally.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += it->first.to_string() + ":" + std::to_string(it->second);
  }
  return out + "}";
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- common options

struct CommonOpts {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_flag("--json", c.json, "emit JSON instead of text");
  cmd->add_flag("--timings", c.timings,
                "record wall-clock times (output is no longer byte-reproducible)");
  cmd->add_option("--seed", c.seed, "seed recorded in reports for sampled properties");
  cmd->add_option("--budget", c.budget, "override every resource budget with this scalar");
}

void apply_budget(const CommonOpts& c) {
  if (c.budget != 0) set_all_budgets(c.budget);
}

int finish_report(VerificationReport rep, const CommonOpts& c) {
  rep.seed = c.seed;
  if (c.json)
    std::cout << rep.to_json();
  else
    std::cout << rep.to_text();
  if (rep.any_budget_exceeded()) return 3;
  return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------- campaign case builders

CampaignCase coinvariant_case(int r, int e, const Field& field) {
  const std::string params =
      "r=" + std::to_string(r) + ", e=" + std::to_string(e) + ", field=" + field.to_string();
  return {"coinvariant dimension r=" + std::to_string(r) + " e=" + std::to_string(e) + " " +
              field.to_string(),
          params, [r, e, field]() {
            const Ideal restricted = diagonal_restriction(naive_special_ideal(r, e, field).ideal);
            const std::uint64_t want = coinvariant_dim_formula(r, e);
            const auto got = quotient_dimension(restricted);
            CaseOutcome out;
            out.expected = std::to_string(want);
            out.computed = got ? std::to_string(*got) : "infinite";
            out.source = "closed-form";
            out.pass = got.has_value() && *got == want;
            return out;
          }};
}

CampaignCase power_operator_lemma_case(int r, const Field& field) {
  return {"power operator lemma r=" + std::to_string(r),
          "r=" + std::to_string(r) + ", field=" + field.to_string(), [r, field]() {
            // operators S^t_h with t+h = r+1 span the same ideal as sigma_1..sigma_r
            const RingPtr ring = matrix_ring(field, r);
            const PolyMatrix A = generic_matrix(ring);
            std::vector<Polynomial> gens;
            for (int t = 1; t <= r; ++t)
              for (const Polynomial& entry : S_operator(A, t, r + 1 - t).entries())
                gens.push_back(entry);
            const Ideal lhs(ring, std::move(gens));
            const Ideal rhs(ring, char_poly_coeffs(A));
            const bool equal = ideal_equal(lhs, rhs);
            CaseOutcome out;
            out.expected = "equal";
            out.computed = equal ? "equal" : "different";
            out.source = "identity";
            out.pass = equal;
            return out;
          }};
}

std::vector<CampaignCase> power_membership_cases(int r, int e, const Field& field) {
  const RingPtr ring = matrix_ring(field, r);
  const PolyMatrix A = generic_matrix(ring);
  const PolyMatrix Ae = A.pow(e);
  const Ideal sigma(ring, char_poly_coeffs(A));  // copies share the basis cache
  std::vector<CampaignCase> cases;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const std::string where =
          "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      cases.push_back({"matrix power membership r=" + std::to_string(r) + " entry " + where,
                       "r=" + std::to_string(r) + ", e=" + std::to_string(e) +
                           ", field=" + field.to_string(),
                       [entry = Ae.at(i, j), sigma]() {
                         const bool member = ideal_member(entry, sigma);
                         CaseOutcome out;
                         out.expected = "member";
                         out.computed = member ? "member" : "not a member";
                         out.source = "identity";
                         out.pass = member;
                         return out;
                       }});
    }
  return cases;
}

CampaignCase tensor_kostka_case(int d, const Partition& rvec) {
  return {"tensor vs kostka d=" + std::to_string(d) + " rvec=" + rvec.to_string(),
          "d=" + std::to_string(d) + ", rvec=" + rvec.to_string(), [d, rvec]() {
            const VerificationReport sub = verify_tensor_vs_kostka(d, rvec);
            std::size_t passed = 0;
            for (const CaseResult& c : sub.cases) passed += c.pass ? 1 : 0;
            CaseOutcome out;
            out.expected = std::to_string(sub.cases.size());
            out.computed = std::to_string(passed);
            out.source = "cross-check";
            out.pass = sub.all_pass();
            return out;
          }};
}

// every weakly decreasing rvec with exactly e parts in 1..d
std::vector<Partition> all_rvecs(int d, int e) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(e), 1);
  for (;;) {
    out.emplace_back(parts);
    int pos = e - 1;
    while (pos >= 0) {
      const int cap = pos == 0 ? d : parts[static_cast<std::size_t>(pos - 1)];
      if (parts[static_cast<std::size_t>(pos)] < cap) {
        ++parts[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < e; ++q) parts[static_cast<std::size_t>(q)] = 1;
        break;
      }
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

CampaignCase character_oracle_case(int r) {
  return {"character vs kostka r=" + std::to_string(r), "r=" + std::to_string(r), [r]() {
            const std::vector<Partition> all = enumerate_strata(r, r, r);  // all partitions of r
            long long checked = 0, agreed = 0;
            for (const Partition& s : all)
              for (const Partition& rvec : all) {
                ++checked;
                if (character_multiplicity(s, rvec) == nearby_cycle_multiplicity(s, rvec).value)
                  ++agreed;
              }
            CaseOutcome out;
            out.expected = std::to_string(checked);
            out.computed = std::to_string(agreed);
            out.source = "cross-check";
            out.pass = checked == agreed;
            return out;
          }};
}

CampaignCase orbit_dimension_case() {
  return {"orbit dimension identities", "r<=10, e<=5, d<=6", []() {
            long long checked = 0, good = 0;
            for (int r = 1; r <= 10; ++r)
              for (int e = 1; e <= 5; ++e)
                for (int d = 1; d <= 6; ++d) {
                  if (r > e * d) continue;
                  const long long special = special_fiber_dim(r, e, d);
                  const long long open_orbit = affine_orbit_dim(s_max(r, e), d);
                  for (const Partition& s : enumerate_strata(r, e, d)) {
                    ++checked;
                    const bool affine_vs_nilpotent =
                        affine_orbit_dim(s, d) ==
                        nilpotent_orbit_dim(s) - static_cast<long long>(r) * r +
                            static_cast<long long>(r) * d;
                    if (affine_vs_nilpotent && special == open_orbit) ++good;
                  }
                }
            CaseOutcome out;
            out.expected = std::to_string(checked);
            out.computed = std::to_string(good);
            out.source = "identity";
            out.pass = checked == good;
            return out;
          }};
}

CampaignCase shift_family_case(int e, std::uint32_t p) {
  return {"shift module family e=" + std::to_string(e) + " p=" + std::to_string(p),
          "exponents=(" + std::to_string(e) + ",1), r=" + std::to_string(e) +
              ", p=" + std::to_string(p),
          [e, p]() {
            const PiModule W = make_pi_module(Field::prime(p), {e, 1});
            const auto tally = stratify(W, e);
            std::map<Partition, long long> want;
            want[Partition({e})] = p;
            std::vector<int> next(1, e - 1);
            next.push_back(1);
            want[Partition(next)] = 1;
            CaseOutcome out;
            out.expected = tally_string(want);
            out.computed = tally_string(tally);
            out.source = "closed-form";
            out.pass = tally == want;
            return out;
          }};
}

CampaignCase homogeneous_strata_case(int r, int e, int d, std::uint32_t p) {
  const std::string tag = "r=" + std::to_string(r) + " e=" + std::to_string(e) +
                          " d=" + std::to_string(d) + " p=" + std::to_string(p);
  return {"homogeneous stratification " + tag, tag, [r, e, d, p]() {
            const auto tally = stratify(homogeneous_pi_module(Field::prime(p), e, d), r);
            const std::vector<Partition> want_keys = enumerate_strata(r, e, d);
            std::vector<Partition> got_keys;
            for (auto it = tally.rbegin(); it != tally.rend(); ++it) got_keys.push_back(it->first);

            const Partition open = s_max(r, e);
            bool open_strictly_largest = tally.count(open) != 0;
            if (open_strictly_largest) {
              const long long top = tally.at(open);
              for (const auto& [key, count] : tally)
                if (!(key == open) && count >= top) open_strictly_largest = false;
            }
            CaseOutcome out;
            out.expected = partition_list_string(want_keys);
            out.computed = partition_list_string(got_keys);
            if (!open_strictly_largest) out.computed += " (open stratum not strictly largest)";
            out.source = "cross-check";
            out.pass = got_keys == want_keys && open_strictly_largest &&
                       tally.count(s_min(r, d)) != 0;
            return out;
          }};
}

CampaignCase square_zero_count_case() {
  return {"square-zero variety count", "r=3, r1=2, r2=1, p=2", []() {
            const Field F2 = Field::prime(2);
            const AnnotatedIdeal ideal = e2_ideal(2, 1, F2);
            long long solutions = 0, jordan_side = 0;
            bool members_ok = true;
            for (int mask = 0; mask < 512; ++mask) {
              std::vector<Rat> point(9);
              ExactMatrix M(F2, 3, 3);
              for (int cell = 0; cell < 9; ++cell) {
                const int bit = (mask >> cell) & 1;
                point[static_cast<std::size_t>(cell)] = Rat(bit);
                M.set(cell / 3, cell % 3, Rat(bit));
              }
              bool vanishes = true;
              for (const AnnotatedGenerator& g : ideal.generators)
                if (!(g.poly.evaluate(point) == 0)) {
                  vanishes = false;
                  break;
                }
              const bool square_zero = M.pow(2).is_zero();
              if (vanishes) {
                ++solutions;
                if (!square_zero || M.rank() > 1) members_ok = false;
              }
              if (square_zero && dominance_leq(jordan_type_of(M), Partition({2, 1})))
                ++jordan_side;
            }
            CaseOutcome out;
            out.expected = std::to_string(jordan_side);
            out.computed = std::to_string(solutions);
            if (!members_ok) out.computed += " (a solution violates rank/nilpotency)";
            out.source = "enumeration";
            out.pass = members_ok && solutions == jordan_side;
            return out;
          }};
}

CampaignCase springer_nonempty_case(int r, std::uint32_t p) {
  return {"springer nonemptiness r=" + std::to_string(r) + " p=" + std::to_string(p),
          "r=" + std::to_string(r) + ", p=" + std::to_string(p), [r, p]() {
            const Field F = Field::prime(p);
            const std::vector<Partition> all = enumerate_strata(r, r, r);
            long long checked = 0, agreed = 0;
            for (const Partition& s : all)
              for (const Partition& rvec : all) {
                ++checked;
                const SpringerCount c = springer_fiber_count(jordan_matrix(s, F), {rvec});
                if ((c.count > 0) == dominance_leq(s, dual(rvec))) ++agreed;
              }
            CaseOutcome out;
            out.expected = std::to_string(checked);
            out.computed = std::to_string(agreed);
            out.source = "cross-check";
            out.pass = checked == agreed;
            return out;
          }};
}

std::vector<CampaignCase> verify_all_cases(bool quick) {
  std::vector<CampaignCase> cases;
  const std::vector<Field> fields = {Field::rationals(), Field::prime(503)};

  for (const auto& [r, e] :
       std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {4, 3}}) {
    if (quick && r >= 4) continue;
    for (const Field& f : fields) cases.push_back(coinvariant_case(r, e, f));
  }

  for (int r = 2; r <= (quick ? 2 : 3); ++r)
    cases.push_back(power_operator_lemma_case(r, Field::rationals()));

  for (int r = 2; r <= (quick ? 2 : 3); ++r) {
    auto member = power_membership_cases(r, r, Field::rationals());
    cases.insert(cases.end(), member.begin(), member.end());
  }

  for (int d = 1; d <= 4; ++d)
    for (int e = 1; e <= 3; ++e)
      for (const Partition& rvec : all_rvecs(d, e)) cases.push_back(tensor_kostka_case(d, rvec));

  for (int r = 1; r <= 6; ++r) cases.push_back(character_oracle_case(r));

  cases.push_back(orbit_dimension_case());

  for (int e = 3; e <= 4; ++e)
    for (std::uint32_t p : {2u, 3u}) cases.push_back(shift_family_case(e, p));

  cases.push_back(homogeneous_strata_case(2, 2, 2, 2));
  if (!quick) {
    cases.push_back(homogeneous_strata_case(3, 2, 2, 2));
    cases.push_back(homogeneous_strata_case(2, 2, 3, 2));
  }

  cases.push_back(square_zero_count_case());

  for (int r = 1; r <= 4; ++r) cases.push_back(springer_nonempty_case(r, 2));

  return cases;
}

// ---------------------------------------------------------------- subcommands

void setup_strata(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("strata", "list the stratum labels for (r, e, d)");
  auto opt = std::make_shared<CommonOpts>();
  auto r = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  auto d = std::make_shared<int>(0);
  cmd->add_option("--r", *r, "total multiplicity")->required();
  cmd->add_option("--e", *e, "maximal part")->required();
  cmd->add_option("--d", *d, "maximal number of parts")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, r, e, d]() {
    apply_budget(*opt);
    const std::vector<Partition> strata = enumerate_strata(*r, *e, *d);
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["r"] = *r;
      out["e"] = *e;
      out["d"] = *d;
      json arr = json::array();
      for (const Partition& s : strata) arr.push_back(partition_json(s));
      out["strata"] = std::move(arr);
      emit_json(out);
    } else {
      std::cout << partition_list_string(strata) << "\n";
    }
    code = 0;
  });
}

void setup_dims(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("dims", "special/generic fiber dimensions and their comparison");
  auto opt = std::make_shared<CommonOpts>();
  auto r = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  auto d = std::make_shared<int>(0);
  cmd->add_option("--r", *r)->required();
  cmd->add_option("--e", *e)->required();
  cmd->add_option("--d", *d)->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, r, e, d]() {
    apply_budget(*opt);
    const Partition open = s_max(*r, *e);
    const Partition generic_shape = r_min(*r, *e);
    const long long special = special_fiber_dim(*r, *e, *d);
    const long long generic = generic_fiber_dim(generic_shape, *d);
    const char* verdict = special == generic ? "equal" : "mismatch";
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["r"] = *r;
      out["e"] = *e;
      out["d"] = *d;
      out["s_max"] = partition_json(open);
      out["r_min"] = partition_json(generic_shape);
      out["special_fiber"] = std::to_string(special);
      out["generic_fiber"] = std::to_string(generic);
      out["verdict"] = verdict;
      emit_json(out);
    } else {
      std::cout << "s_max: " << open.to_string() << "\n"
                << "r_min: " << generic_shape.to_string() << "\n"
                << "special fiber: " << special << "\n"
                << "generic fiber: " << generic << "\n"
                << "verdict: " << verdict << "\n";
    }
    code = 0;
  });
}

void setup_kostka(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("kostka", "Kostka number for a shape and content");
  auto opt = std::make_shared<CommonOpts>();
  auto shape = std::make_shared<std::string>();
  auto content = std::make_shared<std::string>();
  cmd->add_option("--shape", *shape, "partition, e.g. [2,1]")->required();
  cmd->add_option("--content", *content, "partition, e.g. [1,1,1]")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, shape, content]() {
    apply_budget(*opt);
    const Partition sh = parse_partition(*shape);
    const Partition ct = parse_partition(*content);
    const long long k = kostka_number(sh, ct);
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["shape"] = partition_json(sh);
      out["content"] = partition_json(ct);
      out["kostka"] = std::to_string(k);
      emit_json(out);
    } else {
      std::cout << k << "\n";
    }
    code = 0;
  });
}

void setup_kostka_foulkes(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("kostka-foulkes", "charge-graded Kostka polynomial in q");
  auto opt = std::make_shared<CommonOpts>();
  auto shape = std::make_shared<std::string>();
  auto content = std::make_shared<std::string>();
  cmd->add_option("--shape", *shape)->required();
  cmd->add_option("--content", *content)->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, shape, content]() {
    apply_budget(*opt);
    const Partition sh = parse_partition(*shape);
    const Partition ct = parse_partition(*content);
    const std::vector<long long> coeffs = kostka_foulkes(sh, ct);
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["shape"] = partition_json(sh);
      out["content"] = partition_json(ct);
      json arr = json::array();
      for (long long c : coeffs) arr.push_back(std::to_string(c));
      out["coefficients"] = std::move(arr);  // index = exponent of q
      out["polynomial"] = q_polynomial_string(coeffs);
      emit_json(out);
    } else {
      std::cout << q_polynomial_string(coeffs) << "\n";
    }
    code = 0;
  });
}

void setup_emit_ideal(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("emit-ideal", "print a generator list with labels");
  auto opt = std::make_shared<CommonOpts>();
  auto kind = std::make_shared<std::string>();
  auto field_text = std::make_shared<std::string>("QQ");
  auto r = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  auto rvec = std::make_shared<std::string>();
  auto r1 = std::make_shared<int>(-1);
  auto r2 = std::make_shared<int>(-1);
  auto eig = std::make_shared<std::string>();
  cmd->add_option("--kind", *kind, "one of: naive, dcp, e2, generic")->required();
  cmd->add_option("--field", *field_text, "QQ or GF(p)");
  cmd->add_option("--r", *r);
  cmd->add_option("--e", *e);
  cmd->add_option("--rvec", *rvec, "multiplicity vector for kind=dcp");
  cmd->add_option("--r1", *r1)->description("first block size for kind=e2");
  cmd->add_option("--r2", *r2)->description("second block size for kind=e2");
  cmd->add_option("--eig", *eig, "value:multiplicity list for kind=generic, e.g. 3:2,-1:1");
  add_common(cmd, *opt);
  cmd->callback([&code, opt, kind, field_text, r, e, rvec, r1, r2, eig]() {
    apply_budget(*opt);
    const Field field = parse_field(*field_text);
    AnnotatedIdeal ideal = [&]() {
      if (*kind == "naive") {
        if (*r <= 0 || *e <= 0) throw CLI::ValidationError("emit-ideal", "naive needs --r and --e");
        return naive_special_ideal(*r, *e, field);
      }
      if (*kind == "dcp") {
        if (*r <= 0 || rvec->empty())
          throw CLI::ValidationError("emit-ideal", "dcp needs --r and --rvec");
        return dcp_special_ideal(*r, parse_partition(*rvec), field);
      }
      if (*kind == "e2") {
        if (*r1 < 0 || *r2 < 0)
          throw CLI::ValidationError("emit-ideal", "e2 needs --r1 and --r2");
        return e2_ideal(*r1, *r2, field);
      }
      if (*kind == "generic") {
        if (eig->empty()) throw CLI::ValidationError("emit-ideal", "generic needs --eig");
        return dcp_generic_ideal(parse_eigenvalues(*eig), field);
      }
      throw CLI::ValidationError("emit-ideal", "unknown kind '" + *kind + "'");
    }();
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["field"] = ideal.ring->field.to_string();
      json vars = json::array();
      for (const std::string& v : ideal.ring->vars) vars.push_back(v);
      out["variables"] = std::move(vars);
      out["generator_count"] = std::to_string(ideal.generators.size());
      json gens = json::array();
      for (const AnnotatedGenerator& g : ideal.generators)
        gens.push_back({{"label", g.label}, {"polynomial", g.poly.to_string()}});
      out["generators"] = std::move(gens);
      emit_json(out);
    } else {
      std::cout << "ring: " << ideal.ring->field.to_string() << "[";
      for (std::size_t i = 0; i < ideal.ring->vars.size(); ++i)
        std::cout << (i ? "," : "") << ideal.ring->vars[i];
      std::cout << "]\n"
                << "generators: " << ideal.generators.size() << "\n";
      for (const AnnotatedGenerator& g : ideal.generators)
        std::cout << g.label << ": " << g.poly.to_string() << "\n";
    }
    code = 0;
  });
}

void setup_verify_coinvariant(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("verify-coinvariant",
                                "quotient dimension of the restricted ideal vs the closed form");
  auto opt = std::make_shared<CommonOpts>();
  auto r = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  auto field_text = std::make_shared<std::string>("QQ");
  cmd->add_option("--r", *r)->required();
  cmd->add_option("--e", *e)->required();
  cmd->add_option("--field", *field_text, "QQ or GF(p)");
  add_common(cmd, *opt);
  cmd->callback([&code, opt, r, e, field_text]() {
    apply_budget(*opt);
    code = finish_report(
        run_campaign("verify-coinvariant", {coinvariant_case(*r, *e, parse_field(*field_text))},
                     opt->seed, opt->timings),
        *opt);
  });
}

void setup_verify_dcp_lemma(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("verify-dcp-lemma",
                                "operator ideal at full corank equals the trace-form ideal");
  auto opt = std::make_shared<CommonOpts>();
  auto r = std::make_shared<int>(0);
  auto field_text = std::make_shared<std::string>("QQ");
  cmd->add_option("--r", *r)->required();
  cmd->add_option("--field", *field_text, "QQ or GF(p)");
  add_common(cmd, *opt);
  cmd->callback([&code, opt, r, field_text]() {
    apply_budget(*opt);
    code = finish_report(
        run_campaign("verify-dcp-lemma", {power_operator_lemma_case(*r, parse_field(*field_text))},
                     opt->seed, opt->timings),
        *opt);
  });
}

void setup_verify_kostant(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("verify-kostant",
                                "entries of A^e lie in the ideal of the sigma invariants");
  auto opt = std::make_shared<CommonOpts>();
  auto r = std::make_shared<int>(0);
  auto e = std::make_shared<int>(0);
  auto field_text = std::make_shared<std::string>("QQ");
  cmd->add_option("--r", *r)->required();
  cmd->add_option("--e", *e, "power to test (defaults to r)");
  cmd->add_option("--field", *field_text, "QQ or GF(p)");
  add_common(cmd, *opt);
  cmd->callback([&code, opt, r, e, field_text]() {
    apply_budget(*opt);
    const int power = *e > 0 ? *e : *r;
    code = finish_report(run_campaign("verify-kostant",
                                      power_membership_cases(*r, power, parse_field(*field_text)),
                                      opt->seed, opt->timings),
                         *opt);
  });
}

void setup_verify_tensor_kostka(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("verify-tensor-kostka",
                                "tensor chain counts against tableau counts");
  auto opt = std::make_shared<CommonOpts>();
  auto d = std::make_shared<int>(0);
  auto rvec = std::make_shared<std::string>();
  cmd->add_option("--d", *d)->required();
  cmd->add_option("--rvec", *rvec, "multiplicity vector, e.g. [1,1,1]")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, d, rvec]() {
    apply_budget(*opt);
    code = finish_report(verify_tensor_vs_kostka(*d, parse_partition(*rvec)), *opt);
  });
}

void setup_springer_count(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("springer-count",
                                "count stable partial flags for a nilpotent Jordan type");
  auto opt = std::make_shared<CommonOpts>();
  auto type = std::make_shared<std::string>();
  auto rvec = std::make_shared<std::string>();
  auto p = std::make_shared<std::uint32_t>(0);
  cmd->add_option("--type", *type, "Jordan type, e.g. [2,1]")->required();
  cmd->add_option("--rvec", *rvec, "corank steps, e.g. [1,1,1]")->required();
  cmd->add_option("--p", *p, "prime field size")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, type, rvec, p]() {
    apply_budget(*opt);
    const Field F = Field::prime(*p);
    const ExactMatrix A = jordan_matrix(parse_partition(*type), F);
    const PartialFlagSpec spec{parse_partition(*rvec)};
    const auto start = std::chrono::steady_clock::now();
    const SpringerCount count = springer_fiber_count(A, spec);
    const auto stop = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["type"] = partition_json(parse_partition(*type));
      out["rvec"] = partition_json(spec.rvec);
      out["p"] = *p;
      out["count"] = std::to_string(count.count);
      out["flags_enumerated"] = std::to_string(count.flags_enumerated);
      if (opt->timings) out["elapsed_ms"] = std::to_string(ms);
      emit_json(out);
    } else {
      std::cout << "count: " << count.count << "\n"
                << "flags enumerated: " << count.flags_enumerated << "\n";
      if (opt->timings) std::cout << "elapsed: " << ms << "ms\n";
    }
    code = 0;
  });
}

void setup_lattice_stratify(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("lattice-stratify",
                                "tally the points of a shift-module variety by stratum");
  auto opt = std::make_shared<CommonOpts>();
  auto p = std::make_shared<std::uint32_t>(0);
  auto exponents = std::make_shared<std::string>();
  auto r = std::make_shared<int>(0);
  cmd->add_option("--p", *p, "prime field size")->required();
  cmd->add_option("--exponents", *exponents, "block sizes, e.g. [3,1]")->required();
  cmd->add_option("--r", *r, "subspace dimension")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, p, exponents, r]() {
    apply_budget(*opt);
    const PiModule W = make_pi_module(Field::prime(*p), parse_int_list(*exponents));
    const auto start = std::chrono::steady_clock::now();
    const std::map<Partition, long long> tally = stratify(W, *r);
    const auto stop = std::chrono::steady_clock::now();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    long long total = 0;
    for (const auto& [key, count] : tally) total += count;
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["p"] = *p;
      out["r"] = *r;
      json exps = json::array();
      for (int v : parse_int_list(*exponents)) exps.push_back(v);
      out["exponents"] = std::move(exps);
      out["total"] = std::to_string(total);
      json arr = json::array();
      for (auto it = tally.rbegin(); it != tally.rend(); ++it)
        arr.push_back({{"partition", partition_json(it->first)},
                       {"count", std::to_string(it->second)}});
      out["strata"] = std::move(arr);
      if (opt->timings) out["elapsed_ms"] = std::to_string(ms);
      emit_json(out);
    } else {
      std::cout << "total: " << total << "\n";
      for (auto it = tally.rbegin(); it != tally.rend(); ++it)
        std::cout << it->first.to_string() << "  " << it->second << "\n";
      if (opt->timings) std::cout << "elapsed: " << ms << "ms\n";
    }
    code = 0;
  });
}

void setup_multiplicities(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("multiplicities",
                                "tensor decomposition table for exterior powers");
  auto opt = std::make_shared<CommonOpts>();
  auto d = std::make_shared<int>(0);
  auto rvec = std::make_shared<std::string>();
  cmd->add_option("--d", *d)->required();
  cmd->add_option("--rvec", *rvec, "multiplicity vector, e.g. [2,1]")->required();
  add_common(cmd, *opt);
  cmd->callback([&code, opt, d, rvec]() {
    apply_budget(*opt);
    const WeightMultiplicityTable table = tensor_minuscule_decompose(*d, parse_partition(*rvec));
    if (opt->json) {
      json out;
      out["schema"] = 1;
      out["d"] = table.d;
      out["rvec"] = partition_json(table.rvec);
      json arr = json::array();
      // descending lexicographic = a linear extension of dominance-descending
      for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it)
        arr.push_back({{"lambda", partition_json(it->first)},
                       {"multiplicity", std::to_string(it->second)}});
      out["entries"] = std::move(arr);
      emit_json(out);
    } else {
      for (auto it = table.entries.rbegin(); it != table.entries.rend(); ++it)
        std::cout << it->first.to_string() << "  " << it->second << "\n";
    }
    code = 0;
  });
}

void setup_verify_all(CLI::App& app, int& code) {
  auto cmd = app.add_subcommand("verify-all", "run the whole verification campaign");
  auto opt = std::make_shared<CommonOpts>();
  auto quick = std::make_shared<bool>(false);
  cmd->add_flag("--quick", *quick, "skip the slowest Groebner cases");
  add_common(cmd, *opt);
  cmd->callback([&code, opt, quick]() {
    apply_budget(*opt);
    code = finish_report(
        run_campaign("verify-all", verify_all_cases(*quick), opt->seed, opt->timings), *opt);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of strata, ideals and lattice points for GL_d"};
  app.require_subcommand(1);
  int code = 0;
  setup_strata(app, code);
  setup_dims(app, code);
  setup_kostka(app, code);
  setup_kostka_foulkes(app, code);
  setup_emit_ideal(app, code);
  setup_verify_coinvariant(app, code);
  setup_verify_dcp_lemma(app, code);
  setup_verify_kostant(app, code);
  setup_verify_tensor_kostka(app, code);
  setup_springer_count(app, code);
  setup_lattice_stratify(app, code);
  setup_multiplicities(app, code);
  setup_verify_all(app, code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const LimitError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (budget " << e.budget << ", needed "
              << e.reached << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
