// Acceptance gate: ten end-to-end checks, one line of output each, exit 0
// only when every check passes within its pinned wall-clock budget.
// argv[1] must be the path to the command-line binary (used by check 10).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

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

using namespace locmod;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool run_criterion(int id, const std::string& title, double limit_s,
                   const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double elapsed = seconds_since(start);
  const bool in_time = limit_s <= 0.0 || elapsed < limit_s;
  const bool pass = ok && in_time;
  std::printf("criterion %2d: %s  %-58s  %.2fs", id, pass ? "PASS" : "FAIL", title.c_str(),
              elapsed);
  if (limit_s > 0.0) std::printf(" (budget %.0fs)", limit_s);
  if (!detail.empty()) std::printf("  [%s]", detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return pass;
}

// all partitions of r: parts <= r, at most r of them
std::vector<Partition> partitions_of(int r) { return enumerate_strata(r, r, r); }

std::string run_process(const std::string& command, int& exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    exit_code = -1;
    return output;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

// ------------------------------------------------------------------ checks

bool coinvariant_dimensions(std::string& detail) {
  const std::map<std::pair<int, int>, std::uint64_t> pinned = {
      {{2, 2}, 2}, {{3, 2}, 3}, {{4, 2}, 6}, {{2, 3}, 2}, {{3, 3}, 6}, {{4, 3}, 12}};
  const std::vector<Field> fields = {Field::rationals(), Field::prime(503)};
  double slowest = 0.0;
  for (const auto& [pair, want] : pinned) {
    const auto [r, e] = pair;
    if (coinvariant_dim_formula(r, e) != want) {
      detail = "closed form disagrees with the pinned value at r=" + std::to_string(r) +
               " e=" + std::to_string(e);
      return false;
    }
    for (const Field& field : fields) {
      const auto start = std::chrono::steady_clock::now();
      const Ideal restricted = diagonal_restriction(naive_special_ideal(r, e, field).ideal);
      const auto dim = quotient_dimension(restricted);
      slowest = std::max(slowest, seconds_since(start));
      if (!dim || *dim != want) {
        detail = "r=" + std::to_string(r) + " e=" + std::to_string(e) + " over " +
                 field.to_string() + ": got " + (dim ? std::to_string(*dim) : "infinite") +
                 ", want " + std::to_string(want);
        return false;
      }
    }
  }
  if (slowest >= 60.0) {
    detail = "slowest single case took " + std::to_string(slowest) + "s (per-case budget 60s)";
    return false;
  }
  return true;
}

bool operator_ideal_identity(std::string&) {
  for (int r = 2; r <= 3; ++r) {
    const RingPtr ring = matrix_ring(Field::rationals(), r);
    const PolyMatrix A = generic_matrix(ring);
    std::vector<Polynomial> gens;
    for (int t = 1; t <= r; ++t)
      for (const Polynomial& entry : S_operator(A, t, r + 1 - t).entries()) gens.push_back(entry);
    if (!ideal_equal(Ideal(ring, gens), Ideal(ring, char_poly_coeffs(A)))) return false;
  }
  return true;
}

bool power_membership(std::string& detail) {
  for (int r = 2; r <= 3; ++r) {
    const RingPtr ring = matrix_ring(Field::rationals(), r);
    const PolyMatrix A = generic_matrix(ring);
    const Ideal sigma(ring, char_poly_coeffs(A));
    for (const Polynomial& entry : A.pow(r).entries())
      if (!ideal_member(entry, sigma)) {
        detail = "an entry of A^" + std::to_string(r) + " escapes the ideal at r=" +
                 std::to_string(r);
        return false;
      }
  }
  return true;
}

bool multiplicity_identities(std::string& detail) {
  for (int r = 1; r <= 6; ++r) {
    const std::vector<Partition> all = partitions_of(r);
    for (const Partition& s : all)
      for (const Partition& rvec : all)
        if (character_multiplicity(s, rvec) != nearby_cycle_multiplicity(s, rvec).value) {
          detail = "character route disagrees at s=" + s.to_string() +
                   " rvec=" + rvec.to_string();
          return false;
        }
  }
  for (int d = 1; d <= 4; ++d)
    for (int e = 1; e <= 3; ++e) {
      // every weakly decreasing rvec with e parts in 1..d
      std::vector<int> parts(static_cast<std::size_t>(e), 1);
      for (;;) {
        const VerificationReport rep = verify_tensor_vs_kostka(d, Partition(parts));
        if (!rep.all_pass()) {
          detail = "tensor table check failed at d=" + std::to_string(d) +
                   " rvec=" + Partition(parts).to_string();
          return false;
        }
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
    }
  return true;
}

bool dimension_identities(std::string& detail) {
  long long checked = 0;
  for (int r = 1; r <= 10; ++r)
    for (int e = 1; e <= 5; ++e)
      for (int d = 1; d <= 6; ++d) {
        if (r > e * d) continue;
        const long long special = special_fiber_dim(r, e, d);
        const long long open_orbit = affine_orbit_dim(s_max(r, e), d);
        if (special != open_orbit) {
          detail = "special fiber vs open orbit at r=" + std::to_string(r) + " e=" +
                   std::to_string(e) + " d=" + std::to_string(d);
          return false;
        }
        for (const Partition& s : enumerate_strata(r, e, d)) {
          ++checked;
          if (affine_orbit_dim(s, d) !=
              nilpotent_orbit_dim(s) - static_cast<long long>(r) * r +
                  static_cast<long long>(r) * d) {
            detail = "orbit dimension identity fails at s=" + s.to_string();
            return false;
          }
        }
      }
  detail = std::to_string(checked) + " labels checked";
  return checked > 500;  // guards against an accidentally empty sweep
}

bool inhomogeneous_family(std::string& detail) {
  for (int e = 3; e <= 4; ++e)
    for (std::uint32_t p : {2u, 3u}) {
      const auto tally = stratify(make_pi_module(Field::prime(p), {e, 1}), e);
      std::map<Partition, long long> want;
      want[Partition({e})] = p;
      want[Partition({e - 1, 1})] = 1;
      if (tally != want) {
        detail = "point tally differs at e=" + std::to_string(e) + " p=" + std::to_string(p);
        return false;
      }
    }
  return true;
}

bool homogeneous_stratification(std::string& detail) {
  const std::vector<std::array<int, 3>> shapes = {{2, 2, 2}, {3, 2, 2}, {2, 2, 3}};
  for (const auto& [r, e, d] : shapes) {
    const auto tally = stratify(homogeneous_pi_module(Field::prime(2), e, d), r);
    std::vector<Partition> got;
    for (auto it = tally.rbegin(); it != tally.rend(); ++it) got.push_back(it->first);
    const std::string where =
        " at (" + std::to_string(r) + "," + std::to_string(e) + "," + std::to_string(d) + ")";
    if (got != enumerate_strata(r, e, d)) {
      detail = "stratum key set differs" + where;
      return false;
    }
    if (tally.count(s_min(r, d)) == 0) {
      detail = "minimal stratum missing" + where;
      return false;
    }
    const Partition open = s_max(r, e);
    const long long top = tally.at(open);
    for (const auto& [key, count] : tally)
      if (!(key == open) && count >= top) {
        detail = "open stratum not strictly largest" + where;
        return false;
      }
  }
  return true;
}

bool springer_nonemptiness(std::string& detail) {
  const Field F2 = Field::prime(2);
  for (int r = 1; r <= 4; ++r) {
    const std::vector<Partition> all = partitions_of(r);
    for (const Partition& s : all)
      for (const Partition& rvec : all) {
        const SpringerCount c = springer_fiber_count(jordan_matrix(s, F2), {rvec});
        if ((c.count > 0) != dominance_leq(s, dual(rvec))) {
          detail = "nonemptiness mismatch at s=" + s.to_string() + " rvec=" + rvec.to_string();
          return false;
        }
      }
  }
  return true;
}

bool square_zero_points(std::string& detail) {
  const Field F2 = Field::prime(2);
  const AnnotatedIdeal ideal = e2_ideal(2, 1, F2);
  long long solutions = 0, jordan_side = 0;
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
      if (!square_zero) {
        detail = "a solution has nonzero square";
        return false;
      }
      if (M.rank() > 1) {
        detail = "a solution has rank above 1";
        return false;
      }
    }
    if (square_zero && dominance_leq(jordan_type_of(M), Partition({2, 1}))) ++jordan_side;
  }
  detail = std::to_string(solutions) + " solutions";
  return solutions == jordan_side;
}

bool deterministic_reports(const std::string& cli, std::string& detail) {
  const std::string command = "\"" + cli + "\" verify-all --quick --json";
  int code_a = 0, code_b = 0;
  const std::string a = run_process(command, code_a);
  const std::string b = run_process(command, code_b);
  if (code_a != 0 || code_b != 0) {
    detail = "campaign exited with " + std::to_string(code_a) + "/" + std::to_string(code_b);
    return false;
  }
  if (a.empty() || a != b) {
    detail = "reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
    return 1;
  }
  const std::string cli = argv[1];

  bool all = true;
  all &= run_criterion(1, "coinvariant quotient dimensions over QQ and GF(503)", 0.0,
                       coinvariant_dimensions);
  all &= run_criterion(2, "degree-(r+1) operator ideal equals the sigma ideal", 30.0,
                       operator_ideal_identity);
  all &= run_criterion(3, "entries of A^r lie in the sigma ideal (r = 2, 3)", 30.0,
                       power_membership);
  all &= run_criterion(4, "stratum multiplicities: character, tableau and chain routes", 60.0,
                       multiplicity_identities);
  all &= run_criterion(5, "orbit dimension identities across all strata", 10.0,
                       dimension_identities);
  all &= run_criterion(6, "two-block shift modules carry p+1 points", 30.0, inhomogeneous_family);
  all &= run_criterion(7, "homogeneous stratifications match the label set", 120.0,
                       homogeneous_stratification);
  all &= run_criterion(8, "flag counts positive exactly inside the closure", 120.0,
                       springer_nonemptiness);
  all &= run_criterion(9, "square-zero variety point count over GF(2)", 10.0, square_zero_points);
  all &= run_criterion(10, "verification campaign is byte-deterministic", 0.0,
                       [&cli](std::string& detail) { return deterministic_reports(cli, detail); });

  return all ? 0 : 1;
}
