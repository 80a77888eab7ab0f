#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "locmod/ideal.hpp"
#include "locmod/matrix_ideals.hpp"
#include "locmod/partition.hpp"

using namespace locmod;

namespace {

Polynomial poly(const RingPtr& R, const std::string& s) { return parse_polynomial(R, s); }

// Sum over all ways to split h into t ordered nonnegative parts, enumerated in
// the reverse order from the library (last part chosen first). The operator
// itself must not depend on the enumeration.
PolyMatrix s_operator_reference(const PolyMatrix& A, int t, int h) {
  const int r = A.rows();
  std::vector<PolyMatrix> pw;
  pw.push_back(PolyMatrix::identity(A.ring(), r));
  for (int k = 1; k <= h; ++k) pw.push_back(pw.back() * A);

  std::vector<std::vector<int>> subs;
  std::vector<int> cur;
  auto rec_sub = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == t) {
      subs.push_back(cur);
      return;
    }
    for (int i = next; i < r; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec_sub(rec_sub, 0);

  const int n = static_cast<int>(subs.size());
  PolyMatrix out(A.ring(), n, n);
  std::vector<int> comp(t, 0);
  std::vector<int> all_cols(t);
  for (int j = 0; j < t; ++j) all_cols[j] = j;
  auto emit = [&]() {
    for (int sidx = 0; sidx < n; ++sidx) {
      PolyMatrix C(A.ring(), r, t);
      for (int j = 0; j < t; ++j)
        for (int i = 0; i < r; ++i) C.at(i, j) = pw[comp[j]].at(i, subs[sidx][j]);
      for (int tidx = 0; tidx < n; ++tidx)
        out.at(tidx, sidx) = out.at(tidx, sidx) + submatrix_det(C, subs[tidx], all_cols);
    }
  };
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos < 0) {
      if (rest == 0) emit();
      return;
    }
    for (int v = rest; v >= 0; --v) {
      comp[pos] = v;
      self(self, pos - 1, rest - v);
    }
  };
  rec(rec, t - 1, h);
  return out;
}

PolyMatrix random_scalar_matrix(const RingPtr& R, int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 4);
  PolyMatrix M(R, r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) M.at(i, j) = Polynomial::constant(R, Rat(d(rng)));
  return M;
}

std::vector<Rat> gf2_point(int mask, int n) {
  std::vector<Rat> pt;
  for (int k = 0; k < n; ++k) pt.push_back(Rat((mask >> k) & 1));
  return pt;
}

}  // namespace

TEST_SUITE("matrix_ideals") {

TEST_CASE("matrix ring layout and the generic matrix") {
  const RingPtr R = matrix_ring(Field::rationals(), 2);
  REQUIRE(R->nvars() == 4);
  CHECK(R->vars == std::vector<std::string>{"a11", "a12", "a21", "a22"});
  const PolyMatrix A = generic_matrix(R);
  CHECK(A.at(0, 1) == poly(R, "a12"));
  CHECK(A.at(1, 0) == poly(R, "a21"));
  CHECK_THROWS_AS(matrix_ring(Field::rationals(), 0), RangeError);
  CHECK_THROWS_AS(matrix_ring(Field::rationals(), 10), RangeError);
  CHECK_THROWS_AS(generic_matrix(make_ring(Field::rationals(), {"x", "y", "z", "w"})),
                  ContextMismatch);

  const RingPtr D = diagonal_ring(Field::rationals(), 3);
  CHECK(D->vars == std::vector<std::string>{"X1", "X2", "X3"});
}

TEST_CASE("matrix arithmetic basics") {
  const RingPtr R = matrix_ring(Field::rationals(), 2);
  const PolyMatrix A = generic_matrix(R);
  const PolyMatrix I = PolyMatrix::identity(R, 2);
  CHECK(A * I == A);
  CHECK(I * A == A);
  CHECK(A - A == PolyMatrix(R, 2, 2));
  CHECK(A.pow(0) == I);
  CHECK(A.pow(2) == A * A);
  CHECK((A * A).at(0, 0) == poly(R, "a11^2 + a12*a21"));
  CHECK_THROWS_AS(A + PolyMatrix(R, 2, 3), SizeMismatch);
  CHECK_THROWS_AS(PolyMatrix(R, 2, 3) * PolyMatrix(R, 2, 3), SizeMismatch);
  const RingPtr R3 = matrix_ring(Field::rationals(), 3);
  CHECK_THROWS_AS(A + generic_matrix(R3), ContextMismatch);
}

TEST_CASE("characteristic polynomial coefficients") {
  SUBCASE("r = 1") {
    const RingPtr R = matrix_ring(Field::rationals(), 1);
    const auto s = char_poly_coeffs(generic_matrix(R));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == poly(R, "a11"));
  }
  SUBCASE("r = 2: trace and determinant") {
    const RingPtr R = matrix_ring(Field::rationals(), 2);
    const auto s = char_poly_coeffs(generic_matrix(R));
    REQUIRE(s.size() == 2);
    CHECK(s[0] == poly(R, "a11 + a22"));
    CHECK(s[1] == poly(R, "a11*a22 - a12*a21"));
  }
  SUBCASE("diagonal specialization gives elementary symmetric polynomials") {
    for (int r = 2; r <= 4; ++r) {
      const RingPtr R = matrix_ring(Field::rationals(), r);
      const RingPtr D = diagonal_ring(Field::rationals(), r);
      std::map<int, Polynomial> assign;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          assign.emplace(i * r + j, i == j ? Polynomial::variable(D, i) : Polynomial::zero(D));
      const auto s = char_poly_coeffs(generic_matrix(R));
      for (int h = 1; h <= r; ++h)
        CHECK(s[h - 1].substitute(assign) == elementary_symmetric(D, h));
    }
  }
}

TEST_CASE("exterior powers") {
  const RingPtr R = matrix_ring(Field::rationals(), 3);
  const PolyMatrix A = generic_matrix(R);
  SUBCASE("t = 1 is the matrix itself") { CHECK(wedge_power(A, 1) == A); }
  SUBCASE("t = r is the 1x1 determinant") {
    const PolyMatrix W = wedge_power(A, 3);
    REQUIRE(W.rows() == 1);
    std::vector<int> all{0, 1, 2};
    CHECK(W.at(0, 0) == submatrix_det(A, all, all));
  }
  SUBCASE("identity maps to identity") {
    for (int t = 1; t <= 3; ++t)
      CHECK(wedge_power(PolyMatrix::identity(R, 3), t) ==
            PolyMatrix::identity(R, wedge_power(A, t).rows()));
  }
  SUBCASE("functoriality on scalar matrices") {
    std::mt19937 rng(5150);
    const Field F5 = Field::prime(5);
    for (int r = 2; r <= 4; ++r) {
      const RingPtr Rr = matrix_ring(F5, r);
      for (int trial = 0; trial < 6; ++trial) {
        const PolyMatrix M = random_scalar_matrix(Rr, r, rng);
        const PolyMatrix N = random_scalar_matrix(Rr, r, rng);
        for (int t = 1; t <= r; ++t)
          CHECK(wedge_power(M * N, t) == wedge_power(M, t) * wedge_power(N, t));
      }
    }
  }
  SUBCASE("range checks") {
    CHECK_THROWS_AS(wedge_power(A, 0), RangeError);
    CHECK_THROWS_AS(wedge_power(A, 4), RangeError);
  }
}

TEST_CASE("power-sum style operators") {
  const RingPtr R2 = matrix_ring(Field::rationals(), 2);
  const PolyMatrix A2 = generic_matrix(R2);
  const RingPtr R3 = matrix_ring(Field::rationals(), 3);
  const PolyMatrix A3 = generic_matrix(R3);

  SUBCASE("t = 1 recovers matrix powers") {
    for (int h = 0; h <= 3; ++h) {
      CHECK(S_operator(A2, 1, h) == A2.pow(h));
      CHECK(S_operator(A3, 1, h) == A3.pow(h));
    }
  }
  SUBCASE("h = 0 is the identity on the exterior power") {
    for (int t = 1; t <= 3; ++t)
      CHECK(S_operator(A3, t, 0) == PolyMatrix::identity(R3, wedge_power(A3, t).rows()));
  }
  SUBCASE("top exterior power, h = 1 is multiplication by the trace") {
    const PolyMatrix S = S_operator(A2, 2, 1);
    REQUIRE(S.rows() == 1);
    CHECK(S.at(0, 0) == poly(R2, "a11 + a22"));
  }
  SUBCASE("independent enumeration of the exponent splittings agrees") {
    for (int t = 1; t <= 3; ++t)
      for (int h = 0; h <= 3; ++h) {
        CHECK(S_operator(A3, t, h) == s_operator_reference(A3, t, h));
      }
  }
  SUBCASE("sigma recursion: trace of S^1_h") {
    // Newton-style check: S^{t}_h on the top power equals the complete
    // homogeneous symmetric function h_h of the eigenvalues, so over the
    // diagonal ring its trace specializes accordingly. Spot check r=2,h=2:
    // det-normalized identity S^2_2 = h_2(x,y) on the top wedge.
    const PolyMatrix S = S_operator(A2, 2, 2);
    REQUIRE(S.rows() == 1);
    const RingPtr D = diagonal_ring(Field::rationals(), 2);
    std::map<int, Polynomial> assign;
    assign.emplace(0, Polynomial::variable(D, 0));
    assign.emplace(1, Polynomial::zero(D));
    assign.emplace(2, Polynomial::zero(D));
    assign.emplace(3, Polynomial::variable(D, 1));
    CHECK(S.at(0, 0).substitute(assign) == poly(D, "X1^2 + X1*X2 + X2^2"));
  }

  SUBCASE("F operators") {
    CHECK(F_operator(A3, 2, 0) == PolyMatrix::identity(R3, 3));
    const PolyMatrix F11 = F_operator(A2, 1, 1);
    CHECK(F11.at(0, 0) == poly(R2, "-a22"));
    CHECK(F11.at(0, 1) == poly(R2, "a12"));
    CHECK(F11.at(1, 0) == poly(R2, "a21"));
    CHECK(F11.at(1, 1) == poly(R2, "-a11"));
    // top exterior power: F^r_h vanishes identically for h >= 1
    for (int h = 1; h <= 3; ++h) {
      CHECK(F_operator(A2, 2, h) == PolyMatrix(R2, 1, 1));
      CHECK(F_operator(A3, 3, h) == PolyMatrix(R3, 1, 1));
    }
  }
}

TEST_CASE("nilpotent matrix-power ideal") {
  SUBCASE("r = 1") {
    const AnnotatedIdeal I = naive_special_ideal(1, 3, Field::rationals());
    const RingPtr R = I.ring;
    CHECK(ideal_equal(I.ideal, Ideal(R, {poly(R, "a11")})));
  }
  SUBCASE("r = 2, e = 2 generators") {
    const AnnotatedIdeal I = naive_special_ideal(2, 2, Field::rationals());
    const RingPtr R = I.ring;
    REQUIRE(I.generators.size() == 6);
    CHECK(I.generators[0].label == "A^2 (1,1)");
    CHECK(I.generators[0].poly == poly(R, "a11^2 + a12*a21"));
    CHECK(I.generators[4].label == "sigma_1");
    CHECK(I.generators[5].label == "sigma_2");
  }
  SUBCASE("labels dedupe repeated polynomials") {
    // r=1: A^e entry is a11^e; sigma_1 = a11 is distinct, nothing collides.
    // r=2, e=1: A^1 entries include a11 and a22; sigma_1 = a11+a22 is new.
    const AnnotatedIdeal I = naive_special_ideal(2, 1, Field::rationals());
    std::set<std::string> texts;
    for (const auto& g : I.generators) CHECK(texts.insert(g.poly.to_string()).second);
  }
  SUBCASE("Cayley-Hamilton: matrix powers lie in the coefficient ideal when r <= e") {
    for (const auto& [r, e] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
      const RingPtr R = matrix_ring(Field::rationals(), r);
      const PolyMatrix A = generic_matrix(R);
      const Ideal sig(R, char_poly_coeffs(A));
      for (const Polynomial& p : A.pow(e).entries()) CHECK(ideal_member(p, sig));
    }
  }
}

TEST_CASE("strata-indexed nilpotent ideals") {
  SUBCASE("k = 0 block generates the coefficient ideal") {
    for (int r = 2; r <= 3; ++r) {
      const RingPtr R = matrix_ring(Field::rationals(), r);
      const PolyMatrix A = generic_matrix(R);
      // k = 0: t + h = r + 1 over the identity wedge; the resulting entries
      // generate exactly (sigma_1, ..., sigma_r).
      std::vector<Polynomial> gens;
      for (int t = 1; t <= r; ++t) {
        const PolyMatrix blk = S_operator(A, t, r + 1 - t);
        for (const auto& p : blk.entries()) gens.push_back(p);
      }
      CHECK(ideal_equal(Ideal(R, gens), Ideal(R, char_poly_coeffs(A))));
    }
  }
  SUBCASE("rvec = (1,...,1) contains all entries of A^e with e = r") {
    for (int r = 2; r <= 3; ++r) {
      const AnnotatedIdeal I =
          dcp_special_ideal(r, Partition(std::vector<int>(r, 1)), Field::rationals());
      for (const Polynomial& p : generic_matrix(I.ring).pow(r).entries())
        CHECK(ideal_member(p, I.ideal));
    }
  }
  SUBCASE("rvec = (r) contains the matrix entries themselves") {
    for (int r = 2; r <= 3; ++r) {
      const AnnotatedIdeal I = dcp_special_ideal(r, Partition({r}), Field::rationals());
      for (const Polynomial& p : generic_matrix(I.ring).entries())
        CHECK(ideal_member(p, I.ideal));
    }
  }
  SUBCASE("always contains the characteristic coefficients") {
    const std::vector<std::pair<int, Partition>> cases{
        {2, Partition({1, 1})}, {2, Partition({2})},   {3, Partition({1, 1, 1})},
        {3, Partition({2, 1})}, {3, Partition({3})}};
    for (const auto& [r, rvec] : cases) {
      const AnnotatedIdeal I = dcp_special_ideal(r, rvec, Field::rationals());
      for (const Polynomial& s : char_poly_coeffs(generic_matrix(I.ring)))
        CHECK(ideal_member(s, I.ideal));
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(dcp_special_ideal(3, Partition({2}), Field::rationals()), RangeError);
    CHECK_THROWS_AS(dcp_special_ideal(0, Partition(), Field::rationals()), RangeError);
  }
}

TEST_CASE("deformed ideals with pairwise distinct eigenvalues") {
  SUBCASE("full product of shifts appears as the f = (1,...,1) block") {
    // With eig = {(1,1),(2,1)}: r = 2 and f=(1,1) excludes everything, so
    // m = r - 2 + 1 = 1 gives t=1,h=0 and the block is (A-1)(A-2) itself.
    const AnnotatedIdeal I = dcp_generic_ideal(
        {{Rat(1), 1}, {Rat(2), 1}}, Field::rationals());
    const RingPtr R = I.ring;
    const PolyMatrix A = generic_matrix(R);
    const PolyMatrix prod =
        (A - PolyMatrix::identity(R, 2).scaled(Polynomial::constant(R, Rat(1)))) *
        (A - PolyMatrix::identity(R, 2).scaled(Polynomial::constant(R, Rat(2))));
    for (const Polynomial& p : prod.entries()) CHECK(ideal_member(p, I.ideal));
  }
  SUBCASE("diagonal matrices with the prescribed spectrum are zeros of every generator") {
    const std::vector<EigenvalueDatum> eig{{Rat(3), 2}, {Rat(-1), 1}};
    const AnnotatedIdeal I = dcp_generic_ideal(eig, Field::rationals());
    // evaluate at diag(3, 3, -1) and at diag(-1, 3, 3)
    for (const std::vector<int>& d : {std::vector<int>{3, 3, -1}, {-1, 3, 3}}) {
      std::vector<Rat> pt(9, Rat(0));
      for (int i = 0; i < 3; ++i) pt[i * 3 + i] = Rat(d[i]);
      for (const auto& g : I.generators) CHECK(g.poly.evaluate(pt) == Rat(0));
    }
  }
  SUBCASE("non-spectrum diagonal matrices are not common zeros") {
    const AnnotatedIdeal I =
        dcp_generic_ideal({{Rat(3), 2}, {Rat(-1), 1}}, Field::rationals());
    std::vector<Rat> pt(9, Rat(0));
    pt[0] = Rat(3);
    pt[4] = Rat(3);
    pt[8] = Rat(3);
    bool nonzero = false;
    for (const auto& g : I.generators) nonzero = nonzero || g.poly.evaluate(pt) != Rat(0);
    CHECK(nonzero);
  }
  SUBCASE("single eigenvalue zero degenerates to the one-part nilpotent ideal") {
    for (int r = 1; r <= 3; ++r) {
      const AnnotatedIdeal G = dcp_generic_ideal({{Rat(0), r}}, Field::rationals());
      const AnnotatedIdeal S = dcp_special_ideal(r, Partition({r}), Field::rationals());
      CHECK(ideal_equal(G.ideal, S.ideal));
    }
  }
  SUBCASE("eigenvalue collisions are rejected, including after reduction mod p") {
    CHECK_THROWS_AS(dcp_generic_ideal({{Rat(1), 1}, {Rat(1), 2}}, Field::rationals()),
                    DistinctnessError);
    CHECK_THROWS_AS(dcp_generic_ideal({{Rat(1), 1}, {Rat(6), 1}}, Field::prime(5)),
                    DistinctnessError);
    CHECK_NOTHROW(dcp_generic_ideal({{Rat(1), 1}, {Rat(6), 1}}, Field::prime(7)));
    CHECK_THROWS_AS(dcp_generic_ideal({}, Field::rationals()), RangeError);
    CHECK_THROWS_AS(dcp_generic_ideal({{Rat(1), 0}}, Field::rationals()), RangeError);
  }
}

TEST_CASE("square-zero ideals for two-part shapes") {
  SUBCASE("r2 = 0 contains all matrix entries") {
    const AnnotatedIdeal I = e2_ideal(2, 0, Field::rationals());
    for (const Polynomial& p : generic_matrix(I.ring).entries())
      CHECK(ideal_member(p, I.ideal));
  }
  SUBCASE("r1 = r2 = 1 equals square entries plus trace and determinant") {
    const AnnotatedIdeal I = e2_ideal(1, 1, Field::rationals());
    const RingPtr R = I.ring;
    const PolyMatrix A = generic_matrix(R);
    std::vector<Polynomial> expect = A.pow(2).entries();
    for (const Polynomial& s : char_poly_coeffs(A)) expect.push_back(s);
    CHECK(ideal_equal(I.ideal, Ideal(R, expect)));
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(e2_ideal(1, 2, Field::rationals()), RangeError);
    CHECK_THROWS_AS(e2_ideal(0, 0, Field::rationals()), RangeError);
    CHECK_THROWS_AS(e2_ideal(-1, 0, Field::rationals()), RangeError);
  }
  SUBCASE("point count over GF(2) for shape (2,1)") {
    const AnnotatedIdeal I = e2_ideal(2, 1, Field::prime(2));
    long long zeros = 0;
    for (int mask = 0; mask < 512; ++mask) {
      const std::vector<Rat> pt = gf2_point(mask, 9);
      bool ok = true;
      for (const auto& g : I.generators)
        if (g.poly.evaluate(pt) != Rat(0)) {
          ok = false;
          break;
        }
      zeros += ok;
    }
    CHECK(zeros == 22);
  }
}

TEST_CASE("restriction to diagonal matrices") {
  SUBCASE("pinned example: nilpotent power ideal, r = 2, e = 2") {
    const AnnotatedIdeal I = naive_special_ideal(2, 2, Field::rationals());
    const Ideal D = diagonal_restriction(I.ideal);
    const RingPtr X = D.ring();
    // substituting a12 = a21 = 0 into A^2 entries and sigmas
    CHECK(ideal_equal(D, Ideal(X, {poly(X, "X1^2"), poly(X, "X2^2"), poly(X, "X1 + X2"),
                                   poly(X, "X1*X2")})));
  }
  SUBCASE("wrong ring is rejected") {
    const RingPtr R = make_ring(Field::rationals(), {"x", "y"});
    CHECK_THROWS_AS(diagonal_restriction(Ideal(R, {poly(R, "x")})), ContextMismatch);
  }
  SUBCASE("coinvariant-style quotient dimensions match the factorial formula") {
    for (int e = 1; e <= 3; ++e)
      for (int r = 1; r <= 4; ++r) {
        const AnnotatedIdeal I = naive_special_ideal(r, e, Field::rationals());
        const Ideal D = diagonal_restriction(I.ideal);
        const auto dim = quotient_dimension(D);
        REQUIRE(dim.has_value());
        CHECK(*dim == coinvariant_dim_formula(r, e));
      }
  }
}

}  // TEST_SUITE
