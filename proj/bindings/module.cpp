// Python extension exposing the main operations: stratum enumeration and
// dimension formulas, Kostka numbers, ideal construction and verification,
// finite-field flag/lattice counts, and weight-multiplicity tables.
//
// Partitions cross the boundary as plain sequences of ints (weakly
// decreasing); maps keyed by partitions come back as dicts keyed by tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "locmod/budget.hpp"
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

namespace py = pybind11;
using namespace locmod;

namespace {

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple as_tuple(const Partition& p) {
  py::tuple t(p.parts().size());
  for (std::size_t i = 0; i < p.parts().size(); ++i) t[i] = p.parts()[i];
  return t;
}

std::vector<std::vector<int>> as_lists(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  out.reserve(ps.size());
  for (const Partition& p : ps) out.push_back(p.parts());
  return out;
}

py::dict tally_dict(const std::map<Partition, long long>& tally) {
  py::dict d;
  for (const auto& [key, count] : tally) d[as_tuple(key)] = count;
  return d;
}

py::object big_int(const Int& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

Rat parse_rational(const std::string& value) {
  try {
    const auto slash = value.find('/');
    if (slash == std::string::npos) return Rat(Int(value));
    return Rat(Int(value.substr(0, slash)), Int(value.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + value + "'");
  }
}

std::vector<std::pair<std::string, std::string>> generator_list(const AnnotatedIdeal& ideal) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(ideal.generators.size());
  for (const AnnotatedGenerator& g : ideal.generators)
    out.emplace_back(g.label, g.poly.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic kernels for partition strata, determinantal "
            "ideals and finite-field flag counts";

  py::register_exception<LimitError>(m, "BudgetError", PyExc_RuntimeError);

  // ---- partitions, strata, dimension formulas -----------------------------
  m.def("enumerate_strata",
        [](int r, int e, int d) { return as_lists(enumerate_strata(r, e, d)); },
        py::arg("r"), py::arg("e"), py::arg("d"),
        "All stratum labels for the given shape, in descending "
        "lexicographic order (a linear extension of dominance).");
  m.def("dual", [](const std::vector<int>& p) { return dual(as_partition(p)).parts(); },
        py::arg("partition"));
  m.def("dominance_leq",
        [](const std::vector<int>& a, const std::vector<int>& b) {
          return dominance_leq(as_partition(a), as_partition(b));
        },
        py::arg("a"), py::arg("b"),
        "Dominance comparison; both arguments must have the same size.");
  m.def("s_max", [](int r, int e) { return s_max(r, e).parts(); }, py::arg("r"), py::arg("e"));
  m.def("s_min", [](int r, int d) { return s_min(r, d).parts(); }, py::arg("r"), py::arg("d"));
  m.def("affine_orbit_dim",
        [](const std::vector<int>& s, int d) { return affine_orbit_dim(as_partition(s), d); },
        py::arg("s"), py::arg("d"));
  m.def("nilpotent_orbit_dim",
        [](const std::vector<int>& s) { return nilpotent_orbit_dim(as_partition(s)); },
        py::arg("s"));
  m.def("special_fiber_dim", &special_fiber_dim, py::arg("r"), py::arg("e"), py::arg("d"));
  m.def("generic_fiber_dim",
        [](const std::vector<int>& rvec, int d) {
          return generic_fiber_dim(as_partition(rvec), d);
        },
        py::arg("rvec"), py::arg("d"));
  m.def("kostka_number",
        [](const std::vector<int>& shape, const std::vector<int>& content) {
          return kostka_number(as_partition(shape), as_partition(content));
        },
        py::arg("shape"), py::arg("content"));
  m.def("kostka_foulkes",
        [](const std::vector<int>& shape, const std::vector<int>& content) {
          return kostka_foulkes(as_partition(shape), as_partition(content));
        },
        py::arg("shape"), py::arg("content"),
        "Coefficients of the charge generating polynomial, constant term first.");
  m.def("coinvariant_dim_formula", &coinvariant_dim_formula, py::arg("r"), py::arg("e"));

  // ---- ideals and their verifications --------------------------------------
  m.def("coinvariant_dimension",
        [](int r, int e, const std::string& field) -> py::object {
          const Ideal restricted =
              diagonal_restriction(naive_special_ideal(r, e, Field::from_string(field)).ideal);
          const auto dim = quotient_dimension(restricted);
          if (!dim) return py::none();
          return py::cast(*dim);
        },
        py::arg("r"), py::arg("e"), py::arg("field") = "QQ",
        "Vector-space dimension of the one-variable restriction of the "
        "determinantal quotient; None when the quotient is not finite.");
  m.def("operator_ideal_equals_sigma",
        [](int r, const std::string& field) {
          const RingPtr ring = matrix_ring(Field::from_string(field), r);
          const PolyMatrix A = generic_matrix(ring);
          std::vector<Polynomial> gens;
          for (int t = 1; t <= r; ++t)
            for (const Polynomial& entry : S_operator(A, t, r + 1 - t).entries())
              gens.push_back(entry);
          return ideal_equal(Ideal(ring, gens), Ideal(ring, char_poly_coeffs(A)));
        },
        py::arg("r"), py::arg("field") = "QQ",
        "Whether the degree-(r+1) operator entries generate exactly the "
        "ideal of the r characteristic coefficients.");
  m.def("matrix_power_in_sigma",
        [](int r, int e, const std::string& field) {
          const RingPtr ring = matrix_ring(Field::from_string(field), r);
          const PolyMatrix A = generic_matrix(ring);
          const Ideal sigma(ring, char_poly_coeffs(A));
          for (const Polynomial& entry : A.pow(e).entries())
            if (!ideal_member(entry, sigma)) return false;
          return true;
        },
        py::arg("r"), py::arg("e"), py::arg("field") = "QQ",
        "Whether every entry of A^e lies in the ideal of characteristic "
        "coefficients of the generic r-by-r matrix A.");
  m.def("special_ideal_generators",
        [](int r, int e, const std::string& field) {
          return generator_list(naive_special_ideal(r, e, Field::from_string(field)));
        },
        py::arg("r"), py::arg("e"), py::arg("field") = "QQ",
        "Labelled generators (label, polynomial) of the special-fibre ideal.");
  m.def("dcp_ideal_generators",
        [](int r, const std::vector<int>& rvec, const std::string& field) {
          return generator_list(dcp_special_ideal(r, as_partition(rvec),
                                                  Field::from_string(field)));
        },
        py::arg("r"), py::arg("rvec"), py::arg("field") = "QQ");
  m.def("e2_ideal_generators",
        [](int r1, int r2, const std::string& field) {
          return generator_list(e2_ideal(r1, r2, Field::from_string(field)));
        },
        py::arg("r1"), py::arg("r2"), py::arg("field") = "QQ");
  m.def("generic_ideal_generators",
        [](const std::vector<std::pair<std::string, int>>& eigenvalues,
           const std::string& field) {
          std::vector<EigenvalueDatum> data;
          data.reserve(eigenvalues.size());
          for (const auto& [value, mult] : eigenvalues)
            data.push_back({parse_rational(value), mult});
          return generator_list(dcp_generic_ideal(data, Field::from_string(field)));
        },
        py::arg("eigenvalues"), py::arg("field") = "QQ",
        "Eigenvalues given as (value, multiplicity) pairs; values may be "
        "fractions like '1/2'.");

  // ---- finite-field enumeration --------------------------------------------
  m.def("springer_fiber_count",
        [](const std::vector<int>& jordan_type, const std::vector<int>& rvec, std::uint32_t p,
           std::uint64_t budget) {
          const Field field = Field::prime(p);
          const SpringerCount c = springer_fiber_count(
              jordan_matrix(as_partition(jordan_type), field), {as_partition(rvec)}, budget);
          return py::make_tuple(c.count, c.flags_enumerated);
        },
        py::arg("jordan_type"), py::arg("rvec"), py::arg("p"), py::arg("budget") = 0,
        "Number of fixed partial flags compatible with the nilpotent of the "
        "given Jordan type, and how many flags were enumerated.");
  m.def("lattice_stratify",
        [](const std::vector<int>& exponents, std::uint32_t p, int r, std::uint64_t budget) {
          return tally_dict(stratify(make_pi_module(Field::prime(p), exponents), r, budget));
        },
        py::arg("exponents"), py::arg("p"), py::arg("r"), py::arg("budget") = 0,
        "Tally of stratum labels over the points of the cyclic-module "
        "moduli with the given shift exponents.");
  m.def("homogeneous_stratify",
        [](int e, int d, std::uint32_t p, int r, std::uint64_t budget) {
          return tally_dict(stratify(homogeneous_pi_module(Field::prime(p), e, d), r, budget));
        },
        py::arg("e"), py::arg("d"), py::arg("p"), py::arg("r"), py::arg("budget") = 0);

  // ---- weight multiplicities ------------------------------------------------
  m.def("tensor_minuscule_decompose",
        [](int d, const std::vector<int>& rvec) {
          const WeightMultiplicityTable table = tensor_minuscule_decompose(d, as_partition(rvec));
          return tally_dict(table.entries);
        },
        py::arg("d"), py::arg("rvec"),
        "Highest weights with multiplicities in the product of fundamental "
        "representations selected by rvec.");
  m.def("nearby_cycle_multiplicity",
        [](const std::vector<int>& s, const std::vector<int>& rvec) {
          const NearbyMultiplicity nm =
              nearby_cycle_multiplicity(as_partition(s), as_partition(rvec));
          return py::make_tuple(nm.value, nm.outside_closure);
        },
        py::arg("s"), py::arg("rvec"),
        "Multiplicity attached to the stratum s, plus a flag marking labels "
        "outside the closure (where the multiplicity is zero).");
  m.def("character_multiplicity",
        [](const std::vector<int>& s, const std::vector<int>& rvec) {
          return character_multiplicity(as_partition(s), as_partition(rvec));
        },
        py::arg("s"), py::arg("rvec"));
  m.def("symmetric_group_character",
        [](const std::vector<int>& lam, const std::vector<int>& rho) {
          return symmetric_group_character(as_partition(lam), as_partition(rho));
        },
        py::arg("lam"), py::arg("rho"));
  m.def("hook_content_dimension",
        [](const std::vector<int>& lam, int d) {
          return big_int(hook_content_dimension(as_partition(lam), d));
        },
        py::arg("lam"), py::arg("d"));
  m.def("verify_tensor_vs_kostka",
        [](int d, const std::vector<int>& rvec) {
          return verify_tensor_vs_kostka(d, as_partition(rvec)).to_json();
        },
        py::arg("d"), py::arg("rvec"),
        "Run the tensor-table cross-checks and return the report as "
        "canonical JSON.");

  // ---- budgets ---------------------------------------------------------------
  m.def("set_all_budgets", &set_all_budgets, py::arg("budget"),
        "Cap every enumeration and basis computation at the given step "
        "count; 0 removes the cap.");
}
