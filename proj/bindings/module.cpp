#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "cpsat/clausepoly.hpp"
#include "cpsat/engine.hpp"
#include "cpsat/formula.hpp"
#include "cpsat/oracle.hpp"

namespace py = pybind11;

namespace {

cpsat::SolveMode mode_from(const std::string& mode) {
  if (mode == "paper") return cpsat::SolveMode::Paper;
  if (mode == "hybrid") return cpsat::SolveMode::Hybrid;
  throw std::invalid_argument("mode must be 'hybrid' or 'paper'");
}

cpsat::SolverConfig make_config(const std::string& mode, int primes,
                                std::uint64_t seed) {
  cpsat::SolverConfig cfg;
  cfg.mode = mode_from(mode);
  cfg.primeCount = primes;
  cfg.basePointSeed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(cpsat, m) {
  m.doc() = "finite-field clause-polynomial satisfiability toolkit";

  py::class_<cpsat::Formula>(m, "Formula")
      .def_readonly("variables", &cpsat::Formula::V)
      .def_property_readonly("clauses",
                             [](const cpsat::Formula& f) { return f.n(); })
      .def("__repr__", [](const cpsat::Formula& f) {
        return "<Formula variables=" + std::to_string(f.V) +
               " clauses=" + std::to_string(f.n()) + ">";
      });

  m.def(
      "parse_dimacs",
      [](const std::string& text) { return cpsat::parse_dimacs(text); },
      py::arg("text"), "Parse DIMACS CNF text into a Formula.");
  m.def("serialize_dimacs", &cpsat::serialize_dimacs, py::arg("formula"),
        "Render a Formula back to DIMACS CNF text.");
  m.def("random_ksat", &cpsat::random_ksat, py::arg("variables"),
        py::arg("clauses"), py::arg("k"), py::arg("seed"),
        "Seeded random k-SAT instance with distinct variables per clause.");
  m.def(
      "model_count",
      [](const cpsat::Formula& f) { return cpsat::model_count(f); },
      py::arg("formula"), "Exact model count by exhaustive enumeration.");
  m.def(
      "enumerate_profile",
      [](const cpsat::Formula& f) { return cpsat::enumerate_profile(f).counts; },
      py::arg("formula"),
      "counts[j] = number of assignments satisfying exactly j clauses.");
  m.def(
      "next_prime",
      [](std::uint64_t bound) { return cpsat::next_prime(bound).value(); },
      py::arg("bound"), "Smallest prime strictly greater than bound.");
  m.def(
      "clause_poly_coeffs",
      [](const std::string& spec, int variables, std::uint64_t p) {
        const cpsat::DensePoly poly = cpsat::clause_poly(
            cpsat::parse_clause_spec(spec), variables, cpsat::Prime(p));
        return poly.residues();
      },
      py::arg("spec"), py::arg("variables"), py::arg("p"),
      "Indicator coefficients of a clause over the full assignment space.");
  m.def(
      "eval_clause",
      [](const std::string& spec, int variables, std::uint64_t x,
         std::uint64_t p, int doubling) {
        const cpsat::Prime prime(p);
        return cpsat::eval_clause_at(cpsat::parse_clause_spec(spec), variables,
                                     cpsat::FieldElement(x, prime), doubling)
            .value.residue();
      },
      py::arg("spec"), py::arg("variables"), py::arg("x"), py::arg("p"),
      py::arg("doubling") = 0,
      "Scalar clause-polynomial value at x^(2^doubling) without building "
      "coefficients.");
  m.def(
      "solve",
      [](const cpsat::Formula& f, const std::string& mode, int primes,
         std::uint64_t seed) {
        const cpsat::Decision d =
            cpsat::decide(f, make_config(mode, primes, seed));
        py::dict out;
        out["verdict"] = cpsat::to_string(d.verdict);
        out["error_bound"] = d.errorBound;
        py::list evidence;
        for (const cpsat::PrimeEvidence& ev : d.evidence) {
          py::dict e;
          e["prime"] = ev.prime;
          e["base_point"] = ev.basePoint;
          if (ev.rootValue) {
            e["root_value"] = *ev.rootValue;
          } else {
            e["root_value"] = py::none();
          }
          e["leaf_evaluations"] = ev.stats.leafEvaluations;
          e["singular_combiners"] = ev.stats.singularCombiners;
          e["unique_combiners"] = ev.stats.uniqueCombiners;
          e["zero_events"] = ev.stats.zeroEvents.size();
          e["zero_event_unresolved"] = ev.zeroEventUnresolved;
          evidence.append(e);
        }
        out["evidence"] = evidence;
        return out;
      },
      py::arg("formula"), py::arg("mode") = "hybrid", py::arg("primes") = 1,
      py::arg("seed") = 1,
      "Decide satisfiability; returns verdict, error bound and per-prime "
      "evidence.");
  m.def(
      "extract_certificate",
      [](const cpsat::Formula& f, const std::string& mode, int primes,
         std::uint64_t seed) -> py::object {
        const cpsat::CertificateResult r =
            cpsat::extract_certificate(f, make_config(mode, primes, seed));
        if (!r.assignment) return py::none();
        py::list values;
        for (const bool v : r.assignment->values) values.append(v);
        return values;
      },
      py::arg("formula"), py::arg("mode") = "hybrid", py::arg("primes") = 1,
      py::arg("seed") = 1,
      "Verified satisfying assignment (list of bools) or None when extraction "
      "stalls.");
}
