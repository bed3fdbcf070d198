#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/ehp.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/expressions.hpp"
#include "ehpcalc/homology.hpp"
#include "ehpcalc/james.hpp"
#include "ehpcalc/milnor_witt.hpp"
#include "ehpcalc/sheaf.hpp"

namespace py = pybind11;
using namespace ehpcalc;

namespace {

py::dict homology_dict(const HomologyMap& h) {
  py::dict out;
  for (const auto& [degree, group] : h) {
    std::vector<std::string> torsion;
    for (const auto& t : group.torsion) torsion.push_back(t.get_str());
    out[py::int_(degree)] = py::make_tuple(group.free_rank, torsion);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simplicial James constructions, quadratic forms and EHP bookkeeping";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, (e.kind() + ": " + e.what()).c_str());
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    }
  });

  m.def(
      "counts", [](const std::string& space) { return parse_space(space).counts(); }, py::arg("space"),
      "Nondegenerate simplices per dimension.");
  m.def(
      "reduced_homology", [](const std::string& space) { return homology_dict(reduced_homology(parse_space(space))); },
      py::arg("space"), "Reduced integral homology as {degree: (rank, [torsion])}.");
  m.def(
      "homology", [](const std::string& space) { return homology_dict(integral_homology(parse_space(space))); },
      py::arg("space"));
  m.def(
      "quotient_is_smash_power",
      [](const std::string& space, int n) { return james_quotient(parse_space(space), n).witness.isomorphic; },
      py::arg("space"), py::arg("n"));

  m.def("hopf_word", &james_hopf_symbolic, py::arg("letters"), py::arg("r"),
        "James-Hopf invariant of a word of symbolic letters; '*' is the basepoint.");
  m.def("increasing_index_tuples", &increasing_index_tuples, py::arg("q"), py::arg("r"));

  m.def(
      "gw_normal_form", [](const std::string& field, const std::string& expr) {
        return parse_gw(parse_field(field), expr).to_string();
      },
      py::arg("field"), py::arg("expr"));
  m.def(
      "gw_equal",
      [](const std::string& field, const std::string& a, const std::string& b) {
        const Field f = parse_field(field);
        return verdict_to_string(gw_equal(parse_gw(f, a), parse_gw(f, b)));
      },
      py::arg("field"), py::arg("a"), py::arg("b"));
  m.def(
      "gw_invariants",
      [](const std::string& field, const std::string& expr) {
        const auto inv = gw_invariants(parse_gw(parse_field(field), expr));
        return py::make_tuple(inv.rank, inv.signature);
      },
      py::arg("field"), py::arg("expr"), "(rank, signature or None)");
  m.def(
      "kmw_equal",
      [](const std::string& field, const std::string& a, const std::string& b) {
        const Field f = parse_field(field);
        return verdict_to_string(kmw_equal(parse_kmw(f, a), parse_kmw(f, b)));
      },
      py::arg("field"), py::arg("a"), py::arg("b"));

  m.def(
      "sheaf", [](const std::string& expr) { return evaluate(parse_sheaf(expr)).to_string(); }, py::arg("expr"),
      "Evaluate contractions and A1-tensor products, e.g. 'KMW(2) (x) KMW(3)'.");

  m.def(
      "exchange_degree",
      [](int p, int q, const std::string& field) { return exchange_degree(p, q, parse_field(field)).to_string(); },
      py::arg("p"), py::arg("q"), py::arg("field") = "qc");
  m.def(
      "hp_differential",
      [](int p, int q, const std::string& field) {
        const auto r = hp_differential(p, q, parse_field(field));
        return py::make_tuple(r.case_label, r.value.to_string());
      },
      py::arg("p"), py::arg("q"), py::arg("field") = "qc", "(case label, GW element)");
  m.def(
      "hp_invariants",
      [](int p, int q) {
        const auto r = hp_invariant_report(p, q);
        return py::make_tuple(r.rank, r.signature);
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "ehp_sequence",
      [](const std::string& sphere, const std::string& mode) {
        const EHPMode md = mode == "full_range" ? EHPMode::FullRange : EHPMode::LowDegree;
        if (mode != "full_range" && mode != "low_degree") throw ParseError("unknown mode '" + mode + "'");
        return ehp_sequence_report(parse_sphere(sphere), md).display();
      },
      py::arg("sphere"), py::arg("mode") = "low_degree");
  m.def(
      "degree",
      [](const std::string& map, const std::string& x, const std::string& y) {
        const Field q = Field::rationals();
        return degree_by_signed_preimages(parse_plane_map_chain(map), parse_unit(q, x).value, parse_unit(q, y).value)
            .degree;
      },
      py::arg("map"), py::arg("x"), py::arg("y"));
  m.def(
      "known_result",
      [](const std::string& key) -> std::optional<std::string> {
        auto r = lookup_known_result(key);
        if (!r) return std::nullopt;
        return r->value;
      },
      py::arg("key"));
}
