#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccs/algebraic_iso.hpp"
#include "ccs/automorphism.hpp"
#include "ccs/serialize.hpp"
#include "ccs/verify.hpp"

namespace py = pybind11;
using namespace ccs;

namespace {

Scheme paper_scheme(int p, const std::string& fusion, bool override_max_p) {
  PaperGroupOptions o;
  o.override_max_p = override_max_p;
  const auto b = build_paper_group(p, o);
  return cayley_scheme(fusion_partition(b, fusion.empty() ? FusionLevel::full() : parse_fusion_level(fusion)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coherent configurations and Schur rings";
  m.attr("__version__") = CCS_VERSION;
  py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Scheme>(m, "Scheme")
      .def_property_readonly("degree", &Scheme::degree)
      .def_property_readonly("rank", &Scheme::rank)
      .def("color", &Scheme::color, py::arg("a"), py::arg("b"))
      .def("colors", [](const Scheme& s) { return std::vector<int>(s.colors().begin(), s.colors().end()); })
      .def("valency", &Scheme::valency)
      .def("transpose", &Scheme::transpose)
      .def("is_association_scheme", &Scheme::is_association_scheme)
      .def("to_json", [](const Scheme& s) { return scheme_to_json(s).dump(); })
      .def("__eq__", [](const Scheme& a, const Scheme& b) { return a == b; })
      .def("__repr__", [](const Scheme& s) {
        return "<Scheme degree=" + std::to_string(s.degree()) + " rank=" + std::to_string(s.rank()) + ">";
      });

  m.def("paper_scheme", &paper_scheme, py::arg("p"), py::arg("fusion") = "", py::arg("override_max_p") = false,
        "Cayley scheme of the basic-set partition (or one of its fusions) for the prime p.");
  m.def("scheme_from_colors", &Scheme::from_colors, py::arg("degree"), py::arg("colors"));
  m.def("scheme_from_json", [](const std::string& text) { return scheme_from_json(Json::parse(text)); });
  m.def(
      "wl_stabilize",
      [](int degree, const std::vector<int>& colors) {
        if (colors.size() != static_cast<std::size_t>(degree) * degree)
          throw std::invalid_argument("colors must have degree^2 entries");
        return wl_stabilize(degree, colors);
      },
      py::arg("degree"), py::arg("colors"));
  m.def("is_wl_stable", [](const Scheme& s) { return is_wl_stable(s.degree(), s.colors()); });
  m.def("tensor_json", [](const Scheme& s) { return tensor_to_json(intersection_tensor(s)).dump(); });
  m.def("is_fusion", py::overload_cast<const Scheme&, const Scheme&>(&is_fusion), py::arg("coarse"), py::arg("fine"));
  m.def("meet", &meet_schemes);
  m.def(
      "automorphism_group_json",
      [](const Scheme& s, long long budget) {
        py::gil_scoped_release release;
        return perm_group_to_json(automorphism_group(s, nullptr, budget)).dump();
      },
      py::arg("scheme"), py::arg("budget") = kDefaultSearchBudget);
  m.def(
      "schurity",
      [](const Scheme& s, long long budget) {
        SchurityResult r;
        {
          py::gil_scoped_release release;
          r = is_schurian(s, nullptr, budget);
        }
        return py::make_tuple(r.schurian, r.witness_color, r.witness_size, r.orbit_rank);
      },
      py::arg("scheme"), py::arg("budget") = kDefaultSearchBudget,
      "(schurian, witness_color, witness_size, orbit_rank)");
  m.def(
      "separability_audit_json",
      [](const Scheme& s, long long budget) {
        py::gil_scoped_release release;
        return audit_to_json(separability_audit(s, budget), "scheme").dump();
      },
      py::arg("scheme"), py::arg("budget") = kDefaultSearchBudget);
  m.def(
      "verify_json",
      [](int p, const std::string& fusion, const std::string& lemma, long long budget) {
        VerifyOptions o;
        o.p = p;
        if (!fusion.empty()) o.fusion = parse_fusion_level(fusion);
        o.lemma = lemma;
        o.budget = budget;
        py::gil_scoped_release release;
        return verification_to_json(run_verification(o), o).dump();
      },
      py::arg("p"), py::arg("fusion") = "", py::arg("lemma") = "", py::arg("budget") = kDefaultSearchBudget);
  m.def("candidate_involutions", [](const std::string& name, int p) {
    const auto g = build_candidate_group(parse_candidate_kind(name), p);
    const auto census = order_census(g);
    return census.count(2) ? census.at(2) : 0;
  });
}
