// Python bindings. Rationals cross the boundary as strings ("3/2", "inf");
// the tropgrass package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tropgrass/complex.hpp"
#include "tropgrass/exactalg/ideal.hpp"
#include "tropgrass/exactalg/plucker.hpp"
#include "tropgrass/g36.hpp"
#include "tropgrass/minplus.hpp"
#include "tropgrass/treespace.hpp"
#include "tropgrass/troplin.hpp"

namespace py = pybind11;
using namespace tropgrass;

namespace {

using Coords = std::map<std::string, std::string>;

std::string subset_name(Subset s) {
  std::string out;
  for (int i : elements(s)) out += std::to_string(i);
  return out;
}

PlueckerVector to_vector(int d, int n, const Coords& coords) {
  PlueckerVector w(d, n, ExtReal::infinity());
  std::size_t seen = 0;
  for (Subset s : k_subsets(n, d)) {
    auto it = coords.find(subset_name(s));
    if (it == coords.end()) throw std::invalid_argument("missing coordinate " + subset_name(s));
    w.set(s, parse_ext_real(it->second));
    ++seen;
  }
  if (seen != coords.size()) throw std::invalid_argument("unexpected coordinate names");
  return w;
}

Coords from_vector(const PlueckerVector& w) {
  Coords out;
  for (Subset s : k_subsets(w.n(), w.d())) out[subset_name(s)] = to_string(w.at(s));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational(x));
  return out;
}

std::vector<std::string> strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_tropgrass, m) {
  m.doc() = "Exact computations on tropical Grassmannians";

  m.def("tropical_minors", [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<ExtReal>> a;
    for (const auto& r : rows) {
      a.emplace_back();
      for (const auto& x : r) a.back().push_back(parse_ext_real(x));
    }
    return from_vector(tropical_minors(TropMatrix(a)));
  });

  m.def("tn_stats", [](int n) {
    auto st = tn_stats(n);
    py::dict out;
    out["vertices"] = st.vertices;
    out["facets"] = st.facets;
    out["f_vector"] = st.f_vector;
    out["pure"] = st.pure;
    return out;
  });
  m.def("tn_betti", [](int n) { return homology(tn_complex(n)).betti; });

  m.def("four_point_check", [](int n, const Coords& w) -> py::object {
    auto r = four_point_check(to_vector(2, n, w));
    if (r.ok) return py::none();
    return py::cast(std::vector<int>(r.violation->begin(), r.violation->end()));
  });
  m.def("reconstruct_tree", [](int n, const Coords& w) {
    auto t = additive_linkage(to_vector(2, n, w));
    py::dict out;
    std::vector<std::string> splits;
    for (const auto& s : t.splits) splits.push_back(s.name());
    out["splits"] = splits;
    out["lengths"] = strings(t.lengths);
    out["offsets"] = strings(t.offsets);
    out["newick"] = to_newick(t);
    return out;
  });
  m.def("tree_vector", [](int n, const std::vector<std::string>& splits) {
    return from_vector(tree_to_plucker(tree_from_splits(n, splits)));
  });

  m.def("plane_member", [](int d, int n, const Coords& w, const std::vector<std::string>& x) {
    return troplin::TropicalPlane(to_vector(d, n, w)).member(rationals(x));
  });
  m.def("plane_type", [](int d, int n, const Coords& w) {
    std::vector<std::string> out;
    for (const auto& p : troplin::plane_type(troplin::TropicalPlane(to_vector(d, n, w)))) out.push_back(p.name());
    return out;
  });
  m.def("dual", [](int d, int n, const Coords& w) { return from_vector(troplin::dual(to_vector(d, n, w))); });
  m.def("reconstruct_plucker", [](int d, int n, const Coords& w, const std::string& bound) {
    auto v = to_vector(d, n, w);
    return from_vector(troplin::reconstruct_plucker(troplin::TropicalPlane(v), d, n, parse_rational(bound)));
  });
  m.def("equal_mod_phi", [](int d, int n, const Coords& a, const Coords& b) {
    return equal_mod_phi(to_vector(d, n, a), to_vector(d, n, b));
  });

  m.def(
      "is_monomial_free",
      [](int d, int n, const Coords& w, unsigned characteristic) {
        alg::Field f(characteristic);
        alg::Ideal I(alg::plucker_ring(d, n, f), alg::plucker_generators(d, n, f));
        return alg::is_monomial_free(I, to_vector(d, n, w).finite_values()).monomial_free;
      },
      py::arg("d"), py::arg("n"), py::arg("w"), py::arg("characteristic") = 0);

  m.def("g36_f_vector", [] { return g36::build_g36().f_vector(); });
  m.def("g36_facet_census", [] { return g36::facet_census(g36::build_g36()); });
  m.def("g36_sample", [](const std::string& cls) { return from_vector(g36::facet_cone_sample(cls)); });
  m.def("g36_facet_classes", [] { return g36::facet_class_names(); });

  py::register_exception<troplin::ReconstructionError>(m, "ReconstructionError", PyExc_RuntimeError);
  py::register_exception<FourPointViolation>(m, "FourPointViolation", PyExc_ValueError);
}
