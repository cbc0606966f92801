#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polarnd/cfrac.hpp"
#include "polarnd/cli.hpp"
#include "polarnd/error.hpp"
#include "polarnd/genus1.hpp"
#include "polarnd/genus2.hpp"
#include "polarnd/puiseux.hpp"
#include "polarnd/verify.hpp"

namespace py = pybind11;
using namespace polarnd;

namespace {

py::dict topology_dict(const TopologyReport& raw) {
  const TopologyReport t = raw.canonical();
  py::list branches;
  for (const auto& b : t.branches) {
    branches.append(py::dict(py::arg("a0") = b.a0, py::arg("a1") = b.a1, py::arg("count") = b.count));
  }
  return py::dict(py::arg("branches") = branches, py::arg("intersections") = t.intersections);
}

py::list polygon_list(const NewtonPolygon& np) {
  py::list sides;
  for (const Side& s : np.sides) {
    sides.append(py::dict(py::arg("from") = py::make_tuple(s.from.i, s.from.j),
                          py::arg("to") = py::make_tuple(s.to.i, s.to.j), py::arg("n") = s.n,
                          py::arg("m") = s.m, py::arg("gcd") = s.d));
  }
  return sides;
}

PolarParams params(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (!a && !b) return PolarParams::symbolic();
  if (!a || !b) throw PreconditionError("give both a and b, or neither");
  return PolarParams::concrete(parse_rational(*a), parse_rational(*b));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "PolarndError", PyExc_ValueError);

  m.attr("__version__") = version();

  m.def("continued_fraction", [](long q, long p) { return continued_fraction(q, p).h; }, py::arg("q"),
        py::arg("p"));
  m.def(
      "convergents",
      [](long q, long p) {
        std::vector<std::pair<long, long>> out;
        for (const auto& c : convergents(continued_fraction(q, p))) out.emplace_back(c.p, c.q);
        return out;
      },
      py::arg("q"), py::arg("p"));

  m.def("locus_g1", [](int p, int q) { return genus1::degeneracy_locus(p, q).rendered(); }, py::arg("p"),
        py::arg("q"));
  m.def("locus_g2", [](int p, int q, int d) { return genus2::degeneracy_locus(p, q, d).rendered(); },
        py::arg("p"), py::arg("q"), py::arg("d"));
  m.def("topology_g1", [](int p, int q) { return topology_dict(genus1::predicted_topology(p, q)); },
        py::arg("p"), py::arg("q"));
  m.def("topology_g2", [](int p, int q, int d) { return topology_dict(genus2::predicted_topology(p, q, d)); },
        py::arg("p"), py::arg("q"), py::arg("d"));

  // a, b as rational strings; omit both for symbolic (a:b)
  m.def(
      "polar",
      [](const std::string& expr, std::optional<std::string> a, std::optional<std::string> b) {
        return polar(parse_series(expr), params(a, b)).poly.to_string();
      },
      py::arg("expr"), py::arg("a") = py::none(), py::arg("b") = py::none());
  m.def("newton_polygon", [](const std::string& expr) { return polygon_list(newton_polygon(parse_series(expr))); },
        py::arg("expr"));
  m.def("is_nondegenerate",
        [](const std::string& expr) { return is_nondegenerate(parse_series(expr)).nondegenerate(); },
        py::arg("expr"));
  m.def("oka_topology", [](const std::string& expr) { return topology_dict(oka_decomposition(parse_series(expr))); },
        py::arg("expr"));

  m.def(
      "puiseux",
      [](const std::string& expr) {
        const PuiseuxResult r = puiseux_expand(parse_series(expr));
        py::list out;
        for (const auto& b : r.branches) {
          out.append(py::dict(py::arg("n") = b.n, py::arg("multiplicity") = b.multiplicity,
                              py::arg("char_exponents") = b.char_exponents, py::arg("genus") = b.genus,
                              py::arg("semigroup") = b.semigroup ? b.semigroup->generators : std::vector<long>{},
                              py::arg("residual") = b.residual, py::arg("series") = b.to_string()));
        }
        return out;
      },
      py::arg("expr"));

  m.def(
      "classify",
      [](std::vector<long> generators) {
        const auto c = genus2::classify_nondegenerate({std::move(generators)});
        return py::dict(py::arg("nondegenerate") = c.nondegenerate, py::arg("genus") = c.genus,
                        py::arg("reason") = c.reason);
      },
      py::arg("generators"));
  m.def("semigroup_from_char", [](const std::vector<long>& c) { return semigroup_from_char(c).generators; },
        py::arg("char_exponents"));

  m.def(
      "verify_json",
      [](int p, int q, std::optional<int> d, int e1, int trials, std::uint64_t seed, int range) {
        SampleConfig cfg;
        cfg.family = {p, q, d, e1};
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.coeff_range = range;
        return run_verification(cfg).to_json();
      },
      py::arg("p"), py::arg("q"), py::arg("d") = py::none(), py::arg("e1") = 2, py::arg("trials") = 50,
      py::arg("seed") = 42, py::arg("range") = 10);

  // the command line, in process
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
