#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepindex/complex.hpp"
#include "sepindex/enumeration.hpp"
#include "sepindex/error.hpp"
#include "sepindex/facets_io.hpp"
#include "sepindex/homology.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/separation.hpp"

namespace py = pybind11;
using namespace sepindex;

namespace {

py::object fraction(const Rational& r) {
  const py::object Fraction = py::module_::import("fractions").attr("Fraction");
  const py::int_ num(py::str(numerator_of(r).str()));
  const py::int_ den(py::str(denominator_of(r).str()));
  return Fraction(num, den);
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(fraction(v));
  return out;
}

Graph graph_from_edges(int n, const std::vector<std::array<Vertex, 2>>& edges) {
  return Graph::from_edges(n, edges);
}

std::array<Vertex, 3> triple(const std::vector<Vertex>& f) {
  if (f.size() != 3) throw InputError("expected three vertices");
  return {f[0], f[1], f[2]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separation index of triangulated 2-spheres and tightness of 3-manifolds";

  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap_exceeded, e.what());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Complex>(m, "Complex")
      .def(py::init([](int n, std::vector<Simplex> facets, bool strict) {
             for (auto& f : facets) std::sort(f.begin(), f.end());
             return Complex::from_facets(n, std::move(facets), strict);
           }),
           py::arg("n"), py::arg("facets"), py::arg("strict") = true)
      .def_property_readonly("num_vertices", &Complex::num_vertices)
      .def_property_readonly("dim", &Complex::dim)
      .def_property_readonly("facets", &Complex::facets)
      .def("f_vector", [](const Complex& x) { return f_vector(x).counts; })
      .def("edges", [](const Complex& x) { return x.faces(1); })
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& x) {
        return "<Complex n=" + std::to_string(x.num_vertices()) + " facets=" + std::to_string(x.facets().size()) + ">";
      });

  m.def("read_facets", [](const std::string& text, bool strict) { return read_facets(text, strict); },
        py::arg("text"), py::arg("strict") = false);
  m.def("write_facets", &write_facets);

  m.def("standard_sphere", &standard_sphere, py::arg("d"));
  m.def("octahedron", &octahedron);
  m.def("cyclic_polytope_boundary", &cyclic_polytope_boundary, py::arg("n"));
  m.def("build_stacked", [](int n, std::uint64_t seed) { return build_stacked(n, seed).first; }, py::arg("n"),
        py::arg("seed"));

  m.def("is_triangulated_2sphere", &is_triangulated_2sphere);
  m.def("is_flag", &is_flag);
  m.def("is_stacked", &is_stacked);
  m.def("is_neighbourly", &is_neighbourly);

  m.def(
      "separation_index",
      [](const Complex& x, int cap, int threads) { return fraction(separation_of(x, {cap, threads})); },
      py::arg("complex"), py::arg("cap") = kDefaultSeparationCap, py::arg("threads") = 0,
      "Exact separation index of the 1-skeleton, as a Fraction.");
  m.def(
      "graph_separation_index",
      [](int n, const std::vector<std::array<Vertex, 2>>& edges, bool fast, int threads) {
        const Graph g = graph_from_edges(n, edges);
        const SeparationProfile p = fast ? separation_index_fast(g, {kDefaultFastSeparationCap, threads})
                                         : separation_index(g, {kDefaultSeparationCap, threads});
        return fraction(p.s);
      },
      py::arg("n"), py::arg("edges"), py::arg("fast") = false, py::arg("threads") = 0);
  m.def(
      "separation_profile",
      [](const Complex& x) { return fractions(separation_index(one_skeleton(x)).s_i); }, py::arg("complex"));
  m.def("stacked_value", [](int n) { return fraction(stacked_value(n)); }, py::arg("n"));

  m.def(
      "star_vertex", [](const Complex& x, const std::vector<Vertex>& f) { return star_vertex(x, triple(f)).complex; },
      py::arg("complex"), py::arg("facet"));
  m.def(
      "edge_flip",
      [](const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac) { return edge_flip(x, bd, ac).complex; },
      py::arg("complex"), py::arg("old_edge"), py::arg("new_edge"));
  m.def(
      "reduce_to_s24", [](const Complex& x) { return to_log(reduce_to_s24(x).records); }, py::arg("complex"),
      "Move log rebuilding the sphere from S^2_4.");
  m.def(
      "replay",
      [](const std::string& log, std::optional<Complex> start) {
        return replay({start ? *start : standard_sphere(2), parse_log(log)});
      },
      py::arg("log"), py::arg("start") = py::none());

  m.def("canonical_code", [](const Complex& x) { return canonical_code(x).hex(); });
  m.def(
      "census",
      [](int n, int threads) {
        Census c;
        {
          py::gil_scoped_release release;
          c = enumerate_spheres(n, {kDefaultCensusCap, threads, Generation::Lemma});
          annotate(c, threads);
        }
        py::list out;
        for (std::size_t i = 0; i < c.size(); ++i) {
          py::dict row;
          row["code"] = c.codes[i].hex();
          row["s"] = fraction(c.annotations[i].s);
          row["stacked"] = c.annotations[i].stacked;
          row["flag"] = c.annotations[i].flag;
          out.append(row);
        }
        return out;
      },
      py::arg("n"), py::arg("threads") = 0, "All n-vertex 2-spheres up to isomorphism, annotated.");
  m.def("decode", [](const std::string& hex) { return decode(CanonicalCode::from_hex(hex)); });

  m.def("betti", [](const Complex& x) { return betti_z2(x).beta; });
  m.def("mu_vector", [](const Complex& x) { return fractions(mu_vector(x)); });
  m.def("mu1_via_links", [](const Complex& x) { return fraction(mu1_via_links(x)); });
  m.def("in_walkup_K3", &in_walkup_K3);
  m.def("is_tight_neighbourly", &is_tight_neighbourly);
  m.def(
      "is_tight", [](const Complex& x, int threads) { return is_tight_bruteforce(x, {kDefaultTightCap, threads}); },
      py::arg("complex"), py::arg("threads") = 0);
  m.def(
      "manifold_report",
      [](const Complex& x, bool brute) {
        return py::module_::import("json").attr("loads")(report_json(verify_theorem3(x, brute)));
      },
      py::arg("complex"), py::arg("tight_bruteforce") = false);
}
