#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyspace/bending.hpp"
#include "polyspace/error.hpp"
#include "polyspace/frames.hpp"
#include "polyspace/io.hpp"
#include "polyspace/polygon.hpp"
#include "polyspace/polytope.hpp"
#include "polyspace/reconstruct.hpp"
#include "polyspace/verify.hpp"

namespace py = pybind11;
namespace ps = polyspace;

namespace {

// Rationals cross the boundary as "p/q" strings.
ps::RationalVector to_rationals(const std::vector<std::string>& v) {
  ps::RationalVector out;
  for (const auto& s : v) out.push_back(ps::parse_rational(s));
  return out;
}

std::vector<std::string> to_strings(const ps::RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(ps::format_rational(r));
  return out;
}

ps::Polygon make_polygon(int dim, const std::vector<std::vector<double>>& edges) {
  std::vector<ps::Vec3> e;
  for (const auto& row : edges) {
    if (row.empty() || row.size() > 3) throw ps::Error(ps::ErrorCode::InvalidArgument, "edges need 1 to 3 coordinates");
    ps::Vec3 v = ps::Vec3::Zero();
    for (std::size_t c = 0; c < row.size(); ++c) v[static_cast<Eigen::Index>(c)] = row[c];
    e.push_back(v);
  }
  return ps::Polygon(dim, std::move(e));
}

std::vector<std::vector<double>> edges_of(const ps::Polygon& p) {
  std::vector<std::vector<double>> out;
  for (const auto& e : p.edges) out.push_back({e.x(), e.y(), e.z()});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Polygon spaces: Hopf map, frames, bending, exact moment polytopes";

  static py::exception<ps::Error> error(m, "PolyspaceError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ps::Error& e) {
      py::object code = py::str(ps::to_string(e.code()));
      PyErr_SetObject(error.ptr(), py::make_tuple(code, py::str(e.what())).ptr());
    }
  });

  py::class_<ps::Polygon>(m, "Polygon")
      .def(py::init(&make_polygon), py::arg("dim"), py::arg("edges"))
      .def_readonly("dim", &ps::Polygon::dim)
      .def_property_readonly("edges", &edges_of)
      .def("__len__", &ps::Polygon::size);

  m.def("hopf", [](ps::Complex u, ps::Complex v) { return ps::hopf_complex(u, v); }, py::arg("u"), py::arg("v"),
        "Hopf map of u + v j as (i, j, k) coordinates");
  m.def("hopf_section", [](const ps::Vec3& x) {
    const auto q = ps::hopf_section(x);
    return std::pair{q.u(), q.v()};
  });

  m.def("side_lengths", &ps::side_lengths);
  m.def("diagonals", &ps::diagonals);
  m.def("perimeter", &ps::perimeter);
  m.def("normalize", &ps::normalize);
  m.def("is_closed", [](const ps::Polygon& p) { return ps::is_closed(p); });
  m.def("is_lined", &ps::is_lined);
  m.def("is_prodigal", &ps::is_prodigal);
  m.def("is_generic_lengths", [](const std::vector<std::string>& a) { return ps::is_generic_lengths(to_rationals(a)); });
  m.def("enumerate_lined", [](const std::vector<std::string>& a) { return ps::enumerate_lined(to_rationals(a)); });

  m.def("bend", &ps::bend, py::arg("polygon"), py::arg("i"), py::arg("theta"));
  m.def("bend_range", [](const ps::Polygon& p, int a, int b, double t) { return ps::bend_range(p, {a, b}, t); },
        py::arg("polygon"), py::arg("p"), py::arg("q"), py::arg("theta"));
  m.def("bending_flow_sign", &ps::bending_flow_sign);

  m.def("frame_to_polygon", [](const ps::ComplexVector& a, const ps::ComplexVector& b) {
    return ps::frame_to_polygon(ps::Frame{a, b});
  });
  m.def("frame_from_polygon", [](const ps::Polygon& p) {
    const auto f = ps::frame_from_polygon(p);
    return std::pair{ps::ComplexVector(f.a), ps::ComplexVector(f.b)};
  });
  m.def("gc_pattern", [](const ps::ComplexVector& a, const ps::ComplexVector& b) {
    const auto g = ps::gc_pattern(ps::Frame{a, b});
    return std::pair{g.sum, g.diff};
  });

  m.def("diag_slice_vertices", [](const std::vector<std::string>& a) {
    std::vector<std::vector<std::string>> out;
    for (const auto& v : ps::diag_slice(to_rationals(a)).vertices) out.push_back(to_strings(v));
    return out;
  });
  m.def("polytope_json", [](const std::vector<std::string>& a, const std::string& system) {
    const auto alpha = to_rationals(a);
    return ps::polytope_to_json(system == "even" ? ps::even_step_polytope(alpha) : ps::diag_slice(alpha));
  }, py::arg("alpha"), py::arg("system") = "diag");
  m.def("classify", [](const std::vector<std::string>& a) {
    const auto alpha = to_rationals(a);
    const auto r = alpha.size() == 4 ? ps::classify_quadrilateral(alpha) : ps::classify_pentagon(alpha);
    py::dict d;
    d["m"] = r.m;
    d["sides"] = r.sides;
    d["row"] = r.row;
    d["orientable"] = r.orientable;
    d["spatial"] = r.spatial;
    d["planar"] = r.planar;
    d["planar_oriented"] = r.planar_oriented;
    d["euler_planar"] = r.euler_planar;
    return d;
  });

  m.def("reconstruct", [](const std::vector<std::string>& alpha, const std::vector<std::string>& delta, int k) {
    return ps::reconstruct(ps::ExactLDPoint{to_rationals(alpha), to_rationals(delta)}, k);
  }, py::arg("alpha"), py::arg("delta"), py::arg("k") = 3);
  m.def("section_sigma", [](const std::vector<std::string>& a) { return ps::section_sigma(to_rationals(a)); });
  m.def("sample_moduli", [](const std::vector<std::string>& a, int k, int count, std::uint64_t seed) {
    return ps::sample_moduli(to_rationals(a), k, count, seed);
  }, py::arg("alpha"), py::arg("k"), py::arg("count"), py::arg("seed") = 0);

  m.def("polygon_to_json", &ps::polygon_to_json);
  m.def("polygon_from_json", [](const std::string& s) { return ps::polygon_from_json(s); });
  m.def("verify", [](const std::string& suite, int trials, std::uint64_t seed) {
    return ps::reports_to_json(ps::run_verify(suite, trials, seed));
  }, py::arg("suite") = "all", py::arg("trials") = 10, py::arg("seed") = 0);
}
