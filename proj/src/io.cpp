#include "polyspace/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "polyspace/error.hpp"

namespace polyspace {

using nlohmann::json;

namespace {

std::string shortest(double x) { return json(x).dump(); }

json polygon_document(const Polygon& p) {
  json edges = json::array();
  for (const auto& e : p.edges) edges.push_back({e.x(), e.y(), e.z()});
  return {{"dim", p.dim},
          {"edges", std::move(edges)},
          {"meta", {{"alpha", side_lengths(p)}, {"diagonals", diagonals(p)}}}};
}

Polygon polygon_from_document(const json& doc, double tol) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("edges"))
    throw Error(ErrorCode::Parse, "polygon document needs \"dim\" and \"edges\"");
  const auto& jd = doc.at("dim");
  const auto& je = doc.at("edges");
  if (!jd.is_number_integer() || !je.is_array()) throw Error(ErrorCode::Parse, "malformed polygon document");
  const int dim = jd.get<int>();
  std::vector<Vec3> edges;
  for (const auto& row : je) {
    if (!row.is_array() || row.size() < 1 || row.size() > 3) throw Error(ErrorCode::Parse, "edge must have 1 to 3 coordinates");
    Vec3 e = Vec3::Zero();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_number()) throw Error(ErrorCode::Parse, "edge coordinates must be numbers");
      e[static_cast<Eigen::Index>(c)] = row[c].get<double>();
    }
    edges.push_back(e);
  }
  Polygon p;
  try {
    p = Polygon(dim, std::move(edges));
  } catch (const Error& err) {
    throw Error(ErrorCode::Parse, err.what());
  }
  if (closure_defect(p) > tol * perimeter(p)) throw Error(ErrorCode::NotClosed, "polygon is not closed");
  return p;
}

json rational_list(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

struct Viewport {
  double min_x, min_y, scale;
  double x(double v) const { return 40.0 + (v - min_x) * scale; }
  double y(double v) const { return 760.0 - (v - min_y) * scale; }
};

Viewport fit(const std::vector<std::pair<double, double>>& pts) {
  double x0 = pts.front().first, x1 = x0, y0 = pts.front().second, y1 = y0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  return {x0, y0, 720.0 / span};
}

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n"
         "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
}

std::string fixed(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

}  // namespace

double read_tolerance() {
  if (const char* env = std::getenv("POLYSPACE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return kReadTolerance;
}

std::string polygon_to_json(const Polygon& p) { return polygon_document(p).dump(); }

std::string polygons_to_json(const std::vector<Polygon>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(polygon_document(p));
  return out.dump();
}

Polygon polygon_from_json(std::string_view text, double tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return polygon_from_document(doc, tol);
}

std::string polygons_to_csv(const std::vector<Polygon>& ps) {
  std::string out = "polygon,edge,x,y,z\n";
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (int j = 0; j < ps[i].size(); ++j) {
      const Vec3& e = ps[i].edges[static_cast<std::size_t>(j)];
      out += std::to_string(i) + "," + std::to_string(j + 1) + "," + shortest(e.x()) + "," + shortest(e.y()) + "," +
             shortest(e.z()) + "\n";
    }
  return out;
}

std::string polytope_to_json(const RationalPolytope& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces) hs.push_back({{"normal", rational_list(h.normal)}, {"offset", format_rational(h.offset)}});
  json vs = json::array();
  for (const auto& v : p.vertices) vs.push_back(rational_list(v));
  json doc = {{"variables", p.variables}, {"halfspaces", std::move(hs)}, {"vertices", std::move(vs)},
              {"facets", p.facet_count}, {"generic", p.generic}};
  if (!p.equalities.empty()) {
    json eq = json::array();
    for (const auto& e : p.equalities) eq.push_back({{"normal", rational_list(e.normal)}, {"offset", format_rational(e.offset)}});
    doc["equalities"] = std::move(eq);
  }
  return doc.dump();
}

std::string polytope_to_csv(const RationalPolytope& p) {
  std::string out = "vertex";
  for (const auto& v : p.variables) out += "," + v;
  out += "\n";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    out += std::to_string(i + 1);
    for (const auto& x : p.vertices[i]) out += "," + format_rational(x);
    out += "\n";
  }
  return out;
}

std::string polygon_svg(const Polygon& p) {
  std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
  Vec3 v = Vec3::Zero();
  for (const auto& e : p.edges) {
    v += e;
    pts.emplace_back(v.x(), v.y());
  }
  const Viewport vp = fit(pts);
  std::string out = svg_open();
  out += "<path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += (i == 0 ? "M" : " L") + fixed(vp.x(pts[i].first)) + " " + fixed(vp.y(pts[i].second));
  out += " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    out += "<circle cx=\"" + fixed(vp.x(pts[i].first)) + "\" cy=\"" + fixed(vp.y(pts[i].second)) + "\" r=\"4\" fill=\"crimson\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string polytope_svg(const RationalPolytope& p) {
  if (p.dim < 1 || p.dim > 2) throw Error(ErrorCode::InvalidArgument, "SVG output needs a 1-D or 2-D polytope");
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : p.vertices) pts.emplace_back(to_double(v[0]), p.dim == 2 ? to_double(v[1]) : 0.0);
  const Viewport vp = fit(pts);
  std::string out = svg_open();
  out += "<path d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out += (i == 0 ? "M" : " L") + fixed(vp.x(pts[i].first)) + " " + fixed(vp.y(pts[i].second));
  out += " Z\" fill=\"lightsteelblue\" stroke=\"navy\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string cx = fixed(vp.x(pts[i].first));
    const std::string cy = fixed(vp.y(pts[i].second));
    std::string label = "(" + format_rational(p.vertices[i][0]);
    if (p.dim == 2) label += ", " + format_rational(p.vertices[i][1]);
    label += ")";
    out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"navy\"/>\n";
    out += "<text x=\"" + cx + "\" y=\"" + cy + "\" dx=\"6\" dy=\"-6\" font-size=\"14\">" + label + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polyspace
