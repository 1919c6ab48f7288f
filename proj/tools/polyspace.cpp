// Command-line front end: polytopes, classification, reconstruction, bending,
// sampling, sections and the verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyspace/bending.hpp"
#include "polyspace/error.hpp"
#include "polyspace/io.hpp"
#include "polyspace/polytope.hpp"
#include "polyspace/reconstruct.hpp"
#include "polyspace/verify.hpp"

namespace ps = polyspace;

namespace {

enum Exit : int { kOk = 0, kInputError = 1, kVerifyFailed = 2, kInfeasible = 3 };

int exit_code(ps::ErrorCode code) {
  switch (code) {
    case ps::ErrorCode::EmptyPolytope:
    case ps::ErrorCode::Degenerate:
    case ps::ErrorCode::NonGeneric:
    case ps::ErrorCode::TriangleViolation:
    case ps::ErrorCode::ZeroDiagonal:
    case ps::ErrorCode::ZeroPolygon:
    case ps::ErrorCode::NotInHypersimplex:
    case ps::ErrorCode::LeftProdigalRegion:
      return kInfeasible;
    default:
      return kInputError;
  }
}

ps::RationalVector parse_alpha(const std::string& csv) {
  ps::RationalVector alpha = ps::parse_rational_list(csv);
  for (const auto& a : alpha)
    if (a <= 0) throw ps::Error(ps::ErrorCode::Parse, "side lengths must be positive");
  return alpha;
}

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  for (const auto& r : ps::parse_rational_list(csv)) out.push_back(ps::to_double(r));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ps::Error(ps::ErrorCode::Parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ps::Error(ps::ErrorCode::Parse, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string classification_json(const ps::ClassificationReport& r) {
  nlohmann::json doc = {{"m", r.m},
                        {"generic", r.generic},
                        {"sides", r.sides},
                        {"row", r.row},
                        {"orientable", r.orientable},
                        {"spatial", r.spatial},
                        {"planar", r.planar},
                        {"planar_oriented", r.planar_oriented},
                        {"euler_planar", r.euler_planar}};
  return doc.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moduli spaces of polygons: polytopes, reconstruction, bending and checks"};
  app.require_subcommand(1);

  std::string alpha_csv, system = "diag", format = "json", svg_path;
  auto* polytope = app.add_subcommand("polytope", "Emit the moment polytope for side lengths alpha");
  polytope->add_option("--alpha", alpha_csv, "Side lengths, comma separated")->required();
  polytope->add_option("--system", system, "diag or even")->check(CLI::IsMember({"diag", "even"}));
  polytope->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  polytope->add_option("--svg", svg_path, "Also write an SVG drawing (dim <= 2)");

  auto* classify = app.add_subcommand("classify", "Classify the moduli spaces for m = 4 or 5");
  classify->add_option("--alpha", alpha_csv, "Side lengths, comma separated")->required();

  std::string diag_csv, angles_csv;
  int dim = 3;
  auto* reconstruct = app.add_subcommand("reconstruct", "Build a polygon from side lengths and diagonals");
  reconstruct->add_option("--alpha", alpha_csv, "Side lengths, comma separated")->required();
  reconstruct->add_option("--diag", diag_csv, "Free diagonals d_2..d_{m-2}, comma separated");
  reconstruct->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  reconstruct->add_option("--angles", angles_csv, "Fiber angles for d_2..d_{m-2} (dim 3)");

  std::string in_path, out_path, range_csv;
  double angle = 0.0;
  auto* bend = app.add_subcommand("bend", "Bend a polygon about the diagonal of edges p..q");
  bend->add_option("--in", in_path, "Polygon JSON file")->required();
  bend->add_option("--range", range_csv, "p,q (1-based, inclusive)")->required();
  bend->add_option("--angle", angle, "Angle in radians")->required();
  bend->add_option("--out", out_path, "Output file (default stdout)");

  int count = 1;
  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "Sample polygons with side lengths alpha");
  sample->add_option("--alpha", alpha_csv, "Side lengths, comma separated")->required();
  sample->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  sample->add_option("--count", count, "Number of polygons")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", seed, "Random seed");
  sample->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* section = app.add_subcommand("section", "Planar polygon with side lengths alpha in the hypersimplex");
  section->add_option("--alpha", alpha_csv, "Side lengths, comma separated")->required();

  std::string suite = "all";
  int trials = 100;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = ps::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_choices));
  verify->add_option("--trials", trials, "Trials per suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*polytope) {
      const auto alpha = parse_alpha(alpha_csv);
      const ps::RationalPolytope p = system == "even" ? ps::even_step_polytope(alpha) : ps::diag_slice(alpha);
      write_output("", format == "csv" ? ps::polytope_to_csv(p) : ps::polytope_to_json(p));
      if (!svg_path.empty()) write_output(svg_path, ps::polytope_svg(p));
    } else if (*classify) {
      const auto alpha = parse_alpha(alpha_csv);
      if (alpha.size() != 4 && alpha.size() != 5) {
        std::cerr << "classify supports m = 4 or m = 5\n";
        return kInputError;
      }
      const auto report = alpha.size() == 4 ? ps::classify_quadrilateral(alpha) : ps::classify_pentagon(alpha);
      write_output("", classification_json(report));
    } else if (*reconstruct) {
      ps::ExactLDPoint ld{parse_alpha(alpha_csv), diag_csv.empty() ? ps::RationalVector{} : ps::parse_rational_list(diag_csv)};
      ps::Polygon p;
      if (!angles_csv.empty()) {
        if (dim != 3) throw ps::Error(ps::ErrorCode::InvalidArgument, "--angles needs --dim 3");
        if (auto v = ps::first_violation(ld)) {
          throw ps::Error(ps::ErrorCode::TriangleViolation,
                          "triangle " + std::to_string(v->first) + " inequality " + std::to_string(v->second), v->first);
        }
        p = ps::fiber_sample(ld.to_double(), parse_doubles(angles_csv));
      } else {
        p = ps::reconstruct(ld, dim);
      }
      write_output("", ps::polygon_to_json(p));
    } else if (*bend) {
      const ps::Polygon p = ps::polygon_from_json(read_file(in_path));
      const auto r = ps::parse_rational_list(range_csv);
      if (r.size() != 2 || denominator(r[0]) != 1 || denominator(r[1]) != 1)
        throw ps::Error(ps::ErrorCode::Parse, "--range expects two integers p,q");
      const ps::DiagonalRange range{static_cast<int>(numerator(r[0])), static_cast<int>(numerator(r[1]))};
      write_output(out_path, ps::polygon_to_json(ps::bend_range(p, range, angle)));
    } else if (*sample) {
      const auto polys = ps::sample_moduli(parse_alpha(alpha_csv), dim, count, seed);
      write_output("", format == "csv" ? ps::polygons_to_csv(polys) : ps::polygons_to_json(polys));
    } else if (*section) {
      const auto alpha = ps::parse_rational_list(alpha_csv);
      write_output("", ps::polygon_to_json(ps::section_sigma(alpha)));
    } else if (*verify) {
      const auto reports = ps::run_verify(suite, trials, seed);
      write_output("", ps::reports_to_json(reports));
      for (const auto& r : reports)
        if (!r.passed()) return kVerifyFailed;
    }
  } catch (const ps::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
