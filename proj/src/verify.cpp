#include "polyspace/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <json.hpp>

#include "polyspace/bending.hpp"
#include "polyspace/error.hpp"
#include "polyspace/frames.hpp"
#include "polyspace/polytope.hpp"
#include "polyspace/random.hpp"
#include "polyspace/reconstruct.hpp"

namespace polyspace {

namespace {

class Checker {
 public:
  explicit Checker(RunReport& report) : report_(report) {}

  void check(const std::string& case_id, double deviation, double tolerance) {
    const double ratio = tolerance > 0.0 ? deviation / tolerance : (deviation > 0.0 ? INFINITY : 0.0);
    if (!std::isnan(ratio)) report_.worst_ratio = std::max(report_.worst_ratio, ratio);
    if (!(deviation <= tolerance)) {
      ++report_.failure_count;
      if (report_.failures.size() < kMaxListedFailures) report_.failures.push_back({case_id, deviation, tolerance});
    }
  }

 private:
  RunReport& report_;
};

using TrialFn = std::function<void(int trial, Rng& rng, Checker& check)>;

std::string tag(int trial, const std::string& what) { return std::to_string(trial) + ":" + what; }

Quaternion random_quaternion(Rng& rng) { return {normal(rng), normal(rng), normal(rng), normal(rng)}; }

void hopf_trial(int trial, Rng& rng, Checker& check) {
  const Quaternion q = random_quaternion(rng);
  const Unitary2 p = random_unitary(rng);
  const Vec3 lhs = hopf(act_right(q, p));
  const Vec3 rhs = conjugate_imaginary(hopf(q), p);
  check.check(tag(trial, "equivariance"), (lhs - rhs).norm(), 1e-11);
  const Complex phase = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
  const Vec3 turned = hopf_complex(phase * q.u(), phase * q.v());
  check.check(tag(trial, "fiber"), (turned - hopf(q)).norm(), 1e-11);
  check.check(tag(trial, "norm"), std::abs(hopf(q).norm() - q.norm2()) / q.norm2(), 1e-12);
}

void gc_trial(int trial, Rng& rng, Checker& check) {
  const int m = 3 + static_cast<int>(uniform_index(rng, 8));
  const Frame f = random_frame(m, rng);
  const Polygon p = frame_to_polygon(f);
  const auto ell = side_lengths(p);
  const auto d = diagonals(p);
  const GCPattern g = gc_pattern(f);
  double prefix = 0.0, sum_dev = 0.0, diff_dev = 0.0;
  for (int i = 0; i < m; ++i) {
    prefix += ell[static_cast<std::size_t>(i)];
    sum_dev = std::max(sum_dev, std::abs(g.sum[static_cast<std::size_t>(i)] - prefix));
    diff_dev = std::max(diff_dev, std::abs(g.diff[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(i)]));
  }
  check.check(tag(trial, "eigen-sum"), sum_dev, 1e-10);
  check.check(tag(trial, "eigen-diff"), diff_dev, 1e-10);
  check.check(tag(trial, "interlacing"), std::max(0.0, -interlacing_slack(g)), 1e-9);
  const auto mu = moment_mu(f);
  double mu_dev = 0.0;
  for (int i = 0; i < m; ++i) mu_dev = std::max(mu_dev, std::abs(mu[static_cast<std::size_t>(i)] - ell[static_cast<std::size_t>(i)]));
  check.check(tag(trial, "moment"), mu_dev, 1e-12);
}

/// Random normalized polygon with m sides whose diagonals all exceed 0.05.
Polygon random_prodigal(int m, Rng& rng) {
  for (;;) {
    const ExactLDPoint ld = random_exact_ld(m, rng);
    std::vector<double> angles(static_cast<std::size_t>(m - 3));
    for (auto& a : angles) a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const Polygon p = normalize(fiber_sample(ld.to_double(), angles));
    const auto d = diagonals(p);
    if (std::all_of(d.begin(), d.end() - 1, [](double x) { return x > 0.05; })) return p;
  }
}

void bend_trial(int trial, Rng& rng, Checker& check) {
  const int m = 5 + trial % 2;
  const Polygon p = random_prodigal(m, rng);
  const int i = 2 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(m - 3)));
  const int sign = bending_flow_sign();
  const auto w = SphereProductPoint::from_polygon(p);
  for (double t : {0.1, 1.0, std::numbers::pi, 2.0 * std::numbers::pi}) {
    FlowOptions opt;
    opt.steps = std::max(1, static_cast<int>(std::ceil(2000.0 * t / (2.0 * std::numbers::pi))));
    opt.prodigal_diagonals = {i};
    const Polygon flowed = hamiltonian_flow(w, diagonal_hamiltonian(i), t, opt).to_polygon();
    check.check(tag(trial, "flow t=" + std::to_string(t)), max_edge_deviation(flowed, bend(p, i, sign * t)), 1e-6);
  }
  // standard diagonals commute
  for (int a = 2; a <= m - 2; ++a)
    for (int b = a + 1; b <= m - 2; ++b) {
      const double t1 = uniform(rng, -3.0, 3.0), t2 = uniform(rng, -3.0, 3.0);
      check.check(tag(trial, "commute " + std::to_string(a) + "," + std::to_string(b)),
                  commute_defect(p, {1, a}, {1, b}, t1, t2), 1e-9);
    }
}

void kahler_trial(int trial, Rng& rng, Checker& check) {
  if (trial == 0) {
    const double r = 0.5;
    const Eigen::Vector2cd q(std::sqrt(r), 0.0);
    const Eigen::Vector2cd u(0.0, 1.0);
    const Eigen::Vector2cd v(0.0, Complex(0.0, 1.0));
    const KahlerProbe k = kahler_probe_at(q, u, v);
    check.check("anchor numerator", std::abs(k.numerator - 4.0), 1e-9);
    check.check("anchor denominator", std::abs(k.denominator - 1.0), 1e-9);
  }
  const int m = 3 + static_cast<int>(uniform_index(rng, 6));
  const Frame f = random_frame(m, rng);
  const int row = 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(m)));
  const Complex q0 = f.a(row - 1), q1 = f.b(row - 1);
  const Eigen::Vector2cd horizontal(-std::conj(q1), std::conj(q0));
  KahlerProbe k{};
  for (;;) {
    const Complex c1(normal(rng), normal(rng)), c2(normal(rng), normal(rng));
    try {
      k = kahler_factor_probe(f, c1 * horizontal, c2 * horizontal, row);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegeneratePair) throw;
    }
  }
  check.check(tag(trial, "ratio"), std::abs(k.ratio - 4.0), 1e-6);
  check.check(tag(trial, "complex structure"), k.complex_defect, 1e-6);
}

void dh_trial(int trial, Rng& rng, Checker& check) {
  RationalVector alpha(4);
  for (;;) {
    for (auto& a : alpha) a = Rational(static_cast<long long>(uniform_index(rng, 40)) + 1, 20);
    if (!intersect(pair_interval(alpha[0], alpha[1]), pair_interval(alpha[2], alpha[3])).empty()) break;
  }
  const auto [first, second] = dh_interval_equality(alpha);
  check.check(tag(trial, "interval lengths"), std::abs(to_double(first - second)), 0.0);
  const RationalPolytope slice = diag_slice(alpha);
  const Interval range = quad_interval(alpha).range;
  const bool same = slice.vertices.front()[0] == range.lo && slice.vertices.back()[0] == range.hi;
  check.check(tag(trial, "slice endpoints"), same ? 0.0 : 1.0, 0.0);
}

void hexcount_trial(int trial, Rng&, Checker& check) {
  if (trial != 0) return;
  const RationalVector ones(6, Rational(1));
  const auto lined = enumerate_lined(ones);
  check.check("enumerate_lined", std::abs(static_cast<double>(lined.size()) - 10.0), 0.0);
  int brute = 0;
  for (int mask = 0; mask < 64; ++mask)
    if (2 * std::popcount(static_cast<unsigned>(mask)) == 6) ++brute;
  check.check("brute force / 2", std::abs(brute / 2.0 - 10.0), 0.0);
}

void roundtrip_trial(int trial, Rng& rng, Checker& check) {
  const int m = 4 + trial % 3;
  const ExactLDPoint ld = random_exact_ld(m, rng);
  const auto alpha = to_doubles(ld.alpha);
  const auto d = to_doubles(full_diagonals(ld));
  for (int k : {2, 3}) {
    const Polygon p = reconstruct(ld, k);
    const auto ell = side_lengths(p);
    const auto dd = diagonals(p);
    double dev = 0.0;
    for (int i = 0; i < m; ++i) {
      dev = std::max(dev, std::abs(ell[static_cast<std::size_t>(i)] - alpha[static_cast<std::size_t>(i)]));
      dev = std::max(dev, std::abs(dd[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(i)]));
    }
    check.check(tag(trial, "ell,d k=" + std::to_string(k)), dev, 1e-9);
  }
  // frame loop on the normalized spatial polygon
  const Polygon p = normalize(reconstruct(ld, 3));
  const Frame f = frame_from_polygon(p);
  check.check(tag(trial, "frame valid"), frame_defect(f), kFrameTolerance);
  check.check(tag(trial, "frame loop"), max_edge_deviation(frame_to_polygon(f), p), 1e-9);
  const GCPattern g = gc_pattern(f);
  const double scale = 2.0 / to_double(sum(ld.alpha));
  double prefix = 0.0, dev = 0.0;
  for (int i = 0; i < m; ++i) {
    prefix += alpha[static_cast<std::size_t>(i)] * scale;
    dev = std::max(dev, std::abs(g.sum[static_cast<std::size_t>(i)] - prefix));
    dev = std::max(dev, std::abs(g.diff[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(i)] * scale));
  }
  check.check(tag(trial, "gc pattern"), dev, 1e-9);
}

const std::map<std::string, TrialFn>& suites() {
  static const std::map<std::string, TrialFn> table{
      {"hopf", hopf_trial}, {"gc", gc_trial},           {"bend", bend_trial},           {"kahler", kahler_trial},
      {"dh", dh_trial},     {"hexcount", hexcount_trial}, {"roundtrip", roundtrip_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hopf", "gc", "bend", "kahler", "dh", "hexcount", "roundtrip"};
  return names;
}

RunReport run_suite(const std::string& name, int trials, std::uint64_t seed) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  if (trials < 0) throw Error(ErrorCode::InvalidArgument, "trials must be nonnegative");
  RunReport report;
  report.suite = name;
  report.trials = name == "hexcount" ? std::min(trials, 1) : trials;
  Checker check(report);
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < report.trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    try {
      it->second(t, rng, check);
    } catch (const Error& e) {
      check.check(tag(t, std::string("exception ") + e.what()), INFINITY, 0.0);
    }
  }
  report.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<RunReport> run_verify(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<RunReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, trials, seed));
  } else {
    out.push_back(run_suite(suite, trials, seed));
  }
  return out;
}

std::string reports_to_json(const std::vector<RunReport>& reports) {
  using nlohmann::json;
  json suites_doc = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    json failures = json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"case", f.case_id},
                          {"deviation", std::isfinite(f.deviation) ? json(f.deviation) : json(nullptr)},
                          {"tolerance", f.tolerance}});
    suites_doc.push_back({{"suite", r.suite},
                          {"trials", r.trials},
                          {"failure_count", r.failure_count},
                          {"failures", std::move(failures)},
                          {"worst_ratio", std::isfinite(r.worst_ratio) ? json(r.worst_ratio) : json(nullptr)},
                          {"wall_clock_s", r.wall_clock_seconds}});
  }
  return json{{"passed", passed}, {"suites", std::move(suites_doc)}}.dump(2);
}

}  // namespace polyspace
