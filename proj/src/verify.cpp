#include "diagroof/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diagroof/convex_hull_1d.hpp"
#include "diagroof/diag_entanglement.hpp"
#include "diagroof/lambert_w.hpp"
#include "diagroof/min_output.hpp"
#include "diagroof/roof_oracle.hpp"

namespace diagroof {

using std::numbers::e;
using std::numbers::ln2;
using std::numbers::pi;

namespace {

const double kLn3 = std::log(3.0);

// Collects sub-checks; the first few failures go into the detail string.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 5) failures_ << (failed_ > 1 ? "; " : "") << what;
  }

  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, os.str());
  }

  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }

  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << total_ - failed_ << "/" << total_ << " checks";
    if (!notes_.str().empty()) os << "; " << notes_.str();
    if (failed_) os << "; FAILED: " << failures_.str();
    return os.str();
  }

private:
  int total_ = 0;
  int failed_ = 0;
  std::ostringstream failures_;
  std::ostringstream notes_;
};

std::string fmt(double v, int precision = 10) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

// For each i, the smallest chord value through (j, k) with j <= i <= k.
Eigen::VectorXd brute_force_hull(const SampledCurve& c) {
  const auto& x = c.xs();
  const auto& y = c.ys();
  Eigen::VectorXd out = y;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      for (Eigen::Index k = i; k < c.size(); ++k) {
        if (j == k) continue;
        const double t = (x[i] - x[j]) / (x[k] - x[j]);
        out[i] = std::min(out[i], (1.0 - t) * y[j] + t * y[k]);
      }
  return out;
}

SampledCurve random_curve(SplitMix64& rng, int n) {
  Eigen::VectorXd xs(n), ys(n);
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    x += 0.05 + rng.uniform();
    xs[i] = x;
    ys[i] = 2.0 * rng.uniform() - 1.0;
  }
  return {xs, ys};
}

CheckResult criterion_anchor_constants() {
  Tally t;
  t.near(ed_of_z(-0.5), ln2, 1e-9, "E_D(-1/2)");
  t.near(ed_of_z(0.0), 0.0, 1e-9, "E_D(0)");
  t.near(ed_of_z(1.0), kLn3, 1e-9, "E_D(1)");
  return {"1", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_zstar() {
  Tally t;
  const double zs = compute_zstar();
  t.near(zs, -0.4079496711, 1e-6, "z*");
  t.near(script_S(zs), 0.470016, 1e-5, "S(z*)");
  t.note("z* = " + fmt(zs) + ", S(z*) = " + fmt(script_S(zs)));
  return {"2", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_theta_transition() {
  Tally t;
  const double zt = theta_transition();
  t.near(zt, -0.4150234, 1e-4, "theta transition");
  t.near(epsilon_of_z(-0.5).theta_min, pi / 6.0, 1e-6, "theta_min(-1/2)");
  t.note("transition at " + fmt(zt));
  return {"3", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_junctions() {
  Tally t;
  const double eps = epsilon_of_z(kUpperJunction).value;
  t.near(eps, kLn3 - ln2 / 3.0, 1e-6, "epsilon(5/6) vs ln3 - ln2/3");
  t.near(eps, 0.867563, 1e-6, "epsilon(5/6) vs figure coordinate");
  const double zs = compute_zstar();
  t.near(ed_of_z(std::nextafter(zs, -1.0)), ed_of_z(zs), 1e-10, "continuity at z*");
  t.near(ed_of_z(std::nextafter(kUpperJunction, 2.0)), ed_of_z(kUpperJunction), 1e-10, "continuity at 5/6");
  t.expect(region_of_z(std::nextafter(zs, -1.0)) == EdRegion::lower_linear, "region left of z*");
  t.expect(region_of_z(std::nextafter(kUpperJunction, 2.0)) == EdRegion::upper_linear, "region right of 5/6");
  return {"4", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_theorem4() {
  Tally t;
  for (int n = 2; n <= 6; ++n) t.near(s_min_face(n), ln2, 1e-15, "S_min(" + std::to_string(n) + ")");
  for (int n = 7; n <= 12; ++n) {
    const double direct = std::log(n) - (1.0 - 2.0 / n) * std::log(n - 1.0);
    t.near(s_min_face(n), direct, 1e-12, "S_min(" + std::to_string(n) + ")");
  }
  double worst = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const auto found = brute_force_min_face(n, 50 * n, 20240 + static_cast<std::uint64_t>(n));
    const double gap = found.value - s_min_face(n);
    worst = std::max(worst, std::abs(gap));
    t.near(found.value, s_min_face(n), 1e-6, "oracle N=" + std::to_string(n));
    t.expect(gap >= -1e-9, "oracle undercuts closed form at N=" + std::to_string(n));
  }
  t.note("max |oracle - closed form| = " + fmt(worst, 3));
  return {"5", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_bifurcation() {
  Tally t;
  const double at6 = one_vs_rest_entropy(6);
  const double at7 = one_vs_rest_entropy(7);
  t.expect(at6 > ln2, "one-vs-rest at N=6 must exceed ln 2");
  t.expect(at7 < ln2, "one-vs-rest at N=7 must be below ln 2");
  t.near(at6, std::log(6.0) - (2.0 / 3.0) * std::log(5.0), 1e-12, "one-vs-rest N=6");
  t.near(at7, 0.666082, 1e-6, "one-vs-rest N=7");
  t.note("N=6: " + fmt(at6, 7) + ", N=7: " + fmt(at7, 7));
  return {"6", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_lambert() {
  Tally t;
  const double branch = -1.0 / e;
  auto residual_ok = [](double w, double x) { return std::abs(w * std::exp(w) - x) <= 1e-12 * std::abs(x); };
  double worst0 = 0.0;
  double worstm1 = 0.0;
  std::vector<double> xs0;
  for (double s : linspace(-14.0, std::log10(-branch), 500)) xs0.push_back(branch + std::pow(10.0, s));
  for (double s : linspace(-12.0, 12.0, 500)) xs0.push_back(std::pow(10.0, s));
  for (double x : xs0) {
    const double w = w0(x);
    worst0 = std::max(worst0, std::abs(w * std::exp(w) - x) / std::abs(x));
    t.expect(residual_ok(w, x) && w >= -1.0, "W0 residual at x=" + fmt(x));
  }
  std::vector<double> xsm1;
  for (double s : linspace(-14.0, std::log10(-branch) - 1e-3, 500)) xsm1.push_back(branch + std::pow(10.0, s));
  for (double s : linspace(-12.0, std::log10(-branch), 500)) xsm1.push_back(std::max(-std::pow(10.0, s), branch));
  for (double x : xsm1) {
    const double w = wm1(x);
    worstm1 = std::max(worstm1, std::abs(w * std::exp(w) - x) / std::abs(x));
    t.expect(residual_ok(w, x) && w <= -1.0, "W-1 residual at x=" + fmt(x));
  }

  SplitMix64 rng(7, 0);
  double worst_root = 0.0;
  for (int k = 0; k < 200; ++k) {
    double lambda = 2.0 * rng.uniform() - 1.0;
    if (std::abs(lambda) < 1e-3) lambda = 1e-3;
    const double mu = -6.0 + 7.0 * rng.uniform();
    const StationaryRoots roots = lagrange_roots(lambda, mu);
    for (double x : roots.roots()) {
      const double res = std::abs(lambda + mu * x - x * std::log(x * x));
      worst_root = std::max(worst_root, res);
      t.expect(res <= 1e-9, "stationarity residual");
    }
  }

  double prev = 2.0;
  bool increasing = true;
  for (int k = 1; k <= 1000; ++k) {
    const double g = g_function((k / 1000.0) / e);
    t.expect(g > 2.0, "G > 2");
    increasing = increasing && g > prev;
    prev = g;
  }
  t.expect(increasing, "G increasing on the grid");
  t.note("max residual W0 " + fmt(worst0, 3) + ", W-1 " + fmt(worstm1, 3) + ", roots " + fmt(worst_root, 3));
  return {"7", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_oracle_ed_curve() {
  Tally t;
  std::vector<double> zs;
  const double zstar = compute_zstar();
  for (double z : linspace(-0.5, zstar - 0.002, 5)) zs.push_back(z);
  for (double z : linspace(zstar + 0.01, kUpperJunction - 0.01, 10)) zs.push_back(z);
  for (double z : linspace(kUpperJunction + 0.02, 1.0, 5)) zs.push_back(z);
  double worst = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double z = zs[i];
    const auto est = real_roof_upper_bound(omega_of_z(z), 6, 200, 1000 + i);
    worst = std::max(worst, std::abs(est.value - ed_of_z(z)));
    t.near(est.value, ed_of_z(z), 1e-5, "oracle at z=" + fmt(z, 6));
    t.expect(est.value >= ed_of_z(z) - 1e-9, "oracle below E_D at z=" + fmt(z, 6));
  }
  t.note("20 samples, max |oracle - E_D| = " + fmt(worst, 3));
  return {"8a", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_oracle_rank2() {
  Tally t;
  SplitMix64 rng(88, 0);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double z = 0.05 + 0.9 * rng.uniform();
    const double phi = 2.0 * pi * rng.uniform();
    const double x = (2.0 * rng.uniform() - 1.0) * 0.999 * std::sqrt(z * (1.0 - z));
    const std::complex<double> a = std::cos(phi);
    const std::complex<double> b = std::sin(phi);
    const double closed = rank2_ed(z, x, a, b);
    const auto est = real_roof_upper_bound(rank2_state(z, x, a, b), 6, 200, 500 + static_cast<std::uint64_t>(k));
    worst = std::max(worst, std::abs(est.value - closed));
    t.near(est.value, closed, 1e-5, "rank-2 state " + std::to_string(k));
  }
  t.note("10 states, max |oracle - closed form| = " + fmt(worst, 3));
  return {"8b", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_decompositions() {
  Tally t;
  int lower = 0;
  int upper = 0;
  for (double z : linspace(-0.5, 1.0, 50)) {
    const Decomposition d = optimal_decomposition(z);
    const double err = (d.mixture() - omega_of_z(z).matrix()).cwiseAbs().maxCoeff();
    t.expect(err <= 1e-9, "reconstruction at z=" + fmt(z, 6) + " off by " + fmt(err, 3));
    t.near(d.average_output_entropy(), ed_of_z(z), 1e-8, "entropy average at z=" + fmt(z, 6));
    switch (region_of_z(z)) {
      case EdRegion::lower_linear:
        ++lower;
        t.expect(d.states.size() == 6 || z == -0.5, "two-orbit decomposition at z=" + fmt(z, 6));
        break;
      case EdRegion::upper_linear:
        ++upper;
        t.expect(d.states.size() == 4 || z == 1.0, "orbit + pure decomposition at z=" + fmt(z, 6));
        break;
      case EdRegion::roof_equals_epsilon:
        t.expect(d.states.size() == 3, "single orbit at z=" + fmt(z, 6));
        break;
    }
  }
  t.expect(lower >= 2 && upper >= 2, "grid must cover both linear regions");
  t.note(std::to_string(lower) + " points below z*, " + std::to_string(upper) + " above 5/6");
  return {"9", "", t.ok(), t.detail(), 0.0};
}

CheckResult criterion_properties() {
  Tally t;
  SplitMix64 rng(10, 0);

  for (int k = 0; k < 200; ++k) {
    const SampledCurve c = random_curve(rng, 2 + k % 19);
    const HullResult h = lower_convex_hull(c);
    const Eigen::VectorXd brute = brute_force_hull(c);
    t.expect((h.hull_ys - brute).cwiseAbs().maxCoeff() <= 1e-12, "hull vs brute-force epigraph");
    const HullResult hh = lower_convex_hull(SampledCurve(c.xs(), h.hull_ys));
    t.expect((hh.hull_ys - h.hull_ys).cwiseAbs().maxCoeff() <= 1e-12, "hull idempotence");
    Eigen::VectorXd raised = c.ys();
    const auto i = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(c.size()));
    raised[i] += rng.uniform();
    const HullResult hr = lower_convex_hull(SampledCurve(c.xs(), raised));
    t.expect(((hr.hull_ys - h.hull_ys).array() >= -1e-12).all(), "hull monotone in the data");
  }

  for (int k = 0; k < 50; ++k) {
    const DensityMatrix w = random_density_matrix(2 + k % 5, rng);
    const DensityMatrix d = diagonal_channel(w);
    t.expect((diagonal_channel(d).matrix() - d.matrix()).cwiseAbs().maxCoeff() == 0.0, "diagonal channel idempotent");
    t.expect(d.matrix().trace() == w.matrix().trace(), "diagonal channel trace preserving");
  }

  for (double z : linspace(-0.5, 1.0, 301)) t.near(twirl_s3(omega_of_z(z)).z, z, 1e-12, "twirl(omega(z))");

  for (int n = 3; n <= 50; ++n)
    for (int k = 2; k <= n - 2; ++k)
      t.expect(s_of_Nn(n, k - 1) - 2.0 * s_of_Nn(n, k) + s_of_Nn(n, k + 1) <= 1e-12, "S(N,n) concavity");

  double min_margin = 1e9;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix w = random_density_matrix(3, rng);
    const double bound = roof_upper_bound(w, 4, 1, 3000 + static_cast<std::uint64_t>(k)).value;
    const double reference = ed_of_z(twirl_s3(real_projection(w)).z);
    min_margin = std::min(min_margin, bound - reference);
    t.expect(bound >= reference - 1e-6, "projection inequality");
  }
  t.note("min oracle - E_D(twirl) margin " + fmt(min_margin, 3));
  return {"10", "", t.ok(), t.detail(), 0.0};
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "theorem4") return Suite::theorem4;
  if (name == "edcurve") return Suite::edcurve;
  if (name == "rank2") return Suite::rank2;
  if (name == "symmetry") return Suite::symmetry;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria = {
      {"1", "anchor constants E_D(-1/2), E_D(0), E_D(1)", 1.0, criterion_anchor_constants},
      {"2", "z* and S(z*)", 1.0, criterion_zstar},
      {"3", "theta transition and theta_min(-1/2)", 10.0, criterion_theta_transition},
      {"4", "junction values and continuity", 5.0, criterion_junctions},
      {"5", "minimal output entropy table with brute-force oracle", 180.0, criterion_theorem4},
      {"6", "bifurcation between N = 6 and N = 7", 1.0, criterion_bifurcation},
      {"7", "Lambert W residuals, stationary roots, G function", 5.0, criterion_lambert},
      {"8a", "roof oracle vs E_D(z) at 20 samples", 240.0, criterion_oracle_ed_curve},
      {"8b", "roof oracle vs rank-2 closed form", 60.0, criterion_oracle_rank2},
      {"9", "optimal decompositions reconstruct omega(z) and E_D", 10.0, criterion_decompositions},
      {"10", "property suites", 120.0, criterion_properties},
  };
  return criteria;
}

std::vector<std::string> suite_members(Suite suite) {
  switch (suite) {
    case Suite::all: return {"1", "2", "3", "4", "5", "6", "7", "8a", "8b", "9", "10"};
    case Suite::theorem4: return {"5", "6", "7"};
    case Suite::edcurve: return {"1", "2", "3", "4", "8a", "9"};
    case Suite::rank2: return {"8b"};
    case Suite::symmetry: return {"10"};
  }
  return {};
}

std::vector<CheckResult> run_suite(Suite suite, const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> out;
  for (const std::string& id : suite_members(suite)) {
    for (const Criterion& c : acceptance_criteria()) {
      if (c.id != id) continue;
      const auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = c.run();
      } catch (const std::exception& e) {
        r = {c.id, c.name, false, std::string("threw: ") + e.what(), 0.0};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      r.name = c.name;
      if (r.seconds > c.time_limit_seconds) {
        r.passed = false;
        r.detail += "; exceeded time limit of " + fmt(c.time_limit_seconds, 4) + " s";
      }
      if (report) report(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace diagroof
