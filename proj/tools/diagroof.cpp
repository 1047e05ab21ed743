// Command-line front end: E_D(z) curve export, minimal output entropy on the
// face, z*, roof estimates for density-matrix files, and the verification suites.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "diagroof/density_io.hpp"
#include "diagroof/diag_entanglement.hpp"
#include "diagroof/min_output.hpp"
#include "diagroof/roof_oracle.hpp"
#include "diagroof/verify.hpp"

namespace {

using namespace diagroof;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInput = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Units { nats, bits };

struct RunConfig {
  double z_min = -0.5;
  double z_max = 1.0;
  double z_step = 1e-3;
  int n = 3;
  int m = 0;
  int restarts = 50;
  std::uint64_t seed = 1;
  Units units = Units::nats;
  bool oracle = false;
  std::string input_path;
  std::string output_path;
  std::string suite = "all";
};

double scale(const RunConfig& cfg) { return cfg.units == Units::bits ? 1.0 / std::numbers::ln2 : 1.0; }
const char* unit_name(const RunConfig& cfg) { return cfg.units == Units::bits ? "bits" : "nats"; }

// Output goes to --out when given, stdout otherwise.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> z_grid(const RunConfig& cfg) {
  if (!(cfg.z_step > 0.0)) throw UsageError("--z-step must be positive");
  if (!(cfg.z_min >= -0.5 && cfg.z_max <= 1.0 && cfg.z_min <= cfg.z_max))
    throw UsageError("need -0.5 <= --z-min <= --z-max <= 1");
  const auto count = static_cast<long>(std::floor((cfg.z_max - cfg.z_min) / cfg.z_step + 1e-9));
  std::vector<double> zs;
  for (long i = 0; i <= count; ++i) zs.push_back(std::min(cfg.z_min + static_cast<double>(i) * cfg.z_step, cfg.z_max));
  if (cfg.z_max - zs.back() > 1e-12) zs.push_back(cfg.z_max);
  return zs;
}

int cmd_ed_curve(const RunConfig& cfg) {
  const auto zs = z_grid(cfg);
  Sink sink(cfg.output_path);
  auto& os = sink.out();
  os << "z,epsilon,theta_min,ed,region\n" << std::setprecision(9);
  const double k = scale(cfg);
  for (double z : zs) {
    const EDCurveRecord r = ed_record(z);
    os << r.z << ',' << r.epsilon * k << ',' << r.theta_min << ',' << r.ed * k << ',' << to_string(r.region) << '\n';
  }
  return kOk;
}

std::string format_vector(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << std::setprecision(9) << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

int cmd_min_output(const RunConfig& cfg) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  Sink sink(cfg.output_path);
  auto& os = sink.out();
  const double k = scale(cfg);
  const double closed = s_min_face(cfg.n);
  os << std::setprecision(9);
  os << "N = " << cfg.n << '\n';
  os << "closed_form = " << closed * k << ' ' << unit_name(cfg) << '\n';
  os << "family = " << (cfg.n <= 6 ? "pair states" : "one-vs-rest") << '\n';
  os << "pair_states = " << std::numbers::ln2 * k << ' ' << unit_name(cfg) << '\n';
  os << "one_vs_rest = " << one_vs_rest_entropy(cfg.n) * k << ' ' << unit_name(cfg) << '\n';
  const auto states = minimizer_states(cfg.n);
  os << "minimizers (" << states.size() << "):\n";
  for (const auto& s : states) os << "  " << format_vector(s.amps()) << '\n';
  if (cfg.oracle) {
    const auto found = brute_force_min_face(cfg.n, cfg.restarts, cfg.seed);
    os << "oracle = " << found.value * k << ' ' << unit_name(cfg) << " (restarts " << cfg.restarts << ", seed " << cfg.seed
       << ")\n";
    os << "oracle_argmin = " << format_vector(found.argmin.amps()) << '\n';
    os << "gap = " << (found.value - closed) * k << '\n';
  }
  return kOk;
}

int cmd_zstar(const RunConfig& cfg) {
  Sink sink(cfg.output_path);
  auto& os = sink.out();
  const double k = scale(cfg);
  const double zs = compute_zstar();
  const double s = script_S(zs);
  os << std::setprecision(10);
  os << "z_star = " << zs << '\n';
  os << "S(z_star) = " << s * k << ' ' << unit_name(cfg) << '\n';
  os << "tangent_slope = " << (s - std::numbers::ln2) / (zs + 0.5) * k << '\n';
  os << "theta_transition = " << theta_transition() << '\n';
  return kOk;
}

int cmd_roof_estimate(const RunConfig& cfg) {
  DensityMatrix omega = [&] {
    try {
      return read_density_matrix_file(cfg.input_path);
    } catch (const DomainError& e) {
      throw ParseError(std::string("invalid state: ") + e.what());
    }
  }();
  std::optional<double> reference;
  if (omega.dim() == 3) reference = ed_of_z(twirl_s3(real_projection(omega)).z);

  const RoofEstimate est =
      cfg.m > 0 ? auto_roof_upper_bound(omega, RoofSearchOptions{cfg.m, cfg.restarts, cfg.seed, std::nullopt})
                : roof_upper_bound_escalating(omega, cfg.restarts, cfg.seed, reference);

  Sink sink(cfg.output_path);
  auto& os = sink.out();
  const double k = scale(cfg);
  os << std::setprecision(9);
  os << "upper_bound = " << est.value * k << ' ' << unit_name(cfg) << '\n';
  os << "search = " << (is_real(omega) ? "real" : "complex") << ", m = " << est.param.m << ", rank = " << est.param.r
     << ", restarts = " << cfg.restarts << ", seed = " << cfg.seed << '\n';
  if (reference) os << "symmetric_reference = " << *reference * k << ' ' << unit_name(cfg) << " (E_D of the twirled state)\n";
  os << "decomposition (" << est.best.states.size() << " states):\n";
  for (std::size_t j = 0; j < est.best.states.size(); ++j) {
    os << "  p = " << est.best.weights[static_cast<Eigen::Index>(j)] << "  psi = (";
    const auto& a = est.best.states[j].amps();
    for (Eigen::Index i = 0; i < a.size(); ++i) os << (i ? ", " : "") << format_complex(a[i]);
    os << ")\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  Suite suite;
  try {
    suite = parse_suite(cfg.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Sink sink(cfg.output_path);
  auto& os = sink.out();
  bool all = true;
  run_suite(suite, [&](const CheckResult& r) {
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
       << r.seconds << " s) " << std::defaultfloat << r.detail << std::endl;
  });
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement entropy of the diagonal map"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, Units> unit_map{{"nats", Units::nats}, {"bits", Units::bits}};

  auto add_units = [&](CLI::App* sub) {
    sub->add_option("--units", cfg.units, "entropy units")->transform(CLI::CheckedTransformer(unit_map, CLI::ignore_case));
    sub->add_option("--out", cfg.output_path, "write output to FILE instead of stdout");
  };

  auto* ed = app.add_subcommand("ed-curve", "CSV of z, epsilon, theta_min, E_D, region");
  ed->add_option("--z-min", cfg.z_min, "first z")->capture_default_str();
  ed->add_option("--z-max", cfg.z_max, "last z")->capture_default_str();
  ed->add_option("--z-step", cfg.z_step, "grid step")->capture_default_str();
  add_units(ed);

  auto* mo = app.add_subcommand("min-output", "minimal output entropy on the face orthogonal to the uniform vector");
  mo->add_option("--n", cfg.n, "dimension N")->required();
  mo->add_flag("--oracle", cfg.oracle, "also run the brute-force search");
  mo->add_option("--restarts", cfg.restarts, "random restarts")->capture_default_str();
  mo->add_option("--seed", cfg.seed, "seed")->capture_default_str();
  add_units(mo);

  auto* zs = app.add_subcommand("zstar", "tangency point z*, S(z*), and the theta transition");
  add_units(zs);

  auto* re = app.add_subcommand("roof-estimate", "upper bound on E_D for a density matrix file");
  re->add_option("input", cfg.input_path, "density matrix file")->required();
  re->add_option("--m", cfg.m, "decomposition length (default: rank + 1, escalating)");
  re->add_option("--restarts", cfg.restarts, "random restarts")->capture_default_str();
  re->add_option("--seed", cfg.seed, "seed")->capture_default_str();
  add_units(re);

  auto* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_option("suite", cfg.suite, "all | theorem4 | edcurve | rank2 | symmetry")->capture_default_str();
  ve->add_option("--out", cfg.output_path, "write report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(ed)) return cmd_ed_curve(cfg);
    if (app.got_subcommand(mo)) return cmd_min_output(cfg);
    if (app.got_subcommand(zs)) return cmd_zstar(cfg);
    if (app.got_subcommand(re)) return cmd_roof_estimate(cfg);
    if (app.got_subcommand(ve)) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
