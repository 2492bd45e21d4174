// Command-line front end: family code parameters, dual checks, CSS
// construction and the claim-verification suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "toricq/css.hpp"
#include "toricq/distance.hpp"
#include "toricq/errors.hpp"
#include "toricq/io.hpp"
#include "toricq/lattice.hpp"
#include "toricq/report.hpp"
#include "toricq/toric.hpp"
#include "toricq/version.hpp"

namespace {

using namespace toricq;

struct CommonScan {
  unsigned long long budget = 100'000'000ULL;
  int workers = 0;  // 0 = hardware
  std::uint64_t seed = 0xA5C3;

  ScanOptions options() const { return ScanOptions{budget, workers, 0, seed}; }
};

void run_code_params(int q, int r, int b, bool measure,
                     const std::string& export_path, const CommonScan& scan) {
  PredictedParams pred = predicted_params(q, r, b);
  std::cout << "code q=" << q << " r=" << r << " b=" << b << "\n";
  std::cout << "predicted n=" << pred.n << " k=" << pred.k
            << " d=" << pred.d << "\n";
  LinearCode code = code_from_polytope(q, r, b);
  std::cout << "measured k=" << code.k() << " (generator rank)\n";
  if (measure) {
    DistanceResult d = min_weight(code, scan.options());
    std::cout << "measured d=" << d.value << " exact="
              << (d.exact ? "true" : "false")
              << " enumerated=" << d.enumerated << "\n";
    // stratum argument: the largest zero count over A in [0, a], against
    // the zeros of a measured minimum-weight codeword
    int a = b + (q - 2) / r;
    long long worst = 0;
    for (int strata = 0; strata <= a; ++strata)
      worst = std::max(worst, zero_count_bound(q, r, a, strata));
    std::cout << "strata zero-count bound=" << worst
              << " measured zeros=" << pred.n - d.value << "\n";
  }
  if (!export_path.empty()) {
    std::ofstream os(export_path);
    if (!os) throw toricq::ConfigError("cannot open " + export_path);
    write_code(os, code, r, b);
    std::cout << "generator written to " << export_path << "\n";
  }
}

void run_code_dual(int q, int r, int b) {
  DualRuleCheck check = check_dual_polytope_rule(q, r, b);
  std::cout << "dual check q=" << q << " r=" << r << " b=" << b
            << " (dual shift " << dual_shift(q, r, b) << ")\n";
  std::cout << "claimed dual dimension: " << check.claimed.size() << "\n";
  std::cout << "exact dual dimension:   " << check.exact_dual.k() << "\n";
  std::cout << "agreement: " << (check.agrees ? "true" : "false") << "\n";
}

void run_css_build(int q, int r, int b1, int b2, const std::string& export_path,
                   const CommonScan& scan) {
  FamilyBuild fb = build_family_code(q, r, b1, b2, scan.options());
  const FamilyParams& pred = fb.predicted;
  std::cout << "css q=" << q << " r=" << r << " b1=" << b1 << " b2=" << b2
            << "\n";
  std::cout << "predicted [[" << pred.predicted_n << "," << pred.predicted_k
            << "," << pred.predicted_dz << "/" << pred.predicted_dx << "]]_"
            << q << " pure=" << (pred.purity_predicted ? "true" : "false")
            << "\n";
  if (fb.failure) {
    const NestingFailure& f = *fb.failure;
    std::cout << "nesting FAILED\n";
    std::cout << "  dual(C_b1) dim " << f.dim_dual1 << " inside C_b2 dim "
              << f.dim_c2 << ": " << (f.dual1_in_c2 ? "yes" : "no")
              << " (stacked rank " << f.rank_c2_with_dual1 << ")\n";
    std::cout << "  dual(C_b2) dim " << f.dim_dual2 << " inside C_b1 dim "
              << f.dim_c1 << ": " << (f.dual2_in_c1 ? "yes" : "no")
              << " (stacked rank " << f.rank_c1_with_dual2 << ")\n";
    return;
  }
  const AsymmetricCssCode& code = *fb.code;
  std::cout << "nesting verified\n";
  std::cout << "measured [[" << code.n << "," << code.k << ","
            << code.dz.value << "/" << code.dx.value << "]]_" << q
            << " exact=" << (code.dz.exact ? "true" : "false")
            << " pure_x=" << (code.pure_x ? "true" : "false")
            << " pure_z=" << (code.pure_z ? "true" : "false") << "\n";
  if (!export_path.empty()) {
    std::ofstream os(export_path);
    if (!os) throw ConfigError("cannot open " + export_path);
    write_css(os, q, r, b1, b2, code);
    std::cout << "stabilizers written to " << export_path << "\n";
  }
}

void run_lattice_info(int q, int r, int b) {
  Polytope box = box_polytope(q, r, b);
  write_polytope(std::cout, q, r, b, box);

  auto pts = lattice_points(box);
  std::cout << "lattice points (" << pts.size() << "):\n";
  for (const Point& m : pts) std::cout << m.x << " " << m.y << "\n";

  Fan fan = refined_normal_fan(q, r);
  std::cout << "fan rays:\n";
  for (const Ray& ray : fan.rays)
    std::cout << ray.label << " (" << ray.gen.x << "," << ray.gen.y << ")\n";
  std::cout << "cone functionals:\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const Cone& c = fan.cones[i];
    std::cout << "sigma" << i + 1 << " faces " << fan.rays[c.ray_a].label
              << "," << fan.rays[c.ray_b].label << " l=(" << c.linear.x
              << "," << c.linear.y << ")\n";
  }

  DivisorData div = divisor_of_h0(q, r);
  std::cout << "divisor coefficients (b=0 support function):\n";
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    std::cout << fan.rays[i].label << " " << div.coeff[i] << "\n";

  Polytope box0 = box_polytope(q, r, 0);
  std::cout << "intersection numbers (b=0 divisor; self):\n";
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    std::cout << fan.rays[i].label << " (D;V)="
              << intersection_number(fan, box0, static_cast<int>(i))
              << " (V;V)=" << self_intersection(fan, static_cast<int>(i))
              << "\n";
}

void run_gf_table(int p, int m) {
  GfPtr f = Gf::make(p, m);
  std::cout << "gf p=" << f->p() << " m=" << f->m() << " q=" << f->q()
            << "\n";
  std::cout << "modulus (low degree first): ";
  for (std::size_t i = 0; i < f->modulus().size(); ++i)
    std::cout << (i ? "," : "") << f->modulus()[i];
  std::cout << "\ngenerator: " << f->generator() << "\n";
  std::cout << "antilog:";
  for (int i = 0; i + 1 < f->q(); ++i)
    std::cout << " g^" << i << "=" << f->antilog(i);
  std::cout << "\nlog:";
  for (int a = 1; a < f->q(); ++a)
    std::cout << " log(" << a << ")=" << f->log_of(static_cast<Elem>(a));
  std::cout << "\n";
}

void run_verify_suite(const std::string& config_path,
                      const std::string& csv_path,
                      const std::string& json_path, const CommonScan& scan) {
  SuiteConfig config;
  if (config_path.empty()) {
    config.instances = default_instances();
  } else {
    std::ifstream is(config_path);
    if (!is) throw ConfigError("cannot open " + config_path);
    config = parse_config(is);
  }
  config.budget = scan.budget;
  config.seed = scan.seed;
  config.workers = scan.workers;

  VerificationReport report = run_suite(config);
  write_table(std::cout, report);
  if (!csv_path.empty()) {
    std::ofstream os(csv_path);
    if (!os) throw ConfigError("cannot open " + csv_path);
    write_csv(os, report);
  }
  if (!json_path.empty()) {
    std::ofstream os(json_path);
    if (!os) throw ConfigError("cannot open " + json_path);
    write_json(os, report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric code construction and claim verification"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  int q = 0, r = 0, b = 0, b1 = 0, b2 = 0, p = 0, m = 0;
  bool measure = false;
  std::string export_path, config_path, csv_path, json_path;
  CommonScan scan;

  auto add_scan_flags = [&scan](CLI::App* cmd) {
    cmd->add_option("--budget", scan.budget, "enumeration budget");
    cmd->add_option("--workers", scan.workers,
                    "worker threads (0 = hardware)");
    cmd->add_option("--seed", scan.seed, "stochastic path seed");
  };

  CLI::App* code = app.add_subcommand("code", "family code operations");
  code->require_subcommand(1);
  CLI::App* params = code->add_subcommand("params", "predicted vs measured");
  params->add_option("--q", q, "field size")->required();
  params->add_option("--r", r, "slope parameter")->required();
  params->add_option("--b", b, "shift")->required();
  params->add_flag("--measure", measure, "measure the minimum distance");
  params->add_option("--export", export_path, "generator export path");
  add_scan_flags(params);
  params->callback(
      [&] { run_code_params(q, r, b, measure, export_path, scan); });

  CLI::App* dual = code->add_subcommand("dual", "dual polytope rule check");
  dual->add_option("--q", q, "field size")->required();
  dual->add_option("--r", r, "slope parameter")->required();
  dual->add_option("--b", b, "shift")->required();
  dual->callback([&] { run_code_dual(q, r, b); });

  CLI::App* css = app.add_subcommand("css", "asymmetric CSS construction");
  css->require_subcommand(1);
  CLI::App* build = css->add_subcommand("build", "build a family CSS code");
  build->add_option("--q", q, "field size")->required();
  build->add_option("--r", r, "slope parameter")->required();
  build->add_option("--b1", b1, "first shift")->required();
  build->add_option("--b2", b2, "second shift")->required();
  build->add_option("--export", export_path, "stabilizer export path");
  add_scan_flags(build);
  build->callback([&] { run_css_build(q, r, b1, b2, export_path, scan); });

  CLI::App* verify = app.add_subcommand("verify", "claim verification");
  verify->require_subcommand(1);
  CLI::App* suite = verify->add_subcommand("suite", "run the claim suite");
  suite->add_option("--config", config_path, "instance list file");
  suite->add_option("--csv", csv_path, "CSV report path");
  suite->add_option("--json", json_path, "JSON report path");
  add_scan_flags(suite);
  suite->callback(
      [&] { run_verify_suite(config_path, csv_path, json_path, scan); });

  CLI::App* lattice = app.add_subcommand("lattice", "polytope geometry");
  lattice->require_subcommand(1);
  CLI::App* info = lattice->add_subcommand("info", "family polytope data");
  info->add_option("--q", q, "field size")->required();
  info->add_option("--r", r, "slope parameter")->required();
  info->add_option("--b", b, "shift")->required();
  info->callback([&] { run_lattice_info(q, r, b); });

  CLI::App* gf = app.add_subcommand("gf", "finite field utilities");
  gf->require_subcommand(1);
  CLI::App* table = gf->add_subcommand("table", "log/antilog tables");
  table->add_option("--p", p, "characteristic")->required();
  table->add_option("--m", m, "extension degree")->required();
  table->callback([&] { run_gf_table(p, m); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const toricq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
