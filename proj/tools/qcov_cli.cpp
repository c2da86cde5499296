// Command-line front end for the qcov shared library. Talks to the core
// exclusively through the C API in qcov/qcov.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcov/qcov.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitSuiteFailure = 3;

struct StateDeleter {
  void operator()(qcov_state* s) const { qcov_state_destroy(s); }
};
using StatePtr = std::unique_ptr<qcov_state, StateDeleter>;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "qcov: " << msg << "\n";
  std::exit(code);
}

void check(qcov_status st, const std::string& what) {
  if (st != QCOV_OK) die(kExitUsage, what + ": " + qcov_status_string(st));
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

nlohmann::json state_json(const qcov_state* s) {
  const int d = qcov_state_dim(s);
  std::vector<double> re(std::size_t(d) * d), im(std::size_t(d) * d);
  check(qcov_state_copy_data(s, re.data(), im.data()), "state export");
  return nlohmann::json{{"d", d}, {"re", re}, {"im", im}};
}

// Writes to `path` if nonempty, else to stdout. Exit code 2 on I/O trouble.
void emit_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) die(kExitIo, "write failed for '" + path + "'");
}

int cmd_region(int n, double alpha, double x_min, double x_max, double y_min,
               double y_max, int resolution, const std::string& out_path) {
  std::vector<qcov_region_point> grid(std::size_t(resolution) * resolution);
  qcov_boundary_point boundary{};
  check(qcov_region_scan(n, alpha, x_min, x_max, y_min, y_max, resolution,
                         grid.data(), &boundary),
        "region scan");

  std::string csv = "x,y,physical,min_eig,margin\n";
  for (const auto& pt : grid) {
    csv += fmt17(pt.x) + "," + fmt17(pt.y) + "," +
           std::to_string(pt.physical) + "," + fmt17(pt.min_eig) + "," +
           fmt17(pt.margin) + "\n";
  }
  emit_text(out_path, csv);

  std::ostream& info = out_path.empty() ? std::cerr : std::cout;
  if (boundary.found) {
    info << "boundary point with all-zero constraint margin: x = "
         << fmt6(boundary.x) << ", y = " << fmt6(boundary.y)
         << " (margin " << fmt6(boundary.margin) << ")\n";
  } else {
    info << "no all-zero-margin boundary point inside this window\n";
  }
  return 0;
}

int cmd_entangle(int n, const std::string& emit, const std::string& out_path) {
  qcov_state* raw = nullptr;
  check(qcov_entangled_output(n, &raw), "entangled output");
  StatePtr rho(raw);

  double entropy = 0.0, ppt = 0.0, eps = 0.0;
  check(qcov_von_neumann_entropy(rho.get(), &entropy), "entropy");
  check(qcov_partial_transpose_min_eig(rho.get(), &ppt), "partial transpose");
  check(qcov_epsilon_separation(rho.get(), &eps), "epsilon separation");

  double marg_dist = 0.0;
  for (int which = 1; which <= 2; ++which) {
    qcov_state* mraw = nullptr;
    check(qcov_partial_trace(rho.get(), which, &mraw), "partial trace");
    StatePtr marg(mraw);
    std::vector<double> re(std::size_t(n) * n), im(std::size_t(n) * n);
    check(qcov_state_copy_data(marg.get(), re.data(), im.data()), "marginal");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        double dre = re[std::size_t(r) * n + c] - (r == c ? 1.0 / n : 0.0);
        double dim = im[std::size_t(r) * n + c];
        marg_dist = std::max(marg_dist, std::hypot(dre, dim));
      }
  }

  std::cout << "entropy          " << fmt6(entropy) << "\n"
            << "ppt min eig      " << fmt6(ppt) << "\n"
            << "epsilon          " << fmt6(eps) << "\n"
            << "marginal dist    " << fmt6(marg_dist) << "\n";

  if (emit == "json") {
    nlohmann::json j = state_json(rho.get());
    j["entropy"] = entropy;
    j["ppt_min_eig"] = ppt;
    j["epsilon"] = eps;
    emit_text(out_path, j.dump() + "\n");
  }
  return 0;
}

int cmd_clone(int n) {
  qcov_map_params p{};
  check(qcov_cloning_params(n, &p), "cloning params");

  std::vector<double> m_re(std::size_t(n) * n), m_im(std::size_t(n) * n);
  check(qcov_canonical_bloch(n, m_re.data(), m_im.data()), "canonical input");

  qcov_state* raw = nullptr;
  check(qcov_apply(&p, m_re.data(), m_im.data(), &raw), "apply");
  StatePtr rho(raw);

  const int d = n * n;
  std::vector<double> re(std::size_t(d) * d), im(std::size_t(d) * d);
  check(qcov_state_copy_data(rho.get(), re.data(), im.data()), "state export");

  const double p11_map = re[0];
  const double p11_closed = 2.0 / (n + 1.0);
  std::cout << "P11 from map     " << fmt17(p11_map) << "\n"
            << "P11 closed form  " << fmt17(p11_closed) << "\n"
            << "difference       " << fmt6(std::abs(p11_map - p11_closed))
            << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int n, int trials, uint64_t seed) {
  static const char* kSuites[] = {"covariance", "linearity",  "marginals",
                                  "spectrum",   "permutation", "generators",
                                  "roundtrip"};
  std::vector<std::string> selected;
  if (suite == "all") {
    selected.assign(std::begin(kSuites), std::end(kSuites));
  } else {
    selected.push_back(suite);
  }

  bool all_pass = true;
  for (const auto& name : selected) {
    qcov_suite_result r{};
    qcov_status st = qcov_run_suite(name.c_str(), n, trials, seed, &r);
    if (st != QCOV_OK)
      die(kExitUsage, "suite '" + name + "': " + qcov_status_string(st));
    std::cout << (r.pass ? "pass" : "FAIL") << "  " << name << "  max dev "
              << fmt6(r.max_dev) << "  (tolerance " << fmt6(r.tolerance)
              << ", trials " << r.trials << ")\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : kExitSuiteFailure;
}

int cmd_entropy_table(int n_max, const std::string& out_path) {
  std::string csv = "n,entropy_spectral,entropy_closed_form,gap\n";
  for (int n = 2; n <= n_max; ++n) {
    double closed = 0.0;
    check(qcov_optimal_entropy(n, &closed), "optimal entropy");
    double spectral = closed;
    if (n <= 32) {
      qcov_state* raw = nullptr;
      check(qcov_entangled_output(n, &raw), "entangled output");
      StatePtr rho(raw);
      check(qcov_von_neumann_entropy(rho.get(), &spectral), "entropy");
    }
    const double gap = 2.0 * std::log(double(n)) - closed;
    csv += std::to_string(n) + "," + fmt17(spectral) + "," + fmt17(closed) +
           "," + fmt17(gap) + "\n";
  }
  emit_text(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covariant two-particle quantum maps: region scans, optimal "
               "cloning and entanglement, property suites"};
  app.require_subcommand(1);

  // region
  auto* region = app.add_subcommand("region", "scan the physical parameter region");
  int r_n = 3, r_res = 201;
  double r_alpha = 0.0, r_x0 = -0.3, r_x1 = 0.3, r_y0 = -0.3, r_y1 = 0.3;
  std::string r_out;
  region->add_option("--n", r_n, "one-particle dimension")->check(CLI::Range(2, 64));
  region->add_option("--alpha", r_alpha, "alpha parameter");
  region->add_option("--x-min", r_x0, "lower bound for beta*m11");
  region->add_option("--x-max", r_x1, "upper bound for beta*m11");
  region->add_option("--y-min", r_y0, "lower bound for C");
  region->add_option("--y-max", r_y1, "upper bound for C");
  region->add_option("--resolution", r_res, "grid points per axis")
      ->check(CLI::Range(2, 5000));
  region->add_option("--out", r_out, "CSV output path (default stdout)");

  // entangle
  auto* entangle = app.add_subcommand("entangle", "optimal universal entangler report");
  int e_n = 2;
  std::string e_emit, e_out;
  entangle->add_option("--n", e_n, "one-particle dimension")->check(CLI::Range(2, 64));
  entangle->add_option("--emit", e_emit, "emit full state (json)")
      ->check(CLI::IsMember({"json", "csv"}));
  entangle->add_option("--out", e_out, "state output path (default stdout)");

  // clone
  auto* clone = app.add_subcommand("clone", "optimal universal cloner report");
  int c_n = 2;
  clone->add_option("--n", c_n, "one-particle dimension")->check(CLI::Range(2, 64));

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string v_suite;
  int v_n = 3, v_trials = 100;
  uint64_t v_seed = 0;
  verify->add_option("--suite", v_suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember({"covariance", "linearity", "marginals", "spectrum",
                             "permutation", "generators", "roundtrip", "all"}));
  verify->add_option("--n", v_n, "one-particle dimension")->check(CLI::Range(2, 64));
  verify->add_option("--trials", v_trials, "number of randomized trials")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--seed", v_seed, "RNG seed");

  // entropy-table
  auto* table = app.add_subcommand("entropy-table", "entropy vs dimension table");
  int t_nmax = 32;
  std::string t_out;
  table->add_option("--n-max", t_nmax, "largest dimension")->check(CLI::Range(2, 100000));
  table->add_option("--out", t_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (region->parsed())
    return cmd_region(r_n, r_alpha, r_x0, r_x1, r_y0, r_y1, r_res, r_out);
  if (entangle->parsed()) return cmd_entangle(e_n, e_emit, e_out);
  if (clone->parsed()) return cmd_clone(c_n);
  if (verify->parsed()) return cmd_verify(v_suite, v_n, v_trials, v_seed);
  if (table->parsed()) return cmd_entropy_table(t_nmax, t_out);
  return kExitUsage;
}
