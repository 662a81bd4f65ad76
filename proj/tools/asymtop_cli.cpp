// asymtop: level tables, wavefunction grids, checks and kernel values for
// the quantum asymmetric top.
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "asymtop/errors.hpp"
#include "cli_commands.hpp"

using namespace asymtop;
using namespace asymtop::cli;

namespace {

// flag name -> value as typed; only flags actually given end up here
struct SharedFlags {
  std::map<std::string, std::string> given;
  std::string config;
};

void add_shared(CLI::App* app, SharedFlags& f) {
  const auto opt = [&](const std::string& name, const std::string& help) {
    app->add_option_function<std::string>(
        "--" + name, [&f, name](const std::string& v) { f.given[name] = v; }, help);
  };
  opt("A", "rotational constant A (largest)");
  opt("B", "rotational constant B");
  opt("C", "rotational constant C (smallest)");
  opt("jmax", "largest j");
  opt("routes", "comma list of wigner,lambda,lame");
  opt("format", "csv or json");
  opt("seed", "seed for randomized checks");
  opt("tol-all", "set every tolerance");
  for (const auto& [name, v] : default_tolerances()) opt("tol-" + name, "tolerance (default " + std::to_string(v) + ")");
  app->add_option("--config", f.config, "flat key=value file; flags override it");
}

RunConfig build_config(const SharedFlags& f) {
  RunConfig cfg;
  std::map<std::string, std::string> kv;
  if (!f.config.empty()) kv = read_config_file(f.config);
  for (const auto& [k, v] : f.given) kv[k] = v;
  // tol-all first so individual tolerances can refine it
  if (auto it = kv.find("tol-all"); it != kv.end()) apply_setting(cfg, it->first, it->second);
  for (const auto& [k, v] : kv) {
    if (k != "tol-all") apply_setting(cfg, k, v);
  }
  cfg.base.params.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum asymmetric top: spectra and wavefunctions"};
  app.require_subcommand(1);

  SharedFlags lf, wf, vf, kf;
  auto* levels = app.add_subcommand("levels", "energy levels per j, all routes");
  add_shared(levels, lf);

  auto* wave = app.add_subcommand("wave", "wavefunction on an Euler-angle grid");
  add_shared(wave, wf);
  WaveArgs wa;
  wave->add_option("--j", wa.j, "angular momentum")->required();
  wave->add_option("--s", wa.s, "level index -j..j (ascending energy)")->required();
  wave->add_option("--q-re", wa.q_re, "Re q");
  wave->add_option("--q-im", wa.q_im, "Im q");
  wave->add_option("--grid-n", wa.grid_n, "points per angle");

  auto* verify = app.add_subcommand("verify", "run the check suite");
  add_shared(verify, vf);

  auto* kernel = app.add_subcommand("kernel", "kernel value at (q, q', g)");
  add_shared(kernel, kf);
  KernelArgs ka;
  kernel->add_option("--j", ka.j, "angular momentum");
  kernel->add_option("--q-re", ka.q_re);
  kernel->add_option("--q-im", ka.q_im);
  kernel->add_option("--qp-re", ka.qp_re);
  kernel->add_option("--qp-im", ka.qp_im);
  kernel->add_option("--phi", ka.g.phi);
  kernel->add_option("--theta", ka.g.theta);
  kernel->add_option("--psi", ka.g.psi);
  kernel->add_flag("--check-identity", ka.check_identity, "also compare with delta_j at g = identity");
  kernel->add_flag("--check-conj", ka.check_conj, "also print the conjugation check against g^-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadConfig;
  }

  try {
    if (*levels) return cmd_levels(build_config(lf), std::cout, std::cerr);
    if (*wave) return cmd_wave(build_config(wf), wa, std::cout, std::cerr);
    if (*verify) return cmd_verify(build_config(vf), std::cout, std::cerr);
    if (*kernel) return cmd_kernel(build_config(kf), ka, std::cout, std::cerr);
  } catch (const ParamsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadConfig;
  }
  return kBadConfig;
}
