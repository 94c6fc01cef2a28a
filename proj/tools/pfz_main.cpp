// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
//
// pfz: partition-function zeros of 1D spin chains via an ancilla-probe
// protocol, with exact oracles and closed-form references.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfz/errors.hpp"
#include "pfz/exact.hpp"
#include "pfz/fisher.hpp"
#include "pfz/hamiltonian.hpp"
#include "pfz/io.hpp"
#include "pfz/leeyang.hpp"
#include "pfz/noise.hpp"
#include "pfz/postselect.hpp"
#include "pfz/reconstruct.hpp"
#include "pfz/tfd.hpp"
#include "pfz/util.hpp"

namespace {

struct ModelOpts {
  int n_sites = 2;
  double j = 1.0;
  double jz = 0.0;
  double hr = 0.0;
  std::string boundary = "periodic";
};

void add_model_options(CLI::App* cmd, ModelOpts* m) {
  cmd->add_option("--sites", m->n_sites, "Number of chain sites")->check(CLI::Range(1, 14));
  cmd->add_option("--j", m->j, "XY coupling J");
  cmd->add_option("--jz", m->jz, "Ising coupling Jz");
  cmd->add_option("--hr", m->hr, "Real longitudinal field");
  cmd->add_option("--boundary", m->boundary, "periodic | open | jw")
      ->check(CLI::IsMember({"periodic", "open", "jw"}));
}

pfz::SpinChainSpec to_spec(const ModelOpts& m) {
  pfz::SpinChainSpec spec;
  spec.n_sites = m.n_sites;
  spec.coupling_xy = m.j;
  spec.coupling_z = m.jz;
  spec.field_real = m.hr;
  spec.boundary = pfz::boundary_from_string(m.boundary);
  return spec;
}

pfz::MatC build_model(const ModelOpts& m) {
  const pfz::SpinChainSpec spec = to_spec(m);
  if (spec.boundary == pfz::Boundary::JwBoundary) {
    return pfz::build_xy_jw_boundary(spec);
  }
  return pfz::build_xxz(spec);
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw pfz::ConfigError("grid needs at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

struct OutputTarget {
  std::string path;  // empty -> stdout
  std::ofstream file;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw pfz::ConfigError("cannot open output file: " + path);
    }
    return file;
  }
};

std::string joined_command(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) os << ' ';
    os << argv[i];
  }
  return os.str();
}

void write_command_header(std::ostream& os, const std::string& command) {
  pfz::write_metadata(os, {{"command", command}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition-function zeros of 1D spin chains"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file");
  app.set_version_flag("--version", "pfz 0.1.0");

  const std::string command_line = joined_command(argc, argv);

  int threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (default: PFZ_THREADS env or 1)");

  // ---- leeyang-zeros ----------------------------------------------------
  auto* ly_zeros = app.add_subcommand(
      "leeyang-zeros", "Lee-Yang zeros from closed forms or the sector polynomial");
  ModelOpts lz_model;
  std::string lz_kind = "polynomial";
  double lz_beta = 1.0;
  int lz_m_lo = 0, lz_m_hi = 0;
  std::string lz_out;
  ly_zeros->add_option("--model", lz_kind, "polynomial | ising-ring | xy | xxz2")
      ->check(CLI::IsMember({"polynomial", "ising-ring", "xy", "xxz2"}));
  add_model_options(ly_zeros, &lz_model);
  ly_zeros->add_option("--beta", lz_beta, "Inverse temperature");
  ly_zeros->add_option("--m-lo", lz_m_lo, "Lowest branch index (xy model)");
  ly_zeros->add_option("--m-hi", lz_m_hi, "Highest branch index (xy model)");
  ly_zeros->add_option("-o,--output", lz_out, "Output CSV path (default stdout)");

  // ---- leeyang-sweep ----------------------------------------------------
  auto* ly_sweep = app.add_subcommand(
      "leeyang-sweep", "Protocol sweep of L(theta) along a fixed real field");
  ModelOpts ls_model;
  double ls_beta = 1.0, ls_theta_min = 0.0, ls_theta_max = pfz::kPi;
  int ls_theta_points = 41;
  std::string ls_mode = "exact";
  int ls_layers = 2;
  std::vector<double> ls_angles;
  double ls_bank_j = 0.0;
  bool ls_use_bank = false;
  double ls_noise_a = 1.0, ls_noise_b = 0.0;
  bool ls_noise = false, ls_noise_full = false;
  int ls_shots = 0;
  std::uint64_t ls_seed = 2026;
  std::string ls_postselect = "none";
  std::string ls_out, ls_zeros_out;
  double ls_threshold = 0.05;
  add_model_options(ly_sweep, &ls_model);
  ly_sweep->add_option("--beta", ls_beta, "Inverse temperature");
  ly_sweep->add_option("--theta-min", ls_theta_min, "Sweep start");
  ly_sweep->add_option("--theta-max", ls_theta_max, "Sweep end");
  ly_sweep->add_option("--theta-points", ls_theta_points, "Sweep resolution")
      ->check(CLI::Range(2, 1000000));
  ly_sweep->add_option("--mode", ls_mode, "exact | circuit")
      ->check(CLI::IsMember({"exact", "circuit"}));
  ly_sweep->add_option("--layers", ls_layers, "Ansatz layers (circuit mode)");
  ly_sweep->add_option("--angles", ls_angles, "Ansatz angles, 4 per layer");
  ly_sweep
      ->add_option("--bank-j", ls_bank_j,
                   "Use the pre-tuned two-site angle bank entry for this J")
      ->each([&](const std::string&) { ls_use_bank = true; });
  ly_sweep->add_option("--noise-a", ls_noise_a, "Linear-shift scale a")
      ->each([&](const std::string&) { ls_noise = true; });
  ly_sweep->add_option("--noise-b", ls_noise_b, "Linear-shift frame term b")
      ->each([&](const std::string&) { ls_noise = true; });
  ly_sweep->add_flag("--noise-full", ls_noise_full,
                     "Also rewrite YY and ZZ gates under the noise model");
  ly_sweep->add_option("--shots", ls_shots, "Shots per basis per point (0 = exact)");
  ly_sweep->add_option("--seed", ls_seed, "Sampling seed");
  ly_sweep->add_option("--postselect", ls_postselect, "none | m1 | m2")
      ->check(CLI::IsMember({"none", "m1", "m2"}));
  ly_sweep->add_option("-o,--output", ls_out, "Trace CSV path (default stdout)");
  ly_sweep->add_option("--zeros-out", ls_zeros_out, "Also write detected zeros here");
  ly_sweep->add_option("--threshold", ls_threshold, "Zero-detection threshold on |L|");

  // ---- scan ---------------------------------------------------------------
  auto* scan = app.add_subcommand("scan",
                                  "Protocol |L| map over the (h_r, theta) plane");
  ModelOpts sc_model;
  double sc_beta = 1.0;
  double sc_hr_min = -1.0, sc_hr_max = 1.0, sc_theta_min = 0.0, sc_theta_max = pfz::kPi;
  int sc_hr_points = 41, sc_theta_points = 41;
  double sc_threshold = 0.0;
  std::string sc_out, sc_minima_out;
  add_model_options(scan, &sc_model);
  scan->add_option("--beta", sc_beta, "Inverse temperature");
  scan->add_option("--hr-min", sc_hr_min, "Field axis start");
  scan->add_option("--hr-max", sc_hr_max, "Field axis end");
  scan->add_option("--hr-points", sc_hr_points, "Field axis resolution")
      ->check(CLI::Range(1, 100000));
  scan->add_option("--theta-min", sc_theta_min, "Theta axis start");
  scan->add_option("--theta-max", sc_theta_max, "Theta axis end");
  scan->add_option("--theta-points", sc_theta_points, "Theta axis resolution")
      ->check(CLI::Range(1, 100000));
  scan->add_option("--minima-threshold", sc_threshold,
                   "Report interior |L| minima below this value");
  scan->add_option("-o,--output", sc_out, "Grid CSV path (default stdout)");
  scan->add_option("--minima-out", sc_minima_out, "Minima CSV path");

  // ---- fisher-zeros -------------------------------------------------------
  auto* f_zeros = app.add_subcommand("fisher-zeros",
                                     "Closed-form Fisher zeros of the reference chains");
  std::string fz_kind = "ising";
  int fz_sites = 4;
  double fz_j = 1.0;
  int fz_k_lo = 0, fz_k_hi = -1, fz_m_lo = 0, fz_m_hi = 0;
  std::string fz_out;
  f_zeros->add_option("--model", fz_kind, "ising | xy")
      ->check(CLI::IsMember({"ising", "xy"}));
  f_zeros->add_option("--sites", fz_sites, "Number of chain sites")->check(CLI::Range(2, 64));
  f_zeros->add_option("--j", fz_j, "Coupling J");
  f_zeros->add_option("--k-lo", fz_k_lo, "Lowest momentum index");
  f_zeros->add_option("--k-hi", fz_k_hi, "Highest momentum index (default sites-1)");
  f_zeros->add_option("--m-lo", fz_m_lo, "Lowest branch index");
  f_zeros->add_option("--m-hi", fz_m_hi, "Highest branch index");
  f_zeros->add_option("-o,--output", fz_out, "Output CSV path (default stdout)");

  // ---- fisher-sweep -------------------------------------------------------
  auto* f_sweep = app.add_subcommand(
      "fisher-sweep", "Protocol sweep of L(beta_r + i beta_i) at fixed beta_r");
  ModelOpts fs_model;
  double fs_beta_r = 0.0, fs_bi_min = 0.0, fs_bi_max = 3.0;
  int fs_bi_points = 61;
  std::string fs_mode = "exact";
  int fs_steps = 16, fs_order = 2;
  std::string fs_out, fs_zeros_out;
  double fs_threshold = 0.05;
  add_model_options(f_sweep, &fs_model);
  f_sweep->add_option("--beta-r", fs_beta_r, "Real inverse temperature");
  f_sweep->add_option("--bi-min", fs_bi_min, "Imaginary axis start");
  f_sweep->add_option("--bi-max", fs_bi_max, "Imaginary axis end");
  f_sweep->add_option("--bi-points", fs_bi_points, "Imaginary axis resolution")
      ->check(CLI::Range(2, 1000000));
  f_sweep->add_option("--mode", fs_mode, "exact | trotter")
      ->check(CLI::IsMember({"exact", "trotter"}));
  f_sweep->add_option("--trotter-steps", fs_steps, "Trotter steps")
      ->check(CLI::Range(1, 100000));
  f_sweep->add_option("--trotter-order", fs_order, "1 | 2")->check(CLI::IsMember({1, 2}));
  f_sweep->add_option("-o,--output", fs_out, "Trace CSV path (default stdout)");
  f_sweep->add_option("--zeros-out", fs_zeros_out, "Also write detected zeros here");
  f_sweep->add_option("--threshold", fs_threshold, "Zero-detection threshold on |L|");

  // ---- reconstruct ----------------------------------------------------------
  auto* rec = app.add_subcommand(
      "reconstruct", "Free energy on the real-field axis from a zero set");
  ModelOpts rc_model;
  double rc_beta = 1.0, rc_h_min = -1.0, rc_h_max = 1.0;
  int rc_h_points = 41;
  std::string rc_zeros_path, rc_out;
  double rc_ln_prefactor = std::numeric_limits<double>::quiet_NaN();
  bool rc_complete = false, rc_compare = false;
  double rc_snap_tol = 0.0;
  add_model_options(rec, &rc_model);
  rec->add_option("--beta", rc_beta, "Inverse temperature");
  rec->add_option("--zeros", rc_zeros_path, "Zero-set CSV (field or fugacity plane)")
      ->required();
  rec->add_flag("--complete", rc_complete,
                "Treat the input as field-plane sweep zeros and complete them");
  rec->add_option("--snap-tol", rc_snap_tol,
                  "Snap theta within this tolerance of pi/2 during completion");
  rec->add_option("--ln-prefactor", rc_ln_prefactor,
                  "ln p_N (default: sector trace of the model options)");
  rec->add_option("--h-min", rc_h_min, "Field axis start");
  rec->add_option("--h-max", rc_h_max, "Field axis end");
  rec->add_option("--h-points", rc_h_points, "Field axis resolution")
      ->check(CLI::Range(1, 100000));
  rec->add_flag("--compare", rc_compare, "Append the dense-oracle free energy column");
  rec->add_option("-o,--output", rc_out, "Output CSV path (default stdout)");

  // ---- tfd-opt ---------------------------------------------------------------
  auto* tfd = app.add_subcommand("tfd-opt",
                                 "Optimize the variational thermofield-double circuit");
  ModelOpts tf_model;
  double tf_beta = 1.0;
  int tf_layers = 2, tf_restarts = 8, tf_max_iter = 4000;
  std::string tf_optimizer = "nm";
  std::uint64_t tf_seed = 12345;
  std::string tf_out;
  add_model_options(tfd, &tf_model);
  tfd->add_option("--beta", tf_beta, "Inverse temperature");
  tfd->add_option("--layers", tf_layers, "Ansatz layers")->check(CLI::Range(1, 64));
  tfd->add_option("--restarts", tf_restarts, "Optimizer restarts")->check(CLI::Range(1, 256));
  tfd->add_option("--max-iter", tf_max_iter, "Iterations per restart");
  tfd->add_option("--optimizer", tf_optimizer, "nm | cd")
      ->check(CLI::IsMember({"nm", "cd"}));
  tfd->add_option("--seed", tf_seed, "Restart seed");
  tfd->add_option("-o,--output", tf_out, "Output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (ly_zeros->parsed()) {
      OutputTarget out{lz_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::ZeroSet zs;
      if (lz_kind == "polynomial") {
        zs = pfz::leeyang_zeros_polynomial(build_model(lz_model), lz_beta,
                                           lz_model.n_sites);
      } else if (lz_kind == "ising-ring") {
        // H = jz * sum sz sz over the N ring bonds; the closed form wants the
        // ferromagnetic strength J = -jz > 0.
        zs = pfz::ising_zeros_analytic(lz_model.n_sites, -lz_model.jz, lz_beta);
      } else if (lz_kind == "xy") {
        std::vector<int> ms;
        for (int m = lz_m_lo; m <= lz_m_hi; ++m) ms.push_back(m);
        zs = pfz::xy_zeros_analytic(lz_model.n_sites, lz_model.j, lz_beta, ms);
      } else {
        auto [set, regime] = pfz::xxz2_zeros_analytic(lz_model.j, lz_model.jz, lz_beta);
        pfz::write_metadata(os, {{"regime", regime == pfz::Regime::IsingLike
                                                ? "ising_like"
                                                : "xy_like"}});
        zs = set;
      }
      pfz::write_zero_set(os, zs);
      return 0;
    }

    if (ly_sweep->parsed()) {
      pfz::SweepSpec spec;
      spec.n_sites = ls_model.n_sites;
      spec.beta = ls_beta;
      spec.h_r = ls_model.hr;
      spec.theta_values = linspace(ls_theta_min, ls_theta_max, ls_theta_points);
      spec.mode = ls_mode == "exact" ? pfz::PrepMode::ExactState
                                     : pfz::PrepMode::CircuitAnsatz;
      spec.n_layers = ls_layers;
      spec.ansatz_angles = ls_angles;
      if (ls_use_bank) {
        const pfz::ReferenceAnsatz* entry = pfz::find_reference_ansatz(ls_bank_j);
        if (entry == nullptr) {
          throw pfz::ConfigError("no pre-tuned angle bank entry for J given to --bank-j");
        }
        spec.n_layers = 2;
        spec.ansatz_angles = entry->angles;
      }
      if (ls_noise) {
        pfz::NoiseModel model;
        model.params = {ls_noise_a, ls_noise_b};
        model.replace_yy_zz = ls_noise_full;
        spec.noise = model;
      }
      spec.n_shots = ls_shots;
      spec.seed = ls_seed;
      spec.postselect = ls_postselect == "m1"   ? pfz::PostselectMethod::Method1
                        : ls_postselect == "m2" ? pfz::PostselectMethod::Method2
                                                : pfz::PostselectMethod::None;

      ModelOpts chain = ls_model;
      chain.hr = 0.0;  // the sweep applies h_r itself
      const pfz::CoherenceTrace trace = pfz::sweep_coherence(build_model(chain), spec);
      OutputTarget out{ls_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_trace(os, trace);
      if (!ls_zeros_out.empty()) {
        OutputTarget zout{ls_zeros_out};
        std::ostream& zos = zout.stream();
        write_command_header(zos, command_line);
        pfz::write_zero_set(zos, pfz::find_zeros(trace, ls_threshold));
      }
      return 0;
    }

    if (scan->parsed()) {
      ModelOpts chain = sc_model;
      chain.hr = 0.0;  // the scan owns the field axis
      const pfz::CoherenceGrid grid = pfz::scan_plane(
          build_model(chain), sc_beta, sc_model.n_sites,
          linspace(sc_hr_min, sc_hr_max, sc_hr_points),
          linspace(sc_theta_min, sc_theta_max, sc_theta_points));
      OutputTarget out{sc_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_grid(os, grid);
      if (!sc_minima_out.empty()) {
        OutputTarget mout{sc_minima_out};
        std::ostream& mos = mout.stream();
        write_command_header(mos, command_line);
        mos << "h_r,theta,abs_l\n";
        const double thr = sc_threshold > 0.0 ? sc_threshold : 0.1;
        for (const pfz::GridMinimum& m : pfz::grid_minima(grid, thr)) {
          mos << pfz::format_double(m.x) << "," << pfz::format_double(m.y) << ","
              << pfz::format_double(m.abs_l) << "\n";
        }
      }
      return 0;
    }

    if (f_zeros->parsed()) {
      if (fz_k_hi < 0) fz_k_hi = fz_sites - 1;
      const pfz::ZeroSet zs =
          fz_kind == "ising"
              ? pfz::fisher_zeros_ising_analytic(fz_sites, fz_j, fz_k_lo, fz_k_hi,
                                                 fz_m_lo, fz_m_hi)
              : pfz::fisher_zeros_xy_analytic(fz_sites, fz_j, fz_k_lo, fz_k_hi,
                                              fz_m_lo, fz_m_hi);
      OutputTarget out{fz_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_zero_set(os, zs);
      return 0;
    }

    if (f_sweep->parsed()) {
      const std::vector<double> bis = linspace(fs_bi_min, fs_bi_max, fs_bi_points);
      pfz::FisherTrace trace;
      if (fs_mode == "exact") {
        trace = pfz::fisher_sweep_exact(build_model(fs_model), fs_model.n_sites,
                                        fs_beta_r, bis);
      } else {
        pfz::TrotterConfig config;
        config.n_steps = fs_steps;
        config.order = fs_order == 1 ? pfz::TrotterConfig::Order::FirstOrder
                                     : pfz::TrotterConfig::Order::SecondOrderSymmetric;
        trace = pfz::fisher_sweep_trotter(to_spec(fs_model), fs_beta_r, bis, config);
      }
      OutputTarget out{fs_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_fisher_trace(os, trace);
      if (!fs_zeros_out.empty()) {
        OutputTarget zout{fs_zeros_out};
        std::ostream& zos = zout.stream();
        write_command_header(zos, command_line);
        pfz::write_zero_set(zos, pfz::find_fisher_zeros(trace, fs_threshold));
      }
      return 0;
    }

    if (rec->parsed()) {
      std::ifstream zin(rc_zeros_path);
      if (!zin) throw pfz::ConfigError("cannot open zeros file: " + rc_zeros_path);
      pfz::ZeroSet zs = pfz::read_zero_set(zin);
      if (rc_complete) {
        pfz::CompletionOptions copt;
        copt.snap_theta_tol = rc_snap_tol;
        zs = pfz::complete_zeros(zs, rc_beta, copt);
      }
      double ln_p = rc_ln_prefactor;
      ModelOpts chain = rc_model;
      chain.hr = 0.0;
      if (std::isnan(ln_p)) {
        const std::vector<double> p =
            pfz::sector_traces(build_model(chain), rc_beta, rc_model.n_sites);
        ln_p = std::log(p.back());
      }
      const std::vector<double> hs = linspace(rc_h_min, rc_h_max, rc_h_points);
      const std::vector<double> f =
          pfz::reconstruct_free_energy(zs, ln_p, rc_beta, rc_model.n_sites, hs);
      OutputTarget out{rc_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_metadata(os, {{"ln_prefactor", pfz::format_double(ln_p)}});
      os << (rc_compare ? "h,f,f_oracle\n" : "h,f\n");
      const pfz::MatC base = build_model(chain);
      const pfz::MatC mag = pfz::build_magnetization(rc_model.n_sites);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        os << pfz::format_double(hs[i]) << "," << pfz::format_double(f[i]);
        if (rc_compare) {
          const pfz::MatC h_full = base + hs[i] * mag;
          os << "," << pfz::format_double(pfz::free_energy(h_full, rc_beta));
        }
        os << "\n";
      }
      return 0;
    }

    if (tfd->parsed()) {
      ModelOpts chain = tf_model;
      pfz::TfdOptions options;
      options.n_layers = tf_layers;
      options.n_restarts = tf_restarts;
      options.max_iter = tf_max_iter;
      options.seed = tf_seed;
      options.optimizer = tf_optimizer == "nm" ? pfz::OptimizerKind::NelderMead
                                               : pfz::OptimizerKind::CoordinateDescent;
      const pfz::TfdResult result =
          pfz::optimize_tfd(build_model(chain), tf_beta, tf_model.n_sites, options);
      OutputTarget out{tf_out};
      std::ostream& os = out.stream();
      write_command_header(os, command_line);
      pfz::write_metadata(os, {{"fidelity", pfz::format_double(result.fidelity)},
                               {"evaluations", std::to_string(result.evaluations)},
                               {"converged", result.converged ? "true" : "false"}});
      os << "angle\n";
      for (double a : result.angles) os << pfz::format_double(a) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
