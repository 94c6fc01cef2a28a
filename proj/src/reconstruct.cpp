// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pfz/errors.hpp"
#include "pfz/util.hpp"

namespace pfz {

ZeroSet complete_zeros(const ZeroSet& field_zeros, double beta,
                       const CompletionOptions& options) {
  if (field_zeros.plane != Plane::FieldH) {
    throw PlaneMismatch("complete_zeros: input must be field-plane zeros");
  }
  if (!(beta > 0.0)) throw ConfigError("complete_zeros: need beta > 0");

  std::vector<cplx> zs;
  zs.reserve(field_zeros.zeros.size());
  for (const cplx& h : field_zeros.zeros) {
    double theta = beta * h.imag();
    if (options.snap_theta_tol > 0.0 &&
        std::abs(theta - 0.5 * kPi) <= options.snap_theta_tol) {
      theta = 0.5 * kPi;
    }
    zs.push_back(std::exp(2.0 * beta * h.real()) *
                 std::exp(cplx(0.0, 2.0 * theta)));
  }

  auto close = [&](const cplx& a, const cplx& b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= options.merge_tol * scale;
  };

  std::vector<cplx> unique;
  for (const cplx& z : zs) {
    bool seen = false;
    for (const cplx& u : unique) {
      if (close(z, u)) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(z);
  }

  if (options.add_conjugates) {
    std::vector<bool> paired(unique.size(), false);
    std::vector<cplx> closed;
    for (std::size_t i = 0; i < unique.size(); ++i) {
      if (paired[i]) continue;
      const cplx z = unique[i];
      const double scale = std::max(1.0, std::abs(z));
      if (std::abs(z.imag()) <= options.merge_tol * scale) {
        closed.emplace_back(z.real(), 0.0);
        paired[i] = true;
        continue;
      }
      // Find the best conjugate partner and average the pair so closure is
      // exact; otherwise append the missing conjugate.
      std::size_t best = unique.size();
      double best_d = options.merge_tol * scale;
      for (std::size_t j = i + 1; j < unique.size(); ++j) {
        if (paired[j]) continue;
        const double d = std::abs(std::conj(unique[j]) - z);
        if (d <= best_d) {
          best_d = d;
          best = j;
        }
      }
      cplx rep = z;
      if (best < unique.size()) {
        rep = 0.5 * (z + std::conj(unique[best]));
        paired[best] = true;
      }
      closed.push_back(rep);
      closed.push_back(std::conj(rep));
      paired[i] = true;
    }
    unique = std::move(closed);
  }

  ZeroSet out;
  out.zeros = std::move(unique);
  out.plane = Plane::FugacityZ;
  out.provenance = field_zeros.provenance;
  out.convention = FugacityConvention::ZPlus2BetaH;
  return out;
}

namespace {

// ln p_N + sum_j ln(z(h) - z_j) split into real part and accumulated phase.
void log_poly_parts(const ZeroSet& zeros, double beta, double h, double ln_prefactor,
                    double* re, double* im) {
  const cplx z = zeros.convention == FugacityConvention::ZPlus2BetaH
                     ? std::exp(cplx(2.0 * beta * h, 0.0))
                     : std::exp(cplx(-2.0 * beta * h, 0.0));
  double sum_re = ln_prefactor, sum_im = 0.0;
  for (const cplx& zj : zeros.zeros) {
    const cplx diff = z - zj;
    if (diff == cplx(0.0, 0.0)) {
      throw NonPositivePartition("reconstruct: evaluation point coincides with a zero");
    }
    sum_re += std::log(std::abs(diff));
    sum_im += std::arg(diff);
  }
  *re = sum_re;
  *im = sum_im;
}

double field_term(const ZeroSet& zeros, int n_sites, double h) {
  return zeros.convention == FugacityConvention::ZPlus2BetaH
             ? static_cast<double>(n_sites) * h
             : -static_cast<double>(n_sites) * h;
}

}  // namespace

std::vector<double> reconstruct_free_energy(const ZeroSet& fugacity_zeros,
                                            double ln_prefactor, double beta,
                                            int n_sites,
                                            const std::vector<double>& h_values) {
  if (fugacity_zeros.plane != Plane::FugacityZ) {
    throw PlaneMismatch("reconstruct_free_energy: zeros must be fugacity-plane");
  }
  if (!(beta > 0.0)) throw ConfigError("reconstruct_free_energy: need beta > 0");

  std::vector<double> f;
  f.reserve(h_values.size());
  for (double h : h_values) {
    double s_re = 0.0, s_im = 0.0;
    log_poly_parts(fugacity_zeros, beta, h, ln_prefactor, &s_re, &s_im);
    // Z = e^{s_re} (cos s_im + i sin s_im) up to the field prefactor.
    const double c = std::cos(s_im);
    if (c <= 0.0 || std::abs(std::tan(s_im)) > 1e-6) {
      throw NonPositivePartition(
          "reconstruct_free_energy: partition function is not positive real at h=" +
          std::to_string(h));
    }
    f.push_back(field_term(fugacity_zeros, n_sites, h) -
                (s_re + std::log(c)) / beta);
  }
  return f;
}

double fit_prefactor_offset(const ZeroSet& fugacity_zeros, double beta, int n_sites,
                            const std::vector<double>& h_values,
                            const std::vector<double>& f_reference) {
  if (fugacity_zeros.plane != Plane::FugacityZ) {
    throw PlaneMismatch("fit_prefactor_offset: zeros must be fugacity-plane");
  }
  if (h_values.empty() || h_values.size() != f_reference.size()) {
    throw ConfigError("fit_prefactor_offset: sample vectors empty or mismatched");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    double s_re = 0.0, s_im = 0.0;
    log_poly_parts(fugacity_zeros, beta, h_values[i], 0.0, &s_re, &s_im);
    acc += beta * (field_term(fugacity_zeros, n_sites, h_values[i]) - f_reference[i]) -
           s_re;
  }
  return acc / static_cast<double>(h_values.size());
}

}  // namespace pfz
