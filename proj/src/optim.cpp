// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pfz/errors.hpp"

namespace pfz {

OptimResult nelder_mead(const ObjectiveFn& fn, const std::vector<double>& x0,
                        const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw ConfigError("nelder_mead: empty parameter vector");

  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return fn(x);
  };

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> f(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) f[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  bool converged = false;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];

    double spread_f = std::abs(f[worst] - f[best]);
    double spread_x = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      spread_x = std::max(spread_x, std::abs(simplex[worst][i] - simplex[best][i]));
    }
    if (spread_f < options.f_tol && spread_x < options.x_tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
    }
    for (std::size_t k = 0; k < dim; ++k) centroid[k] /= static_cast<double>(dim);

    auto blend = [&](double coef) {
      std::vector<double> x(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        x[k] = centroid[k] + coef * (simplex[worst][k] - centroid[k]);
      }
      return x;
    };

    std::vector<double> xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < f[best]) {
      std::vector<double> xe = blend(-2.0);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        f[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      simplex[worst] = std::move(xr);
      f[worst] = fr;
    } else {
      const bool outside = fr < f[worst];
      std::vector<double> xc = blend(outside ? -0.5 : 0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, f[worst])) {
        simplex[worst] = std::move(xc);
        f[worst] = fc;
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= dim; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < dim; ++k) {
            simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
          }
          f[i] = eval(simplex[i]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= dim; ++i) {
    if (f[i] < f[best]) best = i;
  }
  return OptimResult{simplex[best], f[best], evals, converged};
}

namespace {

// Golden-section minimum of g on [lo, hi] down to bracket width tol.
double golden_min(const std::function<double(double)>& g, double lo, double hi,
                  double tol, int* evals) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  *evals += 2;
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = g(x2);
    }
    ++(*evals);
  }
  return 0.5 * (a + b);
}

}  // namespace

OptimResult coordinate_descent(const ObjectiveFn& fn, const std::vector<double>& x0,
                               const CoordinateDescentOptions& options) {
  const std::size_t dim = x0.size();
  if (dim == 0) throw ConfigError("coordinate_descent: empty parameter vector");

  std::vector<double> x = x0;
  int evals = 0;
  double fx = fn(x);
  ++evals;
  double span = options.span;
  bool converged = false;

  for (int cycle = 0; cycle < options.max_cycles; ++cycle) {
    const double f_before = fx;
    for (std::size_t i = 0; i < dim; ++i) {
      auto g = [&](double v) {
        std::vector<double> xt = x;
        xt[i] = v;
        return fn(xt);
      };
      const double best = golden_min(g, x[i] - span, x[i] + span,
                                     options.tol * std::max(1.0, span), &evals);
      const double fb = g(best);
      ++evals;
      if (fb < fx) {
        x[i] = best;
        fx = fb;
      }
    }
    if (f_before - fx < options.tol) {
      span *= 0.5;
      if (span < options.tol) {
        converged = true;
        break;
      }
    }
  }
  return OptimResult{x, fx, evals, converged};
}

}  // namespace pfz
