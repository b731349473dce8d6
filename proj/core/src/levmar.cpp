#include "nvirrad/levmar.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "nvirrad/errors.hpp"

namespace nvirrad {

namespace {

// Solves A*x = b in place by Gaussian elimination with partial pivoting.
// A is n x n row-major. Returns false when a pivot is numerically zero.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
    }
    if (std::abs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = a[row * n + col] / a[col * n + col];
      for (std::size_t k = col; k < n; ++k) a[row * n + k] -= factor * a[col * n + k];
      b[row] -= factor * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (std::size_t k = i + 1; k < n; ++k) sum -= a[i * n + k] * b[k];
    b[i] = sum / a[i * n + i];
  }
  return true;
}

double sum_squared_residuals(const CurveModel& model, std::span<const double> xs,
                             std::span<const double> ys, std::span<const double> p) {
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - model(xs[i], p);
    ssr += r * r;
  }
  return ssr;
}

}  // namespace

LmFit lm_fit(const CurveModel& model, std::span<const double> xs, std::span<const double> ys,
             std::vector<double> initial, const LmOptions& options) {
  const std::size_t m = xs.size();
  const std::size_t n = initial.size();
  if (m != ys.size()) {
    throw fit_error("lm_fit: x and y sizes differ", 0.0);
  }
  if (m < n || n == 0) {
    throw fit_error("lm_fit: need at least as many points as parameters", 0.0);
  }

  std::vector<double> p = std::move(initial);
  std::vector<double> jac(m * n);       // d model / d p_j at each point
  std::vector<double> residual(m);
  std::vector<double> jtj(n * n), a(n * n);
  std::vector<double> jtr(n), step(n);
  std::vector<double> p_lo(n), p_hi(n), trial(n);

  double lambda = options.initial_lambda;
  double ssr = sum_squared_residuals(model, xs, ys, p);
  bool converged = false;
  int iter = 0;

  for (; iter < options.max_iterations && !converged; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      residual[i] = ys[i] - model(xs[i], p);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double h = 1e-7 * std::max(std::abs(p[j]), 1e-7);
      p_lo = p;
      p_hi = p;
      p_lo[j] -= h;
      p_hi[j] += h;
      for (std::size_t i = 0; i < m; ++i) {
        jac[i * n + j] = (model(xs[i], p_hi) - model(xs[i], p_lo)) / (2.0 * h);
      }
    }

    for (std::size_t j = 0; j < n; ++j) {
      jtr[j] = 0.0;
      for (std::size_t i = 0; i < m; ++i) jtr[j] += jac[i * n + j] * residual[i];
      for (std::size_t k = 0; k <= j; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += jac[i * n + j] * jac[i * n + k];
        jtj[j * n + k] = sum;
        jtj[k * n + j] = sum;
      }
    }

    // Try damped steps until one reduces the residual.
    bool accepted = false;
    while (!accepted) {
      a = jtj;
      for (std::size_t j = 0; j < n; ++j) {
        a[j * n + j] += lambda * std::max(jtj[j * n + j], 1e-30);
      }
      step = jtr;
      const bool solvable = solve_dense(a, step, n);
      if (solvable) {
        for (std::size_t j = 0; j < n; ++j) trial[j] = p[j] + step[j];
        const double trial_ssr = sum_squared_residuals(model, xs, ys, trial);
        if (std::isfinite(trial_ssr) && trial_ssr <= ssr) {
          double max_rel_change = 0.0;
          for (std::size_t j = 0; j < n; ++j) {
            const double scale = std::max(std::abs(p[j]), 1e-30);
            max_rel_change = std::max(max_rel_change, std::abs(step[j]) / scale);
          }
          const double ssr_drop = ssr - trial_ssr;
          p = trial;
          ssr = trial_ssr;
          lambda = std::max(lambda * 0.1, 1e-14);
          accepted = true;
          if (max_rel_change < options.param_tolerance ||
              ssr_drop <= 1e-15 * std::max(ssr, 1e-300)) {
            converged = true;
          }
          break;
        }
      }
      lambda *= 10.0;
      if (lambda > 1e14) {
        // No downhill direction left; at the bottom of a (possibly flat) basin.
        converged = true;
        accepted = true;
      }
    }
  }

  const double rms = std::sqrt(ssr / static_cast<double>(m));
  if (!converged) {
    throw fit_error("lm_fit: no convergence after " + std::to_string(options.max_iterations) +
                        " iterations (residual rms " + std::to_string(rms) + ")",
                    rms);
  }

  LmFit fit;
  fit.params = p;
  fit.residual_rms = rms;
  fit.iterations = iter;
  fit.converged = true;

  // Covariance diagnostics: sigma^2 * (J'J)^-1 diagonal via column solves.
  fit.stderrs.assign(n, 0.0);
  if (m > n) {
    const double sigma2 = ssr / static_cast<double>(m - n);
    for (std::size_t j = 0; j < n; ++j) {
      a = jtj;
      std::vector<double> e(n, 0.0);
      e[j] = 1.0;
      if (solve_dense(a, e, n) && e[j] > 0.0) {
        fit.stderrs[j] = std::sqrt(sigma2 * e[j]);
      }
    }
  }
  return fit;
}

}  // namespace nvirrad
