#pragma once

#include <functional>
#include <span>
#include <vector>

namespace nvirrad {

using CurveModel = std::function<double(double x, std::span<const double> params)>;

struct LmOptions {
  int max_iterations = 200;
  double param_tolerance = 1e-10;  // relative parameter change per accepted step
  double initial_lambda = 1e-3;
};

struct LmFit {
  std::vector<double> params;
  std::vector<double> stderrs;  // sqrt of covariance diagonal, 0 when m == n
  double residual_rms = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Damped least squares (Levenberg-Marquardt) with a numeric central-difference
// Jacobian. Deterministic: identical inputs give identical results.
// Throws fit_error when the iteration cap is reached without convergence or
// the damping blows up on a degenerate problem.
LmFit lm_fit(const CurveModel& model, std::span<const double> xs, std::span<const double> ys,
             std::vector<double> initial, const LmOptions& options = {});

}  // namespace nvirrad
