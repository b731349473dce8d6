#pragma once

#include <stdexcept>
#include <string>

namespace nvirrad {

// Bad run configuration (flags, file formats, incompatible parameters).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Curve fit failed to converge or input is degenerate for fitting.
class fit_error : public std::runtime_error {
 public:
  fit_error(const std::string& what, double last_residual_rms)
      : std::runtime_error(what), residual_rms(last_residual_rms) {}

  double residual_rms;
};

}  // namespace nvirrad
