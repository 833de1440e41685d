#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cpotts/algebra.hpp"

namespace cpotts {

using ParamValue = std::variant<std::int64_t, double, Complex, std::string>;

/// Outcome of one identity check on one parameter instance.
struct IdentityResult {
  std::string name;
  /// Inputs in insertion order (seed, branches, spins, parameters, ...).
  std::vector<std::pair<std::string, ParamValue>> params;
  /// Extracted constant when the identity has one (r_pq, R_pqr, λ, ...).
  std::optional<Complex> constant;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// False when the instance is degenerate and the identity is not claimed.
  bool asserted = true;
  std::string note;

  IdentityResult() = default;
  IdentityResult(std::string identity_name, double tol) : name(std::move(identity_name)), tolerance(tol) {}

  IdentityResult& add(std::string key, ParamValue value) {
    params.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  /// Sets max_residual and derives pass from the tolerance. NaN fails.
  IdentityResult& finish(double residual) {
    max_residual = residual;
    pass = residual <= tolerance;
    return *this;
  }

  /// Marks the instance as not asserted (degenerate input); the residual is
  /// NaN so pass stays consistent with it.
  IdentityResult& skip(std::string why) {
    asserted = false;
    pass = false;
    max_residual = std::numeric_limits<double>::quiet_NaN();
    note = std::move(why);
    return *this;
  }

  /// Keeps the computed residual and pass flag but stops the instance from
  /// counting as a failure; used for empirically recorded cases.
  IdentityResult& record_only(std::string why) {
    asserted = false;
    note = std::move(why);
    return *this;
  }

  bool failed() const noexcept { return asserted && !pass; }
};

}  // namespace cpotts
