#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cpotts/algebra.hpp"

namespace cpotts {

/// Curve modulus (k, k') with k^2 + k'^2 = 1.
struct Modulus {
  Complex k;
  Complex k_prime;
};

/// k' = principal sqrt(1 - k^2).
Modulus modulus_from_k(Complex k);

/// A point (x, y, μ) on the curve
///   x^N + y^N = k (1 + x^N y^N),   μ^N = k' / (1 - k x^N) = (1 - k y^N) / k'.
struct Rapidity {
  Complex x;
  Complex y;
  Complex mu;
};

/// Normalized residuals of the three curve relations. Each is the raw
/// residual divided by the largest magnitude among its terms.
struct CurveResiduals {
  double curve = 0.0;
  double mu_from_x = 0.0;
  double mu_from_y = 0.0;

  double max() const noexcept;
};

/// Builds the point over x. The curve fixes only y^N and μ^N, so the Nth-root
/// branches are explicit: y = ω^branch_y · principal root, likewise for μ.
/// Throws DomainError when |1 - k x^N| < 1e-10.
Rapidity rapidity_from_x(Complex x, int branch_y, int branch_mu, const Modulus& modulus,
                         const UnityContext& ctx);

CurveResiduals validate_rapidity(const Rapidity& r, const Modulus& modulus, const UnityContext& ctx);

/// Smallest weight denominator among the ordered pair (p, q):
/// min over j = 1..N of |y_p - x_q ω^j| and |y_q - y_p ω^j|.
double pair_conditioning(const Rapidity& p, const Rapidity& q, const UnityContext& ctx);

/// Deterministic rejection sampler for rapidities. Owns its RNG; not
/// thread-safe, so create one per worker.
class RapiditySampler {
 public:
  static constexpr double kMinRadius = 0.2;
  static constexpr double kMaxRadius = 1.5;
  static constexpr double kCurveGuard = 1e-3;
  static constexpr int kMaxRejections = 10000;
  /// Families are rejected when any pair_conditioning falls below this.
  static constexpr double kPairGuard = 1e-3;
  /// |k| must stay this far from 0 and 1.
  static constexpr double kModulusGuard = 1e-6;

  /// Throws InputError when |k| is within kModulusGuard of 0 or 1.
  RapiditySampler(std::uint64_t seed, Modulus modulus, const UnityContext& ctx);

  /// One point: x uniform in the annulus kMinRadius <= |x| <= kMaxRadius,
  /// random branches, rejecting |1 - k x^N| < kCurveGuard and points whose
  /// own W_pp denominators fall below kPairGuard.
  Rapidity next();

  /// `count` points whose every ordered pair passes kPairGuard, so all
  /// weights among them are well defined.
  std::vector<Rapidity> next_family(int count);

  const Modulus& modulus() const noexcept { return modulus_; }

 private:
  std::mt19937_64 rng_;
  Modulus modulus_;
  const UnityContext* ctx_;
};

}  // namespace cpotts
