#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cpotts {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Magnitude below which a denominator factor counts as a pole.
inline constexpr double kPoleGuard = 1e-12;

/// Order N together with ω = exp(2πi/N) and its cached powers ω^0..ω^{N-1}.
/// Immutable after construction; safe to share between threads.
class UnityContext {
 public:
  explicit UnityContext(int order);

  int order() const noexcept { return order_; }
  Complex omega() const noexcept { return powers_.size() > 1 ? powers_[1] : powers_[0]; }

  /// ω^j for any integer j (reduced mod N, so negative j is fine).
  Complex power(std::int64_t j) const noexcept { return powers_[static_cast<std::size_t>(reduce(j))]; }

  std::span<const Complex> powers() const noexcept { return powers_; }

  /// j mod N in [0, N).
  std::int64_t reduce(std::int64_t j) const noexcept {
    const std::int64_t r = j % order_;
    return r < 0 ? r + order_ : r;
  }

 private:
  int order_;
  std::vector<Complex> powers_;
};

/// (x; ω)_n = ∏_{l=0}^{n-1} (1 - x ω^l).
Complex omega_pochhammer(Complex x, int n, const UnityContext& ctx);

/// Signed-length variant: for n < 0 uses (x; ω)_n = 1 / (x ω^n; ω)_{-n}.
/// Throws DomainError when the reciprocal hits a vanishing product.
Complex omega_pochhammer_signed(Complex x, int n, const UnityContext& ctx);

/// (x; q)_n = ∏_{j=0}^{n-1} (1 - x q^j) for an arbitrary base q.
Complex q_pochhammer(Complex x, Complex q, int n);

/// Gaussian binomial [alpha over n] in base q. Falls back to the q-Pascal
/// recurrence when the Pochhammer quotient is 0/0 (q a root of unity).
Complex q_binomial(int alpha, int n, Complex q);

/// p(x) = ∏_{j=1}^{N-1} (1 - ω^j x)^{j/N}, each power taken through the
/// principal logarithm: exp(Σ_j (j/N) Log(1 - ω^j x)).
Complex p_product(Complex x, const UnityContext& ctx);

/// Δ(x) = (1 - x^N)^{1/N}, principal root.
Complex delta_root(Complex x, const UnityContext& ctx);

/// Φ₀ = exp(iπ (N-1)(N-2) / 12N).
Complex phi_zero(const UnityContext& ctx);

/// Principal branch of log Γ(z): analytic off the negative real axis and
/// real on the positive real axis. Re z < 1/2 goes through the reflection
/// formula with the continuous branch of log sin(πz). Throws DomainError
/// within kPoleGuard of a nonpositive integer.
Complex log_gamma(Complex z);

/// Γ(z) = exp(log_gamma(z)).
Complex gamma(Complex z);

/// z^n by repeated multiplication (exact for small integer n).
Complex int_pow(Complex z, int n);

/// |a - b| / max(|a|, |b|, scale); zero when all three are zero.
double relative_gap(Complex a, Complex b, double scale = 0.0);

}  // namespace cpotts
