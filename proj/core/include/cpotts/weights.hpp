#pragma once

#include <cstdint>
#include <vector>

#include "cpotts/algebra.hpp"
#include "cpotts/rapidity.hpp"

namespace cpotts {

enum class WeightKind { W, Wbar };

const char* to_string(WeightKind kind) noexcept;

/// Product formula without reducing n, for 0 <= n <= N:
///   W:    ∏_{j=1}^{n} (μ_p/μ_q) (y_q - x_p ω^j) / (y_p - x_q ω^j)
///   Wbar: ∏_{j=1}^{n} (μ_p μ_q) (ω x_p - x_q ω^j) / (y_q - y_p ω^j)
/// n = N is the periodicity probe: on the curve it returns 1.
Complex weight_product(WeightKind kind, const Rapidity& p, const Rapidity& q, int n,
                       const UnityContext& ctx);

/// W_pq(n), n reduced mod N; W_pq(0) = 1. Throws DomainError on a pole factor.
Complex weight_w(const Rapidity& p, const Rapidity& q, std::int64_t n, const UnityContext& ctx);

/// W̄_pq(n), n reduced mod N; W̄_pq(0) = 1.
Complex weight_wbar(const Rapidity& p, const Rapidity& q, std::int64_t n, const UnityContext& ctx);

/// Two-spin forms: W_pq(a - b).
inline Complex weight_w(const Rapidity& p, const Rapidity& q, std::int64_t a, std::int64_t b,
                        const UnityContext& ctx) {
  return weight_w(p, q, a - b, ctx);
}
inline Complex weight_wbar(const Rapidity& p, const Rapidity& q, std::int64_t a, std::int64_t b,
                           const UnityContext& ctx) {
  return weight_wbar(p, q, a - b, ctx);
}

/// Pochhammer parameterization:
///   W_pq(n)  = γ^n  (α; ω)_n / (β; ω)_n
///   W̄_pq(n) = γ̄^n (ᾱ; ω)_n / (β̄; ω)_n
struct WeightParams {
  Complex alpha, beta, gamma;
  Complex alpha_bar, beta_bar, gamma_bar;
};

/// Throws DomainError if y_p, y_q or x_p vanish.
WeightParams weight_params(const Rapidity& p, const Rapidity& q, const UnityContext& ctx);

/// All N values of one weight family, indexed by n mod N.
class WeightTable {
 public:
  WeightTable(const Rapidity& p, const Rapidity& q, WeightKind kind, const UnityContext& ctx);

  WeightKind kind() const noexcept { return kind_; }
  const Rapidity& p() const noexcept { return p_; }
  const Rapidity& q() const noexcept { return q_; }
  int order() const noexcept { return static_cast<int>(values_.size()); }
  const std::vector<Complex>& values() const noexcept { return values_; }

  Complex operator()(std::int64_t n) const noexcept {
    const std::int64_t N = static_cast<std::int64_t>(values_.size());
    std::int64_t r = n % N;
    if (r < 0) r += N;
    return values_[static_cast<std::size_t>(r)];
  }

 private:
  WeightKind kind_;
  Rapidity p_;
  Rapidity q_;
  std::vector<Complex> values_;
};

inline WeightTable weight_table(const Rapidity& p, const Rapidity& q, WeightKind kind,
                                const UnityContext& ctx) {
  return WeightTable(p, q, kind, ctx);
}

/// W^(f)(k) = Σ_{n=0}^{N-1} ω^{nk} W_pq(n).
Complex fourier_weight(const Rapidity& p, const Rapidity& q, std::int64_t k, const UnityContext& ctx);

}  // namespace cpotts
