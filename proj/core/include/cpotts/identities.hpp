#pragma once

#include <array>
#include <cstdint>

#include "cpotts/algebra.hpp"
#include "cpotts/hypergeometric.hpp"
#include "cpotts/identity_result.hpp"
#include "cpotts/rapidity.hpp"
#include "cpotts/weights.hpp"

namespace cpotts {

/// max_n |W_pq(n) W_qp(n) - 1| together with max_n |W_pp(n) - 1|.
IdentityResult check_reflection(const Rapidity& p, const Rapidity& q, const UnityContext& ctx,
                                double tol = 1e-10);

/// Builds M[a,c] = Σ_b W̄_pq(a-b) W̄_qp(b-c). Residual is the larger of
/// max off-diagonal / max |diag| and the spread of the diagonal relative to
/// M[0,0]. constant = r_pq = M[0,0].
IdentityResult inversion_constant(const Rapidity& p, const Rapidity& q, const UnityContext& ctx,
                                  double tol = 1e-10);

/// Fourier transform of the W table against the cyclic 2Φ1 with parameters
/// (α_pq, β_pq, γ_pq ω^k), for every k. Residual is the worst relative gap.
IdentityResult check_fourier_phi21(const Rapidity& p, const Rapidity& q, const UnityContext& ctx,
                                   double tol = 1e-10);

/// Both sides of the star-triangle relation for one spin triple:
///   lhs = Σ_d W̄_pr(a-d) W_pq(d-c) W̄_rq(d-b)
///   rhs = W̄_pq(a-b) W_pr(b-c) W_rq(a-c)       (without R)
/// abs_sum = Σ_d |summand|, the rounding scale of lhs.
struct StarTriangleSides {
  Complex lhs;
  Complex rhs;
  double abs_sum = 0.0;
};

/// Precomputed weight tables for a rapidity triple.
class StarTriangleTables {
 public:
  StarTriangleTables(const Rapidity& p, const Rapidity& q, const Rapidity& r, const UnityContext& ctx);

  StarTriangleSides sides(std::int64_t a, std::int64_t b, std::int64_t c) const;
  int order() const noexcept { return n_; }

 private:
  int n_;
  WeightTable wbar_pr_, w_pq_, wbar_rq_;
  WeightTable wbar_pq_, w_pr_, w_rq_;
};

/// |lhs - R rhs| / max(|lhs|, |R rhs|, abs_sum); 0 when everything vanishes.
double star_triangle_residual(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                              std::int64_t b, std::int64_t c, Complex R, const UnityContext& ctx);

/// Extracts R_pqr from spin triple (0,0,0), or from the triple with the
/// largest |rhs| when that one is below the pole guard, and sweeps all N^3
/// triples. constant = R_pqr.
IdentityResult star_triangle_constant(const Rapidity& p, const Rapidity& q, const Rapidity& r,
                                      const UnityContext& ctx, double tol = 1e-9);

/// The star-triangle sum written as a cyclic 4Φ3 with leading parameter ω:
///   lhs = prefactor · Σ_{l=0}^{N-1} ∏_i γ_i^l (α_i; ω)_l / (β_i; ω)_l
/// where the summation index is aligned as d = c + l. With that alignment
///   α = (ω^{c-a} y_r/y_p,   ω x_p/y_q, ω^{c-b} x_q/x_r)
///   β = (ω^{c-a+1} x_p/x_r, ω x_q/y_p, ω^{c-b+1} y_r/y_q)
///   γ = (y_p/(μ_p μ_r x_r), μ_p y_q/(μ_q y_p), ω μ_q μ_r x_r/y_q)
/// and the series is well balanced: ω² ∏α = ∏β, ∏γ = ω.
struct FourPhiThree {
  std::array<Complex, 3> alpha;
  std::array<Complex, 3> beta;
  std::array<Complex, 3> gamma;
  Complex prefactor;
  /// Series index whose term fixed the prefactor (0 unless that term vanished).
  int reference_index = 0;
  /// |ω² ∏α / ∏β - 1|.
  double balance_residual = 0.0;
  /// |∏γ - ω|.
  double argument_residual = 0.0;

  Complex argument() const noexcept { return gamma[0] * gamma[1] * gamma[2]; }

  /// The series part as a terminating spec with argument ∏γ.
  CyclicSeriesSpec series(const UnityContext& ctx) const;
};

/// Throws DomainError for vanishing coordinates or when every series term
/// vanishes (no usable reference).
FourPhiThree map_to_4phi3(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                          std::int64_t b, std::int64_t c, const UnityContext& ctx);

/// Well-balancedness (tolerance balance_tol) and prefactor · series = lhs
/// (tolerance tol, relative to max(|lhs|, abs_sum)).
IdentityResult check_4phi3(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                           std::int64_t b, std::int64_t c, const UnityContext& ctx, double tol = 1e-9,
                           double balance_tol = 1e-11);

}  // namespace cpotts
