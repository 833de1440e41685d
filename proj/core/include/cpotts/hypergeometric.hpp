#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cpotts/algebra.hpp"
#include "cpotts/identity_result.hpp"

namespace cpotts {

/// Terminating series at q = ω with the leading numerator parameter ω left
/// implicit:
///   Σ_{l=0}^{N-1} ∏_j (α_j; ω)_l / ∏_j (β_j; ω)_l · z^l.
/// When `cyclic` is set the argument satisfies z^N ∏(1-α_j^N) = ∏(1-β_j^N),
/// which makes the summand periodic mod N.
struct CyclicSeriesSpec {
  int order = 1;
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
  Complex argument{0.0, 0.0};
  bool cyclic = true;

  /// |z^N ∏(1-α_j^N) - ∏(1-β_j^N)| relative to the larger side.
  double periodicity_residual() const;
};

/// Cyclic 2Φ1(ω, x; y; z) spec.
CyclicSeriesSpec phi21_spec(Complex x, Complex y, Complex z, const UnityContext& ctx);

/// Direct O(N·p) summation with incremental Pochhammer updates. Throws
/// DomainError naming the denominator parameter and index that vanish.
Complex eval_terminating_phi(const CyclicSeriesSpec& spec, const UnityContext& ctx);

/// Summand l of the terminating series computed by its product formula; l
/// may exceed N-1 (used to probe periodicity).
Complex series_term(const CyclicSeriesSpec& spec, int l, const UnityContext& ctx);

/// Cyclic 2Φ1(ω, x; y; z) by direct summation.
Complex phi21(Complex x, Complex y, Complex z, const UnityContext& ctx);

/// Generic-base series with (q; q)_l in the denominator:
///   Σ_l ∏(a_i; q)_l / (∏(b_j; q)_l (q; q)_l) z^l.
/// Stops early when a numerator factor vanishes (terminating case), or when
/// two consecutive terms drop below 1e-16·|sum|. Throws DomainError on a
/// denominator pole, SamplerError if max_terms is exhausted.
Complex eval_basic_phi(std::span<const Complex> numerators, std::span<const Complex> denominators,
                       Complex q, Complex z, int max_terms = 10000);

/// Standard-normalized series at q = ω with q-power parameters
///   Σ_{l=0}^{N-1} ∏(q^{a_i}; q)_l / (∏(q^{b_j}; q)_l (q; q)_l) t^l,
/// each term taken as its q → ω limit: factors 1 - q^m with m ≡ 0 (mod N),
/// m ≠ 0, cancel pairwise as m/m'; an exponent sum of exactly zero is an
/// exact zero. Throws DomainError when a term keeps a net pole.
Complex eval_phi_root_limit(std::span<const int> numerator_exponents,
                            std::span<const int> denominator_exponents, Complex t,
                            const UnityContext& ctx);

/// Σ_{n=0}^{α} (ω^{-α};ω)_n/(ω;ω)_n x^n against (ω^{-α}x; ω)_α and against
/// Σ_n [α n] (-x)^n ω^{n(n-1)/2 - nα}.
IdentityResult check_rothe(int alpha, Complex x, const UnityContext& ctx, double tol = 1e-12);

/// Root-of-unity Euler transformation
///   2Φ1(ω^α, ω^β; ω^γ; t) = (ω^{α+β-γ} t; ω)_{N-α-β+γ} 2Φ1(ω^{γ-α}, ω^{γ-β}; ω^γ; ω^{α+β-γ} t)
/// with α, β, γ normalized into 1..N and both sides from eval_phi_root_limit.
/// Throws InputError outside 0 <= α+β-γ <= N or when either side has a pole.
IdentityResult check_euler_analog(int alpha, int beta, int gamma, Complex t, const UnityContext& ctx,
                                  double tol = 1e-11);

/// Closed form of the cyclic 2Φ1 on principal branches (d = 0) and the
/// phase class m with direct / closed ≈ ω^m.
struct Phi21ClosedForm {
  Complex closed;
  Complex direct;
  int phase_class = 0;
  /// ||direct| - |closed|| / |direct|.
  double modulus_residual = 0.0;
  /// |direct/closed - ω^m| after normalizing the ratio's modulus away.
  double phase_distance = 0.0;
};

/// Throws InputError when z^N(1-x^N) = 1-y^N fails beyond 1e-9 relative,
/// DomainError on a p-factor pole.
Phi21ClosedForm phi21_cyclic_closed(Complex x, Complex y, Complex z, const UnityContext& ctx);

IdentityResult check_phi21_closed(Complex x, Complex y, Complex z, const UnityContext& ctx,
                                  double modulus_tol = 1e-8, double phase_tol = 1e-7);

/// 2Φ1(ω, x; y; z) · 2Φ1(ω, y/(xz); ω/z; x) = N.
IdentityResult check_wff(Complex x, Complex y, Complex z, const UnityContext& ctx, double tol = 1e-9);

/// 2Φ1(ω, xω^m; yω^n; zω^k) = 2Φ1(ω, x; y; z) (ω/y)^k (zω^k)^{-n}
///   (y;ω)_n (z;ω)_k (ωx/y;ω)_{m-n} / ((x;ω)_m (ωxz/y;ω)_{m-n+k}),
/// negative lengths via (a;ω)_{-l} = 1/(aω^{-l};ω)_l.
IdentityResult check_shift_recursion(Complex x, Complex y, Complex z, int m, int n, int k,
                                     const UnityContext& ctx, double tol = 1e-10);

/// Cyclic 3Φ2 transformation
///   3Φ2(ω,x1,x2; y1,y2; z) = A · 3Φ2(ω, z/z1, y1/(x1 z1); ω/z1, ω x2 z/(y2 z1); ω x1/y2)
///   A = 2Φ1(ω,x1;y1;z1) 2Φ1(ω,x2;y2;z/z1) / N,  z1^N = (1-y1^N)/(1-x1^N),
/// with z1 = ω^branch · principal root and A summed directly.
IdentityResult check_phi32_transform(Complex x1, Complex x2, Complex y1, Complex y2, Complex z,
                                     int z1_branch, const UnityContext& ctx, double tol = 1e-9);

/// The two-step 3Φ2 chain behind the Euler transformation: returns
/// constant = A·B/B̄ and compares it with (ω^{α+β-γ} x/y; ω)_{N-α-β+γ}.
/// z = ω^z_branch · ((1-y^N)/(1-x^N))^{1/N}.
IdentityResult check_euler_chain(int alpha, int beta, int gamma, Complex x, Complex y, int z_branch,
                                 const UnityContext& ctx, double tol = 1e-9);

/// Generic-q Pfaff–Saalschütz sum
///   3Φ2(a, b, q^{-n}; c, q^{1-n}ab/c; q, q) = (c/a;q)_n (c/b;q)_n / ((c;q)_n (c/ab;q)_n).
IdentityResult check_saalschutz(Complex a, Complex b, Complex c, int n, Complex q, double tol = 1e-11);

/// q-binomial theorem 1Φ0(a;;q,x) = (ax;q)_∞/(x;q)_∞ for |q| < 1, |x| < 1.
IdentityResult check_q_binomial_theorem(Complex a, Complex x, Complex q, double tol = 1e-12);

/// min_l |1 - b ω^l| over l = 0..N-1; how close (b; ω)_l comes to a pole.
double pochhammer_clearance(Complex b, const UnityContext& ctx);

/// Cyclic 2Φ1 parameters with z^N (1-x^N) = 1-y^N.
struct CyclicTriple {
  Complex x, y, z;
};

/// Draws x, y area-uniformly from 0.2 <= |r| <= 1.5 and z on a random Nth-root
/// branch. Rejects draws where any factor entering the direct sums, the wff
/// partner series or the closed form's p-products comes within 1e-3 of zero.
CyclicTriple sample_cyclic_triple(std::mt19937_64& rng, const UnityContext& ctx);

/// Parameters on the 3Φ2 restriction z^N (1-x1^N)(1-x2^N) = (1-y1^N)(1-y2^N).
struct Phi32Params {
  Complex x1, x2, y1, y2, z;
};

/// Generic draw: x1, x2, y1, y2 from the annulus, z on a random branch.
/// With z_is_omega the argument is fixed to ω and y2 is solved instead.
/// Denominator clearances of every series involved are kept above 1e-3.
Phi32Params sample_phi32_params(std::mt19937_64& rng, const UnityContext& ctx, bool z_is_omega = false);

/// (x; q)_∞ truncated once |q^j| < 1e-18.
Complex q_pochhammer_infinite(Complex x, Complex q);

}  // namespace cpotts
