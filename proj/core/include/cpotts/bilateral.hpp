#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "cpotts/algebra.hpp"
#include "cpotts/identity_result.hpp"

namespace cpotts {

/// Parameters of the bilateral gamma sum
///   Σ_n ∏Γ(x_i+n)/∏Γ(y_i+n) = G(x|y) / ∏_{i,j} Γ(y_i - x_j)
/// subject to Σx + 2 = Σy and ∏ sin πx_i = ∏ sin πy_i.
struct BilateralSpec {
  std::array<Complex, 3> x;
  std::array<Complex, 3> y;

  /// |Σx + 2 - Σy|.
  double balance_residual() const;
  /// |∏ sin πx - ∏ sin πy| relative to the larger product.
  double sine_residual() const;
  /// Some y_i - x_j within 1e-8 of a nonpositive integer (the right-hand
  /// side then has a Γ pole in its denominator).
  bool degenerate() const;

  /// x_j ↦ 1 - y_j, y_j ↦ 1 - x_j.
  BilateralSpec reflected() const;
  /// (x_j, y_j) ↦ (x_j + m, y_j + m) for one pair j.
  BilateralSpec translated(int j, int m) const;
  /// Every pair shifted by m.
  BilateralSpec shifted(int m) const;
};

/// Symmetric partial sum over |n| <= cutoff plus a separate C/n² tail on
/// each side, C fitted from the outermost term.
Complex bilateral_lhs(const BilateralSpec& spec, int cutoff);

/// G(x|y) = ∏_{j=2,3} Γ(x_j)Γ(1-x_j) ∏_i Γ(y_i-x_1)Γ(1-y_i+x_1).
Complex bilateral_g(const BilateralSpec& spec);

/// G / ∏_{i,j} Γ(y_i - x_j). Throws DomainError at a Γ pole.
Complex bilateral_rhs(const BilateralSpec& spec);

/// LHS against RHS. Degenerate specs are returned unasserted.
IdentityResult bilateral_gamma_sum(const BilateralSpec& spec, int cutoff = 100000, double tol = 1e-5);

/// Permutations (G and LHS), reflection (G), translation of each single
/// pair (G) and of all pairs at once (LHS). The LHS is not invariant under
/// a single-pair translation, so that case is checked on G only.
IdentityResult check_bilateral_symmetries(const BilateralSpec& spec, int cutoff = 100000, double tol = 1e-9);

/// Draws x_i and y_1, y_2, fixes y_3 by the balance condition and solves the
/// sine condition for y_2 by Newton's method to 1e-12. Rejects specs with any
/// x_i, y_i or y_i - x_j within 0.05 of an integer.
class BilateralSolver {
 public:
  static constexpr double kIntegerGuard = 0.05;
  static constexpr int kMaxAttempts = 10000;
  static constexpr int kMaxNewton = 60;

  explicit BilateralSolver(std::uint64_t seed);

  BilateralSpec next();

 private:
  std::mt19937_64 rng_;
};

/// One spec from a fresh solver seeded with `seed`.
BilateralSpec solve_bilateral_params(std::uint64_t seed);

}  // namespace cpotts
