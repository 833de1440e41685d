#include "cpotts/bilateral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpotts/errors.hpp"

namespace cpotts {

namespace {

Complex sin_pi(Complex z) { return std::sin(kPi * z); }

// Distance from z to the nearest integer, and that integer.
double integer_distance(Complex z, double* nearest = nullptr) {
  const double m = std::nearbyint(z.real());
  if (nearest) *nearest = m;
  return std::abs(z - m);
}

Complex sum3(const std::array<Complex, 3>& v) { return v[0] + v[1] + v[2]; }

Complex sine_product(const std::array<Complex, 3>& v) { return sin_pi(v[0]) * sin_pi(v[1]) * sin_pi(v[2]); }

// Tail Σ_{n>M} C/n² to third order in 1/M.
double tail_weight(int M) {
  const double m = M;
  return 1.0 / m - 0.5 / (m * m) + 1.0 / (6.0 * m * m * m);
}

}  // namespace

double BilateralSpec::balance_residual() const { return std::abs(sum3(x) + 2.0 - sum3(y)); }

double BilateralSpec::sine_residual() const { return relative_gap(sine_product(x), sine_product(y)); }

bool BilateralSpec::degenerate() const {
  for (const Complex& yi : y)
    for (const Complex& xj : x) {
      double m = 0.0;
      if (integer_distance(yi - xj, &m) < 1e-8 && m <= 0.0) return true;
    }
  return false;
}

BilateralSpec BilateralSpec::reflected() const {
  BilateralSpec out;
  for (int j = 0; j < 3; ++j) {
    out.x[j] = 1.0 - y[j];
    out.y[j] = 1.0 - x[j];
  }
  return out;
}

BilateralSpec BilateralSpec::translated(int j, int m) const {
  BilateralSpec out = *this;
  out.x[j] += static_cast<double>(m);
  out.y[j] += static_cast<double>(m);
  return out;
}

BilateralSpec BilateralSpec::shifted(int m) const {
  BilateralSpec out = *this;
  for (int j = 0; j < 3; ++j) out = out.translated(j, m);
  return out;
}

Complex bilateral_lhs(const BilateralSpec& spec, int cutoff) {
  if (cutoff < 1) throw InputError("bilateral_lhs: cutoff must be >= 1");
  Complex log_t0(0.0, 0.0);
  for (int i = 0; i < 3; ++i) log_t0 += log_gamma(spec.x[i]) - log_gamma(spec.y[i]);
  const Complex t0 = std::exp(log_t0);

  // t_{n+1} / t_n = ∏(x_i + n) / ∏(y_i + n).
  Complex forward_sum(0.0, 0.0);
  Complex t = t0;
  for (int n = 0; n < cutoff; ++n) {
    t *= (spec.x[0] + double(n)) * (spec.x[1] + double(n)) * (spec.x[2] + double(n)) /
         ((spec.y[0] + double(n)) * (spec.y[1] + double(n)) * (spec.y[2] + double(n)));
    forward_sum += t;
  }
  const Complex t_plus = t;

  Complex backward_sum(0.0, 0.0);
  t = t0;
  for (int n = 0; n > -cutoff; --n) {
    const double k = n - 1;
    const Complex den = (spec.x[0] + k) * (spec.x[1] + k) * (spec.x[2] + k);
    if (std::abs(den) < kPoleGuard) throw DomainError("bilateral_lhs: Γ pole in a numerator at n=" + std::to_string(n - 1));
    t *= (spec.y[0] + k) * (spec.y[1] + k) * (spec.y[2] + k) / den;
    backward_sum += t;
  }
  const Complex t_minus = t;

  const double M2 = static_cast<double>(cutoff) * cutoff;
  const double w = tail_weight(cutoff);
  return t0 + forward_sum + backward_sum + (t_plus + t_minus) * M2 * w;
}

Complex bilateral_g(const BilateralSpec& spec) {
  Complex log_g(0.0, 0.0);
  for (int j = 1; j < 3; ++j) log_g += log_gamma(spec.x[j]) + log_gamma(1.0 - spec.x[j]);
  for (int i = 0; i < 3; ++i) log_g += log_gamma(spec.y[i] - spec.x[0]) + log_gamma(1.0 - spec.y[i] + spec.x[0]);
  return std::exp(log_g);
}

Complex bilateral_rhs(const BilateralSpec& spec) {
  Complex log_den(0.0, 0.0);
  for (const Complex& yi : spec.y)
    for (const Complex& xj : spec.x) log_den += log_gamma(yi - xj);
  return bilateral_g(spec) / std::exp(log_den);
}

namespace {

void add_spec(IdentityResult& result, const BilateralSpec& spec) {
  for (int i = 0; i < 3; ++i) result.add("x" + std::to_string(i + 1), spec.x[i]);
  for (int i = 0; i < 3; ++i) result.add("y" + std::to_string(i + 1), spec.y[i]);
}

}  // namespace

IdentityResult bilateral_gamma_sum(const BilateralSpec& spec, int cutoff, double tol) {
  IdentityResult result("bilateral-gamma", tol);
  result.add("property", std::string("sum"));
  add_spec(result, spec);
  result.add("cutoff", std::int64_t{cutoff});
  if (spec.degenerate()) return result.skip("some y_i - x_j is a nonpositive integer; RHS has a Γ pole");
  const Complex lhs = bilateral_lhs(spec, cutoff);
  const Complex rhs = bilateral_rhs(spec);
  result.constant = lhs;
  result.add("rhs", rhs)
      .add("balance_residual", spec.balance_residual())
      .add("sine_residual", spec.sine_residual());
  return result.finish(relative_gap(lhs, rhs));
}

IdentityResult check_bilateral_symmetries(const BilateralSpec& spec, int cutoff, double tol) {
  IdentityResult result("bilateral-gamma", tol);
  result.add("property", std::string("symmetries"));
  add_spec(result, spec);
  result.add("cutoff", std::int64_t{cutoff});
  if (spec.degenerate()) return result.skip("some y_i - x_j is a nonpositive integer; RHS has a Γ pole");

  const Complex g = bilateral_g(spec);
  const Complex lhs = bilateral_lhs(spec, cutoff);

  double permutation = 0.0;
  BilateralSpec perm = spec;
  std::array<int, 3> order = {0, 1, 2};
  while (std::next_permutation(order.begin(), order.end())) {
    for (int j = 0; j < 3; ++j) perm.x[j] = spec.x[order[j]];
    permutation = std::max({permutation, relative_gap(bilateral_g(perm), g),
                            relative_gap(bilateral_lhs(perm, cutoff), lhs)});
  }
  // Permuting the y's alone moves nothing in the sum; check G only.
  std::reverse(perm.y.begin(), perm.y.end());
  perm.x = spec.x;
  permutation = std::max(permutation, relative_gap(bilateral_g(perm), g));

  const double reflection = relative_gap(bilateral_g(spec.reflected()), g);

  double translation = 0.0;
  for (int j = 0; j < 3; ++j) {
    translation = std::max({translation, relative_gap(bilateral_g(spec.translated(j, 1)), g),
                            relative_gap(bilateral_g(spec.translated(j, -1)), g)});
  }
  const double shift = relative_gap(bilateral_lhs(spec.shifted(1), cutoff), lhs);

  result.add("permutation_residual", permutation)
      .add("reflection_residual", reflection)
      .add("translation_residual", translation)
      .add("shift_residual", shift);
  return result.finish(std::max({permutation, reflection, translation, shift}));
}

BilateralSolver::BilateralSolver(std::uint64_t seed) : rng_(seed) {}

BilateralSpec BilateralSolver::next() {
  std::uniform_real_distribution<double> re(-0.9, 0.9);
  std::uniform_real_distribution<double> im(-0.5, 0.5);
  auto draw = [&] { return Complex(re(rng_), im(rng_)); };

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    BilateralSpec spec;
    for (Complex& xi : spec.x) xi = draw();
    spec.y[0] = draw() + 1.0;
    Complex y2 = draw() + 1.0;
    const Complex s = sum3(spec.x) + 2.0;
    const Complex target = sine_product(spec.x);
    const Complex s1 = sin_pi(spec.y[0]);

    bool converged = false;
    for (int it = 0; it < kMaxNewton; ++it) {
      const Complex y3 = s - spec.y[0] - y2;
      const Complex value = s1 * sin_pi(y2) * sin_pi(y3);
      const Complex f = value - target;
      const double scale = std::max(std::abs(value), std::abs(target));
      if (scale > 0.0 && std::abs(f) <= 1e-13 * scale) {
        converged = true;
        break;
      }
      const Complex df = kPi * s1 * sin_pi(s - spec.y[0] - 2.0 * y2);
      if (std::abs(df) < 1e-14) break;
      y2 -= f / df;
      if (!std::isfinite(y2.real()) || !std::isfinite(y2.imag()) || std::abs(y2) > 50.0) break;
    }
    if (!converged) continue;
    spec.y[1] = y2;
    spec.y[2] = s - spec.y[0] - y2;
    if (spec.sine_residual() > 1e-12) continue;

    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      ok = integer_distance(spec.x[i]) >= kIntegerGuard && integer_distance(spec.y[i]) >= kIntegerGuard;
      for (int j = 0; j < 3 && ok; ++j) ok = integer_distance(spec.y[i] - spec.x[j]) >= kIntegerGuard;
    }
    if (ok) return spec;
  }
  throw SamplerError("BilateralSolver: no admissible spec after " + std::to_string(kMaxAttempts) + " attempts");
}

BilateralSpec solve_bilateral_params(std::uint64_t seed) { return BilateralSolver(seed).next(); }

}  // namespace cpotts
