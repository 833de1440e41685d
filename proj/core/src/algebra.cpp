#include "cpotts/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cpotts/errors.hpp"

namespace cpotts {

UnityContext::UnityContext(int order) : order_(order) {
  if (order < 1) {
    throw InputError("UnityContext: order must be >= 1, got " + std::to_string(order));
  }
  powers_.reserve(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j) {
    powers_.push_back(std::polar(1.0, 2.0 * kPi * j / order));
  }
  powers_[0] = Complex(1.0, 0.0);
}

Complex omega_pochhammer(Complex x, int n, const UnityContext& ctx) {
  Complex prod(1.0, 0.0);
  for (int l = 0; l < n; ++l) {
    prod *= Complex(1.0, 0.0) - x * ctx.power(l);
  }
  return prod;
}

Complex omega_pochhammer_signed(Complex x, int n, const UnityContext& ctx) {
  if (n >= 0) return omega_pochhammer(x, n, ctx);
  const Complex denom = omega_pochhammer(x * ctx.power(n), -n, ctx);
  if (std::abs(denom) < kPoleGuard) {
    throw DomainError("omega_pochhammer_signed: negative-length symbol hits a pole");
  }
  return 1.0 / denom;
}

Complex q_pochhammer(Complex x, Complex q, int n) {
  Complex prod(1.0, 0.0);
  Complex qj(1.0, 0.0);
  for (int j = 0; j < n; ++j) {
    prod *= Complex(1.0, 0.0) - x * qj;
    qj *= q;
  }
  return prod;
}

namespace {

// Row-by-row q-Pascal: [a n] = [a-1 n-1] + q^n [a-1 n].
Complex q_binomial_recurrence(int alpha, int n, Complex q) {
  std::vector<Complex> row(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
  row[0] = 1.0;
  for (int a = 1; a <= alpha; ++a) {
    for (int m = std::min(a, n); m >= 1; --m) {
      row[m] = row[m - 1] + int_pow(q, m) * row[m];
    }
  }
  return row[n];
}

}  // namespace

Complex q_binomial(int alpha, int n, Complex q) {
  if (alpha < 0 || n < 0 || n > alpha) {
    throw InputError("q_binomial: need 0 <= n <= alpha, got alpha=" + std::to_string(alpha) +
                     " n=" + std::to_string(n));
  }
  const Complex denom = q_pochhammer(q, q, n) * q_pochhammer(q, q, alpha - n);
  if (std::abs(denom) < kPoleGuard) return q_binomial_recurrence(alpha, n, q);
  return q_pochhammer(q, q, alpha) / denom;
}

Complex p_product(Complex x, const UnityContext& ctx) {
  const int N = ctx.order();
  Complex log_sum(0.0, 0.0);
  for (int j = 1; j < N; ++j) {
    const Complex factor = Complex(1.0, 0.0) - ctx.power(j) * x;
    if (std::abs(factor) < kPoleGuard) {
      throw DomainError("p_product: factor 1 - w^" + std::to_string(j) + " x vanishes");
    }
    log_sum += (static_cast<double>(j) / N) * std::log(factor);
  }
  return std::exp(log_sum);
}

Complex delta_root(Complex x, const UnityContext& ctx) {
  const Complex base = Complex(1.0, 0.0) - int_pow(x, ctx.order());
  if (std::abs(base) < kPoleGuard) throw DomainError("delta_root: 1 - x^N vanishes");
  return std::exp(std::log(base) / static_cast<double>(ctx.order()));
}

Complex phi_zero(const UnityContext& ctx) {
  const double N = ctx.order();
  return std::polar(1.0, kPi * (N - 1.0) * (N - 2.0) / (12.0 * N));
}

namespace {

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.14472988584940017414342735135305;

// Stirling series; caller guarantees |w| >= 15 and Re w > 0.
Complex stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex power = inv;
  for (double c : kStirlingCoeffs) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kHalfLogTwoPi + series;
}

Complex log_gamma_right(Complex z) {
  // Shift right until Stirling is accurate; each log(z+k) is principal, which
  // keeps the sum on the branch that is continuous across Re z > 0.
  Complex shift_logs(0.0, 0.0);
  Complex w = z;
  while (w.real() < 15.0 && std::abs(w) < 15.0) {
    shift_logs += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift_logs;
}

// Continuous branch of log sin(πz) in each open half-plane, pinned so that
// log sin(π/2) = 0. Period-2 reduction of Re z keeps sin accurate for large |Re z|.
Complex log_sin_pi(Complex z) {
  const double x = z.real();
  const double reduced = x - 2.0 * std::nearbyint(0.5 * x);
  Complex value = std::log(std::sin(kPi * Complex(reduced, z.imag())));
  const double target = std::signbit(z.imag()) ? kPi * x - 0.5 * kPi : 0.5 * kPi - kPi * x;
  const double turns = std::nearbyint((target - value.imag()) / (2.0 * kPi));
  value.imag(value.imag() + 2.0 * kPi * turns);
  return value;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (z.real() <= 0.5 && std::abs(z.imag()) < kPoleGuard) {
    const double nearest = std::nearbyint(z.real());
    if (nearest <= 0.0 && std::abs(z.real() - nearest) < kPoleGuard) {
      throw DomainError("log_gamma: pole at nonpositive integer " + std::to_string(nearest));
    }
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  return kLogPi - log_sin_pi(z) - log_gamma_right(Complex(1.0, 0.0) - z);
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex int_pow(Complex z, int n) {
  if (n < 0) return 1.0 / int_pow(z, -n);
  Complex result(1.0, 0.0);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

double relative_gap(Complex a, Complex b, double scale) {
  const double denom = std::max({std::abs(a), std::abs(b), scale});
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

}  // namespace cpotts
