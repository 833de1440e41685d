#pragma once

// Reference implementations that share no code with the library. They favour
// the most literal formula over speed or accuracy.

#include <cmath>
#include <complex>
#include <vector>

#include "cpotts/rapidity.hpp"

namespace oracle {

using C = std::complex<double>;

inline C root_of_unity(int N, long long j) {
  const double t = 2.0 * M_PI * static_cast<double>(((j % N) + N) % N) / N;
  return {std::cos(t), std::sin(t)};
}

inline C cpow_int(C z, int n) {
  C r = 1.0;
  for (int i = 0; i < std::abs(n); ++i) r *= z;
  return n < 0 ? 1.0 / r : r;
}

// Principal n-th root through polar form.
inline C principal_root(C v, int n) {
  return std::polar(std::pow(std::abs(v), 1.0 / n), std::arg(v) / n);
}

inline C pochhammer(C x, C q, int n) {
  C r = 1.0;
  for (int j = 0; j < n; ++j) r *= 1.0 - x * std::pow(q, j);
  return r;
}

inline C omega_pochhammer(C x, int n, int N) {
  C r = 1.0;
  for (int l = 0; l < n; ++l) r *= 1.0 - x * root_of_unity(N, l);
  return r;
}

// Gaussian binomial from the second q-Pascal rule
// [a n] = q^{a-n} [a-1 n-1] + [a-1 n], which the library does not use.
inline C gaussian_binomial(int a, int n, C q) {
  std::vector<std::vector<C>> t(a + 1, std::vector<C>(a + 1, 0.0));
  for (int i = 0; i <= a; ++i) {
    t[i][0] = 1.0;
    for (int m = 1; m <= i; ++m) t[i][m] = std::pow(q, i - m) * t[i - 1][m - 1] + (m <= i - 1 ? t[i - 1][m] : C(0.0));
  }
  return t[a][n];
}

// Γ(z) ≈ s^z e^{-s} Σ_k s^k / (z)_{k+1}: the lower incomplete gamma series,
// whose upper remainder is below e^{-s} s^{Re z}.
inline C gamma_series(C z, double s = 60.0, int terms = 800) {
  C sum = 0.0;
  C term = 1.0 / z;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= s / (z + static_cast<double>(k + 1));
  }
  return std::exp(z * std::log(s) - s) * sum;
}

inline C weight_w(const cpotts::Rapidity& p, const cpotts::Rapidity& q, int n, int N) {
  n = ((n % N) + N) % N;
  C r = 1.0;
  for (int j = 1; j <= n; ++j) {
    const C w = root_of_unity(N, j);
    r *= (p.mu / q.mu) * (q.y - p.x * w) / (p.y - q.x * w);
  }
  return r;
}

inline C weight_wbar(const cpotts::Rapidity& p, const cpotts::Rapidity& q, int n, int N) {
  n = ((n % N) + N) % N;
  C r = 1.0;
  const C omega = root_of_unity(N, 1);
  for (int j = 1; j <= n; ++j) {
    const C w = root_of_unity(N, j);
    r *= (p.mu * q.mu) * (omega * p.x - q.x * w) / (q.y - p.y * w);
  }
  return r;
}

// Σ_{l=0}^{N-1} ∏(α_i;ω)_l / ∏(β_i;ω)_l z^l, each term from scratch.
inline C terminating_phi(const std::vector<C>& a, const std::vector<C>& b, C z, int N) {
  C sum = 0.0;
  for (int l = 0; l < N; ++l) {
    C t = cpow_int(z, l);
    for (C ai : a) t *= omega_pochhammer(ai, l, N);
    for (C bi : b) t /= omega_pochhammer(bi, l, N);
    sum += t;
  }
  return sum;
}

inline double rel(C a, C b) {
  const double d = std::max(std::abs(a), std::abs(b));
  return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

}  // namespace oracle
