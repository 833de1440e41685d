#include "doctest.h"

#include <cmath>

#include "cpotts/errors.hpp"
#include "cpotts/weights.hpp"
#include "oracles.hpp"

using cpotts::Complex;
using cpotts::UnityContext;
using cpotts::WeightKind;

namespace {

std::vector<cpotts::Rapidity> pair(int N, std::uint64_t seed) {
  static const auto mod = cpotts::modulus_from_k(0.6);
  const UnityContext ctx(N);
  cpotts::RapiditySampler s(seed, mod, ctx);
  return s.next_family(2);
}

}  // namespace

TEST_CASE("weights against the brute-force product") {
  const UnityContext c3(3), c4(4);
  const auto f3 = pair(3, 11);
  const auto& p = f3[0];
  const auto& q = f3[1];
  CHECK(cpotts::weight_w(p, q, 0, c3) == Complex(1.0));
  CHECK(oracle::rel(cpotts::weight_w(p, q, 2, c3), oracle::weight_w(p, q, 2, 3)) < 1e-14);
  CHECK(oracle::rel(cpotts::weight_w(p, q, -1, c3), oracle::weight_w(p, q, 2, 3)) < 1e-14);
  CHECK(oracle::rel(cpotts::weight_w(p, q, 5, 3, c3), oracle::weight_w(p, q, 2, 3)) < 1e-14);

  const auto f4 = pair(4, 12);
  CHECK(cpotts::weight_wbar(f4[0], f4[1], 0, c4) == Complex(1.0));
  CHECK(oracle::rel(cpotts::weight_wbar(f4[0], f4[1], 3, c4), oracle::weight_wbar(f4[0], f4[1], 3, 4)) < 1e-14);
}

TEST_CASE("weights at equal rapidities") {
  for (int N = 2; N <= 8; ++N) {
    const UnityContext ctx(N);
    const auto p = pair(N, 100 + N)[0];
    for (int n = 0; n < N; ++n) {
      CHECK(std::abs(cpotts::weight_w(p, p, n, ctx) - 1.0) < 1e-14);
      CHECK(std::abs(cpotts::weight_wbar(p, p, n, ctx) - (n == 0 ? 1.0 : 0.0)) < 1e-14);
    }
    const cpotts::WeightTable w(p, p, WeightKind::W, ctx);
    const cpotts::WeightTable wb(p, p, WeightKind::Wbar, ctx);
    for (int n = 0; n < N; ++n) {
      CHECK(std::abs(w(n) - 1.0) < 1e-14);
      CHECK(std::abs(wb(n) - (n == 0 ? 1.0 : 0.0)) < 1e-14);
    }
  }
}

TEST_CASE("weights are periodic on the curve") {
  for (int N = 2; N <= 8; ++N) {
    const UnityContext ctx(N);
    for (int t = 0; t < 20; ++t) {
      const auto f = pair(N, 1000 * N + t);
      CHECK(std::abs(cpotts::weight_product(WeightKind::W, f[0], f[1], N, ctx) - 1.0) < 1e-9);
      CHECK(std::abs(cpotts::weight_product(WeightKind::Wbar, f[0], f[1], N, ctx) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("pochhammer parameterization reproduces the product form") {
  for (int N = 2; N <= 8; ++N) {
    const UnityContext ctx(N);
    for (int t = 0; t < 100; ++t) {
      const auto f = pair(N, 7000 * N + t);
      const auto wp = cpotts::weight_params(f[0], f[1], ctx);
      for (int n = 0; n < N; ++n) {
        const Complex w = cpotts::int_pow(wp.gamma, n) * oracle::omega_pochhammer(wp.alpha, n, N) /
                          oracle::omega_pochhammer(wp.beta, n, N);
        const Complex wb = cpotts::int_pow(wp.gamma_bar, n) * oracle::omega_pochhammer(wp.alpha_bar, n, N) /
                           oracle::omega_pochhammer(wp.beta_bar, n, N);
        REQUIRE(oracle::rel(w, oracle::weight_w(f[0], f[1], n, N)) < 1e-10);
        REQUIRE(oracle::rel(wb, oracle::weight_wbar(f[0], f[1], n, N)) < 1e-10);
      }
      const Complex gN = cpotts::int_pow(wp.gamma, N);
      CHECK(oracle::rel(gN * (1.0 - cpotts::int_pow(wp.alpha, N)), 1.0 - cpotts::int_pow(wp.beta, N)) < 1e-10);
      const Complex gbN = cpotts::int_pow(wp.gamma_bar, N);
      CHECK(oracle::rel(gbN * (1.0 - cpotts::int_pow(wp.alpha_bar, N)), 1.0 - cpotts::int_pow(wp.beta_bar, N)) <
            1e-10);
    }
  }
}

TEST_CASE("weight params special cases") {
  const UnityContext ctx(5);
  const auto f = pair(5, 3);
  const auto same = cpotts::weight_params(f[0], f[0], ctx);
  CHECK(std::abs(same.gamma - 1.0) < 1e-15);
  CHECK(std::abs(same.alpha - same.beta) < 1e-15);
  CHECK(oracle::rel(same.alpha, ctx.omega() * f[0].x / f[0].y) < 1e-15);

  const auto wp = cpotts::weight_params(f[0], f[1], ctx);
  CHECK(oracle::rel(wp.gamma * (1.0 - wp.alpha) / (1.0 - wp.beta), cpotts::weight_w(f[0], f[1], 1, ctx)) < 1e-13);

  cpotts::Rapidity zero = f[0];
  zero.y = 0.0;
  CHECK_THROWS_AS(cpotts::weight_params(zero, f[1], ctx), cpotts::DomainError);
}

TEST_CASE("weight table equals pointwise calls exactly") {
  const UnityContext ctx(6);
  const auto f = pair(6, 99);
  for (WeightKind kind : {WeightKind::W, WeightKind::Wbar}) {
    const auto table = cpotts::weight_table(f[0], f[1], kind, ctx);
    CHECK(table.values()[0] == Complex(1.0));
    CHECK(table.order() == 6);
    for (int n = -7; n < 13; ++n) {
      const Complex direct =
          kind == WeightKind::W ? cpotts::weight_w(f[0], f[1], n, ctx) : cpotts::weight_wbar(f[0], f[1], n, ctx);
      CHECK(table(n) == direct);
    }
  }
  CHECK(std::string(cpotts::to_string(WeightKind::Wbar)) == "Wbar");
}

TEST_CASE("fourier weight") {
  const UnityContext ctx(4);
  const auto f = pair(4, 5);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(cpotts::fourier_weight(f[0], f[0], k, ctx) - (k == 0 ? 4.0 : 0.0)) < 1e-13);
  }
  Complex plain = 0.0;
  for (int n = 0; n < 4; ++n) plain += oracle::weight_w(f[0], f[1], n, 4);
  CHECK(oracle::rel(cpotts::fourier_weight(f[0], f[1], 0, ctx), plain) < 1e-14);
  Complex dft = 0.0;
  for (int n = 0; n < 4; ++n) dft += oracle::root_of_unity(4, 3 * n) * oracle::weight_w(f[0], f[1], n, 4);
  CHECK(oracle::rel(cpotts::fourier_weight(f[0], f[1], 3, ctx), dft) < 1e-14);
}
