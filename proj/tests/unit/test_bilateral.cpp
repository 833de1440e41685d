#include "doctest.h"

#include <cmath>

#include "cpotts/bilateral.hpp"
#include "cpotts/errors.hpp"
#include "oracles.hpp"

using cpotts::BilateralSpec;
using cpotts::Complex;

namespace {

Complex sin_pi(Complex z) { return std::sin(cpotts::kPi * z); }

}  // namespace

TEST_CASE("solver output satisfies both conditions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BilateralSpec s = cpotts::solve_bilateral_params(seed);
    REQUIRE(s.balance_residual() < 1e-10);
    const Complex lhs = sin_pi(s.x[0]) * sin_pi(s.x[1]) * sin_pi(s.x[2]);
    const Complex rhs = sin_pi(s.y[0]) * sin_pi(s.y[1]) * sin_pi(s.y[2]);
    CHECK(oracle::rel(lhs, rhs) < 1e-9);
    CHECK_FALSE(s.degenerate());
    for (const Complex& yi : s.y)
      for (const Complex& xj : s.x) {
        const Complex d = yi - xj;
        CHECK(std::abs(d - std::nearbyint(d.real())) >= 0.05);
      }
  }
  const BilateralSpec a = cpotts::solve_bilateral_params(7);
  const BilateralSpec b = cpotts::solve_bilateral_params(7);
  for (int i = 0; i < 3; ++i) {
    CHECK(a.x[i] == b.x[i]);
    CHECK(a.y[i] == b.y[i]);
  }
}

TEST_CASE("bilateral sum against the gamma product") {
  const BilateralSpec s = cpotts::solve_bilateral_params(7);
  const auto res = cpotts::bilateral_gamma_sum(s);
  CHECK(res.name == "bilateral-gamma");
  CHECK(res.pass);
  CHECK(res.max_residual < 1e-5);

  // The gamma product from the independent series oracle.
  Complex g = 1.0;
  for (int j = 1; j < 3; ++j) g *= oracle::gamma_series(s.x[j]) * oracle::gamma_series(1.0 - s.x[j]);
  for (int i = 0; i < 3; ++i) g *= oracle::gamma_series(s.y[i] - s.x[0]) * oracle::gamma_series(1.0 - s.y[i] + s.x[0]);
  Complex den = 1.0;
  for (const Complex& yi : s.y)
    for (const Complex& xj : s.x) den *= oracle::gamma_series(yi - xj);
  CHECK(oracle::rel(cpotts::bilateral_g(s), g) < 1e-9);
  CHECK(oracle::rel(cpotts::bilateral_rhs(s), g / den) < 1e-9);

  // Plain partial sum without a tail converges to the same value at O(1/M).
  Complex plain = 0.0;
  for (int n = -2000; n <= 2000; ++n) {
    Complex lt = 0.0;
    for (int i = 0; i < 3; ++i) lt += cpotts::log_gamma(s.x[i] + double(n)) - cpotts::log_gamma(s.y[i] + double(n));
    plain += std::exp(lt);
  }
  CHECK(oracle::rel(plain, cpotts::bilateral_rhs(s)) < 1e-2);
}

TEST_CASE("bilateral symmetries") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BilateralSpec s = cpotts::solve_bilateral_params(seed);
    const auto res = cpotts::check_bilateral_symmetries(s, 20000);
    CHECK(res.pass);

    const BilateralSpec r = s.reflected();
    for (int j = 0; j < 3; ++j) {
      CHECK(r.x[j] == 1.0 - s.y[j]);
      CHECK(r.y[j] == 1.0 - s.x[j]);
    }
    CHECK(r.balance_residual() < 1e-12);

    // Translating (x3, y3) by one keeps the balance and the sine condition.
    const BilateralSpec t = s.translated(2, 1);
    CHECK(t.balance_residual() < 1e-12);
    CHECK(t.sine_residual() < 1e-9);
    CHECK(oracle::rel(cpotts::bilateral_g(t), cpotts::bilateral_g(s)) < 1e-9);
    // The sum itself moves with a single-pair translation; the identity must still hold.
    CHECK(cpotts::bilateral_gamma_sum(t, 20000).max_residual < 1e-5);
    CHECK(oracle::rel(cpotts::bilateral_lhs(s.shifted(1), 20000), cpotts::bilateral_lhs(s, 20000)) < 1e-9);
  }
}

TEST_CASE("degenerate specs are not asserted") {
  BilateralSpec s{{Complex(0.2, 0.1), Complex(0.3), Complex(-0.4, 0.2)}, {}};
  s.y = {s.x[0], Complex(0.7), Complex(0.0)};
  s.y[2] = s.x[0] + s.x[1] + s.x[2] + 2.0 - s.y[0] - s.y[1];
  CHECK(s.degenerate());
  const auto res = cpotts::bilateral_gamma_sum(s, 1000);
  CHECK_FALSE(res.asserted);
  CHECK_FALSE(res.failed());
  CHECK(std::isnan(res.max_residual));
  CHECK_THROWS_AS(cpotts::bilateral_lhs(s, 0), cpotts::InputError);
}
