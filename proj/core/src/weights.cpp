#include "cpotts/weights.hpp"

#include <string>

#include "cpotts/errors.hpp"

namespace cpotts {

const char* to_string(WeightKind kind) noexcept { return kind == WeightKind::W ? "W" : "Wbar"; }

namespace {

Complex weight_factor(WeightKind kind, const Rapidity& p, const Rapidity& q, int j, const UnityContext& ctx) {
  const Complex wj = ctx.power(j);
  Complex scale;
  Complex num;
  Complex den;
  if (kind == WeightKind::W) {
    scale = p.mu / q.mu;
    num = q.y - p.x * wj;
    den = p.y - q.x * wj;
  } else {
    scale = p.mu * q.mu;
    num = ctx.omega() * p.x - q.x * wj;
    den = q.y - p.y * wj;
  }
  if (std::abs(den) < kPoleGuard) {
    throw DomainError(std::string("weight ") + to_string(kind) + ": pole factor at j=" + std::to_string(j));
  }
  return scale * num / den;
}

}  // namespace

Complex weight_product(WeightKind kind, const Rapidity& p, const Rapidity& q, int n,
                       const UnityContext& ctx) {
  Complex prod(1.0, 0.0);
  for (int j = 1; j <= n; ++j) prod *= weight_factor(kind, p, q, j, ctx);
  return prod;
}

Complex weight_w(const Rapidity& p, const Rapidity& q, std::int64_t n, const UnityContext& ctx) {
  return weight_product(WeightKind::W, p, q, static_cast<int>(ctx.reduce(n)), ctx);
}

Complex weight_wbar(const Rapidity& p, const Rapidity& q, std::int64_t n, const UnityContext& ctx) {
  return weight_product(WeightKind::Wbar, p, q, static_cast<int>(ctx.reduce(n)), ctx);
}

WeightParams weight_params(const Rapidity& p, const Rapidity& q, const UnityContext& ctx) {
  if (std::abs(p.y) < kPoleGuard || std::abs(q.y) < kPoleGuard || std::abs(p.x) < kPoleGuard) {
    throw DomainError("weight_params: zero coordinate");
  }
  const Complex w = ctx.omega();
  WeightParams out;
  out.gamma = p.mu * q.y / (q.mu * p.y);
  out.alpha = w * p.x / q.y;
  out.beta = w * q.x / p.y;
  out.gamma_bar = w * p.mu * q.mu * p.x / q.y;
  out.alpha_bar = q.x / p.x;
  out.beta_bar = w * p.y / q.y;
  return out;
}

WeightTable::WeightTable(const Rapidity& p, const Rapidity& q, WeightKind kind, const UnityContext& ctx)
    : kind_(kind), p_(p), q_(q) {
  const int N = ctx.order();
  values_.resize(static_cast<std::size_t>(N));
  // Same multiplication order as weight_product, so entries match it bit for bit.
  Complex prod(1.0, 0.0);
  values_[0] = prod;
  for (int n = 1; n < N; ++n) {
    prod *= weight_factor(kind, p, q, n, ctx);
    values_[static_cast<std::size_t>(n)] = prod;
  }
}

Complex fourier_weight(const Rapidity& p, const Rapidity& q, std::int64_t k, const UnityContext& ctx) {
  const WeightTable table(p, q, WeightKind::W, ctx);
  Complex sum(0.0, 0.0);
  for (int n = 0; n < ctx.order(); ++n) sum += ctx.power(static_cast<std::int64_t>(n) * k) * table(n);
  return sum;
}

}  // namespace cpotts
