#include "cpotts/rapidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cpotts/errors.hpp"

namespace cpotts {

namespace {

Complex principal_root(Complex v, int n) {
  if (v == Complex(0.0, 0.0)) return v;
  return std::exp(std::log(v) / static_cast<double>(n));
}

double normalized(Complex residual, std::initializer_list<double> magnitudes) {
  const double scale = std::max(magnitudes);
  if (scale == 0.0) return std::abs(residual);
  return std::abs(residual) / scale;
}

}  // namespace

double CurveResiduals::max() const noexcept { return std::max({curve, mu_from_x, mu_from_y}); }

Modulus modulus_from_k(Complex k) { return {k, std::sqrt(Complex(1.0, 0.0) - k * k)}; }

Rapidity rapidity_from_x(Complex x, int branch_y, int branch_mu, const Modulus& modulus,
                         const UnityContext& ctx) {
  const int N = ctx.order();
  const Complex xn = int_pow(x, N);
  const Complex denom = Complex(1.0, 0.0) - modulus.k * xn;
  if (std::abs(denom) < 1e-10) throw DomainError("rapidity_from_x: 1 - k x^N vanishes");
  const Complex y = ctx.power(branch_y) * principal_root((modulus.k - xn) / denom, N);
  const Complex mu = ctx.power(branch_mu) * principal_root(modulus.k_prime / denom, N);
  return {x, y, mu};
}

CurveResiduals validate_rapidity(const Rapidity& r, const Modulus& modulus, const UnityContext& ctx) {
  const int N = ctx.order();
  const Complex xn = int_pow(r.x, N);
  const Complex yn = int_pow(r.y, N);
  const Complex mun = int_pow(r.mu, N);
  const Complex k = modulus.k;
  const Complex kp = modulus.k_prime;

  CurveResiduals out;
  out.curve = normalized(xn + yn - k * (1.0 + xn * yn),
                         {std::abs(xn), std::abs(yn), std::abs(k), std::abs(k * xn * yn)});
  out.mu_from_x = normalized(mun * (1.0 - k * xn) - kp,
                             {std::abs(mun), std::abs(mun * k * xn), std::abs(kp)});
  out.mu_from_y = normalized(mun * kp - (1.0 - k * yn),
                             {std::abs(mun * kp), 1.0, std::abs(k * yn)});
  return out;
}

double pair_conditioning(const Rapidity& p, const Rapidity& q, const UnityContext& ctx) {
  double worst = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= ctx.order(); ++j) {
    worst = std::min(worst, std::abs(p.y - q.x * ctx.power(j)));
    worst = std::min(worst, std::abs(q.y - p.y * ctx.power(j)));
  }
  return worst;
}

RapiditySampler::RapiditySampler(std::uint64_t seed, Modulus modulus, const UnityContext& ctx)
    : rng_(seed), modulus_(modulus), ctx_(&ctx) {
  const double k = std::abs(modulus.k);
  if (k < kModulusGuard || std::abs(k - 1.0) < kModulusGuard) {
    throw InputError("RapiditySampler: |k| within 1e-6 of 0 or 1");
  }
}

Rapidity RapiditySampler::next() {
  const int N = ctx_->order();
  std::uniform_real_distribution<double> radius2(kMinRadius * kMinRadius, kMaxRadius * kMaxRadius);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> branch(0, N - 1);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    // Area-uniform over the annulus.
    const Complex x = std::polar(std::sqrt(radius2(rng_)), phase(rng_));
    const int by = branch(rng_);
    const int bm = branch(rng_);
    if (std::abs(1.0 - modulus_.k * int_pow(x, N)) < kCurveGuard) continue;
    const Rapidity r = rapidity_from_x(x, by, bm, modulus_, *ctx_);
    // W_pp has denominators y - x ω^j; keep them away from zero as well.
    double self = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= N; ++j) self = std::min(self, std::abs(r.y - r.x * ctx_->power(j)));
    if (self < kPairGuard) continue;
    return r;
  }
  throw SamplerError("RapiditySampler: no acceptable point after 10000 draws; modulus badly conditioned");
}

std::vector<Rapidity> RapiditySampler::next_family(int count) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<Rapidity> family;
    family.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) family.push_back(next());
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      for (int j = 0; j < count && ok; ++j) {
        if (i != j && pair_conditioning(family[i], family[j], *ctx_) < kPairGuard) ok = false;
      }
    }
    if (ok) return family;
  }
  throw SamplerError("RapiditySampler: no well-conditioned family after 10000 draws");
}

}  // namespace cpotts
