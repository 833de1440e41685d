#include "cpotts/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpotts/errors.hpp"

namespace cpotts {

IdentityResult check_reflection(const Rapidity& p, const Rapidity& q, const UnityContext& ctx, double tol) {
  IdentityResult result("reflection", tol);
  result.add("N", std::int64_t{ctx.order()});
  const WeightTable w_pq(p, q, WeightKind::W, ctx);
  const WeightTable w_qp(q, p, WeightKind::W, ctx);
  const WeightTable w_pp(p, p, WeightKind::W, ctx);
  double residual = 0.0;
  for (int n = 0; n < ctx.order(); ++n) {
    residual = std::max(residual, std::abs(w_pq(n) * w_qp(n) - 1.0));
    residual = std::max(residual, std::abs(w_pp(n) - 1.0));
  }
  return result.finish(residual);
}

IdentityResult inversion_constant(const Rapidity& p, const Rapidity& q, const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  IdentityResult result("inversion", tol);
  result.add("N", std::int64_t{N});
  const WeightTable wbar_pq(p, q, WeightKind::Wbar, ctx);
  const WeightTable wbar_qp(q, p, WeightKind::Wbar, ctx);

  double max_diag = 0.0;
  double max_off = 0.0;
  Complex m00(0.0, 0.0);
  std::vector<Complex> diag;
  diag.reserve(static_cast<std::size_t>(N));
  for (int a = 0; a < N; ++a) {
    for (int c = 0; c < N; ++c) {
      Complex m(0.0, 0.0);
      for (int b = 0; b < N; ++b) m += wbar_pq(a - b) * wbar_qp(b - c);
      if (a == c) {
        diag.push_back(m);
        max_diag = std::max(max_diag, std::abs(m));
        if (a == 0) m00 = m;
      } else {
        max_off = std::max(max_off, std::abs(m));
      }
    }
  }
  if (max_diag == 0.0) throw DomainError("inversion_constant: diagonal vanishes");
  double spread = 0.0;
  for (const Complex& d : diag) spread = std::max(spread, std::abs(d - m00));
  result.constant = m00;
  return result.finish(std::max(max_off / max_diag, spread / std::abs(m00)));
}

IdentityResult check_fourier_phi21(const Rapidity& p, const Rapidity& q, const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  IdentityResult result("fourier-phi21", tol);
  result.add("N", std::int64_t{N});
  const WeightParams wp = weight_params(p, q, ctx);
  const WeightTable table(p, q, WeightKind::W, ctx);
  double residual = 0.0;
  for (int k = 0; k < N; ++k) {
    Complex dft(0.0, 0.0);
    for (int n = 0; n < N; ++n) dft += ctx.power(static_cast<std::int64_t>(n) * k) * table(n);
    const Complex series = phi21(wp.alpha, wp.beta, wp.gamma * ctx.power(k), ctx);
    residual = std::max(residual, relative_gap(dft, series));
  }
  return result.finish(residual);
}

StarTriangleTables::StarTriangleTables(const Rapidity& p, const Rapidity& q, const Rapidity& r,
                                       const UnityContext& ctx)
    : n_(ctx.order()),
      wbar_pr_(p, r, WeightKind::Wbar, ctx),
      w_pq_(p, q, WeightKind::W, ctx),
      wbar_rq_(r, q, WeightKind::Wbar, ctx),
      wbar_pq_(p, q, WeightKind::Wbar, ctx),
      w_pr_(p, r, WeightKind::W, ctx),
      w_rq_(r, q, WeightKind::W, ctx) {}

StarTriangleSides StarTriangleTables::sides(std::int64_t a, std::int64_t b, std::int64_t c) const {
  StarTriangleSides out;
  out.lhs = Complex(0.0, 0.0);
  for (std::int64_t d = 0; d < n_; ++d) {
    const Complex term = wbar_pr_(a - d) * w_pq_(d - c) * wbar_rq_(d - b);
    out.lhs += term;
    out.abs_sum += std::abs(term);
  }
  out.rhs = wbar_pq_(a - b) * w_pr_(b - c) * w_rq_(a - c);
  return out;
}

namespace {

double sides_residual(const StarTriangleSides& s, Complex R) {
  const Complex rhs = R * s.rhs;
  return relative_gap(s.lhs, rhs, s.abs_sum);
}

}  // namespace

double star_triangle_residual(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                              std::int64_t b, std::int64_t c, Complex R, const UnityContext& ctx) {
  const StarTriangleTables tables(p, q, r, ctx);
  return sides_residual(tables.sides(a, b, c), R);
}

IdentityResult star_triangle_constant(const Rapidity& p, const Rapidity& q, const Rapidity& r,
                                      const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  IdentityResult result("star-triangle", tol);
  result.add("N", std::int64_t{N});
  const StarTriangleTables tables(p, q, r, ctx);

  StarTriangleSides ref = tables.sides(0, 0, 0);
  std::int64_t ra = 0, rb = 0, rc = 0;
  if (std::abs(ref.rhs) < kPoleGuard) {
    double best = -1.0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) {
          const StarTriangleSides s = tables.sides(a, b, c);
          if (std::abs(s.rhs) > best) {
            best = std::abs(s.rhs);
            ref = s;
            ra = a;
            rb = b;
            rc = c;
          }
        }
    if (best < kPoleGuard) {
      throw DomainError("star_triangle_constant: every right-hand side vanishes");
    }
  }
  const Complex R = ref.lhs / ref.rhs;
  result.add("reference_a", ra).add("reference_b", rb).add("reference_c", rc);
  result.constant = R;

  double residual = 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c) residual = std::max(residual, sides_residual(tables.sides(a, b, c), R));
  return result.finish(residual);
}

CyclicSeriesSpec FourPhiThree::series(const UnityContext& ctx) const {
  return CyclicSeriesSpec{ctx.order(),
                          {alpha.begin(), alpha.end()},
                          {beta.begin(), beta.end()},
                          argument(),
                          true};
}

FourPhiThree map_to_4phi3(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                          std::int64_t b, std::int64_t c, const UnityContext& ctx) {
  for (const Rapidity* v : {&p, &q, &r}) {
    if (std::abs(v->x) < kPoleGuard || std::abs(v->y) < kPoleGuard || std::abs(v->mu) < kPoleGuard) {
      throw DomainError("map_to_4phi3: vanishing rapidity coordinate");
    }
  }
  const int N = ctx.order();
  const Complex w = ctx.omega();
  FourPhiThree out;
  out.alpha = {ctx.power(c - a) * r.y / p.y, w * p.x / q.y, ctx.power(c - b) * q.x / r.x};
  out.beta = {ctx.power(c - a + 1) * p.x / r.x, w * q.x / p.y, ctx.power(c - b + 1) * r.y / q.y};
  out.gamma = {p.y / (p.mu * r.mu * r.x), p.mu * q.y / (q.mu * p.y), w * q.mu * r.mu * r.x / q.y};

  const Complex w2 = w * w;
  out.balance_residual =
      std::abs(w2 * out.alpha[0] * out.alpha[1] * out.alpha[2] / (out.beta[0] * out.beta[1] * out.beta[2]) - 1.0);
  out.argument_residual = std::abs(out.argument() - w);

  // Prefactor = summand at d = c + l divided by series term l; l = 0 unless
  // that summand vanishes.
  const WeightTable wbar_pr(p, r, WeightKind::Wbar, ctx);
  const WeightTable w_pq(p, q, WeightKind::W, ctx);
  const WeightTable wbar_rq(r, q, WeightKind::Wbar, ctx);
  const CyclicSeriesSpec spec = out.series(ctx);
  double scale = 0.0;
  std::vector<Complex> summands(static_cast<std::size_t>(N));
  for (int l = 0; l < N; ++l) {
    const std::int64_t d = c + l;
    summands[l] = wbar_pr(a - d) * w_pq(d - c) * wbar_rq(d - b);
    scale = std::max(scale, std::abs(summands[l]));
  }
  if (scale == 0.0) throw DomainError("map_to_4phi3: every summand vanishes");
  int ref = 0;
  if (std::abs(summands[0]) < 1e-12 * scale) {
    ref = static_cast<int>(std::max_element(summands.begin(), summands.end(),
                                            [](Complex u, Complex v) { return std::abs(u) < std::abs(v); }) -
                           summands.begin());
  }
  const Complex term = series_term(spec, ref, ctx);
  if (std::abs(term) < kPoleGuard) throw DomainError("map_to_4phi3: reference series term vanishes");
  out.reference_index = ref;
  out.prefactor = summands[ref] / term;
  return out;
}

IdentityResult check_4phi3(const Rapidity& p, const Rapidity& q, const Rapidity& r, std::int64_t a,
                           std::int64_t b, std::int64_t c, const UnityContext& ctx, double tol,
                           double balance_tol) {
  IdentityResult result("star-triangle-4phi3", tol);
  result.add("N", std::int64_t{ctx.order()}).add("a", a).add("b", b).add("c", c);
  const FourPhiThree form = map_to_4phi3(p, q, r, a, b, c, ctx);
  const StarTriangleSides s = StarTriangleTables(p, q, r, ctx).sides(a, b, c);
  const Complex series = form.prefactor * eval_terminating_phi(form.series(ctx), ctx);
  const double sum_residual = std::abs(series - s.lhs) / std::max(std::abs(s.lhs), s.abs_sum);
  result.constant = form.prefactor;
  result.add("balance_residual", form.balance_residual)
      .add("argument_residual", form.argument_residual)
      .add("balance_tolerance", balance_tol)
      .add("reference_index", std::int64_t{form.reference_index});
  // Balance misses are scaled onto the sum tolerance so one number decides pass.
  const double scaled_balance = std::max(form.balance_residual, form.argument_residual) * (tol / balance_tol);
  return result.finish(std::max(sum_residual, scaled_balance));
}

}  // namespace cpotts
