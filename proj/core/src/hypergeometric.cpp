#include "cpotts/hypergeometric.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>

#include "cpotts/errors.hpp"

namespace cpotts {

namespace {

Complex one_minus_power(Complex a, int N) { return Complex(1.0, 0.0) - int_pow(a, N); }

Complex principal_root(Complex v, int n) {
  if (v == Complex(0.0, 0.0)) return v;
  return std::exp(std::log(v) / static_cast<double>(n));
}

// Relative mismatch of z^N(1-x^N) against 1-y^N.
double cyclic_restriction_residual(Complex x, Complex y, Complex z, int N) {
  const Complex lhs = int_pow(z, N) * one_minus_power(x, N);
  const Complex rhs = one_minus_power(y, N);
  return relative_gap(lhs, rhs);
}

std::string describe(Complex v) {
  std::ostringstream os;
  os.precision(6);
  os << '(' << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
  return os.str();
}

}  // namespace

double CyclicSeriesSpec::periodicity_residual() const {
  Complex lhs = int_pow(argument, order);
  for (const Complex& a : numerators) lhs *= one_minus_power(a, order);
  Complex rhs(1.0, 0.0);
  for (const Complex& b : denominators) rhs *= one_minus_power(b, order);
  return relative_gap(lhs, rhs);
}

CyclicSeriesSpec phi21_spec(Complex x, Complex y, Complex z, const UnityContext& ctx) {
  return CyclicSeriesSpec{ctx.order(), {x}, {y}, z, true};
}

Complex eval_terminating_phi(const CyclicSeriesSpec& spec, const UnityContext& ctx) {
  const int N = ctx.order();
  Complex term(1.0, 0.0);
  Complex sum = term;
  for (int l = 0; l + 1 < N; ++l) {
    const Complex wl = ctx.power(l);
    Complex ratio = spec.argument;
    for (const Complex& a : spec.numerators) ratio *= Complex(1.0, 0.0) - a * wl;
    for (const Complex& b : spec.denominators) {
      const Complex factor = Complex(1.0, 0.0) - b * wl;
      if (std::abs(factor) < kPoleGuard) {
        throw DomainError("eval_terminating_phi: (beta; w)_" + std::to_string(l + 1) +
                          " vanishes for beta=" + describe(b));
      }
      ratio /= factor;
    }
    term *= ratio;
    sum += term;
  }
  return sum;
}

Complex series_term(const CyclicSeriesSpec& spec, int l, const UnityContext& ctx) {
  Complex term(1.0, 0.0);
  for (int j = 0; j < l; ++j) {
    const Complex wj = ctx.power(j);
    term *= spec.argument;
    for (const Complex& a : spec.numerators) term *= Complex(1.0, 0.0) - a * wj;
    for (const Complex& b : spec.denominators) {
      const Complex factor = Complex(1.0, 0.0) - b * wj;
      if (std::abs(factor) < kPoleGuard) throw DomainError("series_term: denominator pole");
      term /= factor;
    }
  }
  return term;
}

Complex phi21(Complex x, Complex y, Complex z, const UnityContext& ctx) {
  return eval_terminating_phi(phi21_spec(x, y, z, ctx), ctx);
}

Complex eval_basic_phi(std::span<const Complex> numerators, std::span<const Complex> denominators,
                       Complex q, Complex z, int max_terms) {
  constexpr double kTerminationGuard = 1e-13;
  Complex term(1.0, 0.0);
  Complex sum(0.0, 0.0);
  Complex ql(1.0, 0.0);
  int small_run = 0;
  for (int l = 0; l < max_terms; ++l) {
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++small_run >= 2) return sum;
    } else {
      small_run = 0;
    }
    Complex ratio = z;
    for (const Complex& a : numerators) {
      const Complex factor = Complex(1.0, 0.0) - a * ql;
      if (std::abs(factor) < kTerminationGuard) return sum;
      ratio *= factor;
    }
    for (const Complex& b : denominators) {
      const Complex factor = Complex(1.0, 0.0) - b * ql;
      if (std::abs(factor) < kPoleGuard) {
        throw DomainError("eval_basic_phi: (b; q)_" + std::to_string(l + 1) + " vanishes for b=" + describe(b));
      }
      ratio /= factor;
    }
    ql *= q;
    const Complex qq = Complex(1.0, 0.0) - ql;
    if (std::abs(qq) < kPoleGuard) throw DomainError("eval_basic_phi: (q; q)_l vanishes");
    ratio /= qq;
    term *= ratio;
    if (term == Complex(0.0, 0.0)) return sum;
  }
  throw SamplerError("eval_basic_phi: no convergence within " + std::to_string(max_terms) + " terms");
}

Complex eval_phi_root_limit(std::span<const int> numerator_exponents,
                            std::span<const int> denominator_exponents, Complex t,
                            const UnityContext& ctx) {
  const int N = ctx.order();
  // A term is value · ε^order as q → ω; only order 0 survives the limit.
  Complex value(1.0, 0.0);
  int order = 0;
  Complex tl(1.0, 0.0);
  Complex sum(0.0, 0.0);

  std::vector<int> denominators(denominator_exponents.begin(), denominator_exponents.end());
  denominators.push_back(1);  // (q; q)_l

  for (int l = 0; l < N; ++l) {
    if (order < 0) throw DomainError("eval_phi_root_limit: net pole at l=" + std::to_string(l));
    if (order == 0) sum += value * tl;
    if (l + 1 == N) break;
    for (int a : numerator_exponents) {
      const int m = a + l;
      if (m == 0) return sum;  // exact zero: series terminates
      if (m % N == 0) {
        value *= static_cast<double>(m);
        ++order;
      } else {
        value *= Complex(1.0, 0.0) - ctx.power(m);
      }
    }
    for (int b : denominators) {
      const int m = b + l;
      if (m == 0) {
        order -= N + 1;  // exact zero in a denominator: a pole nothing can cancel
      } else if (m % N == 0) {
        value /= static_cast<double>(m);
        --order;
      } else {
        value /= Complex(1.0, 0.0) - ctx.power(m);
      }
    }
    tl *= t;
  }
  return sum;
}

IdentityResult check_rothe(int alpha, Complex x, const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  if (alpha < 0 || alpha >= N) {
    throw InputError("check_rothe: need 0 <= alpha <= N-1, got " + std::to_string(alpha));
  }
  IdentityResult result("rothe", tol);
  result.add("N", std::int64_t{N}).add("alpha", std::int64_t{alpha}).add("x", x);

  const Complex w = ctx.omega();
  const Complex a = ctx.power(-alpha);
  Complex sum(0.0, 0.0);
  for (int n = 0; n <= alpha; ++n) {
    sum += omega_pochhammer(a, n, ctx) / omega_pochhammer(w, n, ctx) * int_pow(x, n);
  }
  const Complex product = omega_pochhammer(a * x, alpha, ctx);
  Complex binomial(0.0, 0.0);
  for (int n = 0; n <= alpha; ++n) {
    const std::int64_t e = static_cast<std::int64_t>(n) * (n - 1) / 2 - static_cast<std::int64_t>(n) * alpha;
    binomial += q_binomial(alpha, n, w) * int_pow(-x, n) * ctx.power(e);
  }
  return result.finish(std::max({relative_gap(sum, product), relative_gap(sum, binomial),
                                 relative_gap(product, binomial)}));
}

IdentityResult check_euler_analog(int alpha, int beta, int gamma, Complex t, const UnityContext& ctx,
                                  double tol) {
  const int N = ctx.order();
  auto normalize = [N](int e) {
    const int r = ((e - 1) % N + N) % N;
    return r + 1;
  };
  const int a = normalize(alpha);
  const int b = normalize(beta);
  const int g = normalize(gamma);
  const int shift = a + b - g;
  if (shift < 0 || shift > N) {
    throw InputError("check_euler_analog: need 0 <= alpha+beta-gamma <= N after normalizing to 1..N, got " +
                     std::to_string(shift));
  }
  IdentityResult result("euler-analog", tol);
  result.add("N", std::int64_t{N})
      .add("alpha", std::int64_t{a})
      .add("beta", std::int64_t{b})
      .add("gamma", std::int64_t{g})
      .add("t", t);

  const int lhs_num[] = {a, b};
  const int rhs_num[] = {g - a, g - b};
  const int den[] = {g};
  const Complex t_shifted = ctx.power(shift) * t;
  Complex lhs;
  Complex rhs;
  try {
    lhs = eval_phi_root_limit(lhs_num, den, t, ctx);
    rhs = omega_pochhammer(t_shifted, N - shift, ctx) * eval_phi_root_limit(rhs_num, den, t_shifted, ctx);
  } catch (const DomainError& e) {
    throw InputError(std::string("check_euler_analog: inadmissible exponents (") + e.what() + ")");
  }
  result.add("lhs", lhs).add("rhs", rhs);
  return result.finish(relative_gap(lhs, rhs));
}

Phi21ClosedForm phi21_cyclic_closed(Complex x, Complex y, Complex z, const UnityContext& ctx) {
  const int N = ctx.order();
  if (cyclic_restriction_residual(x, y, z, N) > 1e-9) {
    throw InputError("phi21_cyclic_closed: z^N (1-x^N) = 1-y^N violated");
  }
  const Complex w = ctx.omega();
  Phi21ClosedForm out;
  const Complex numer = p_product(y, ctx) * p_product(w * x / y, ctx) * p_product(z, ctx);
  const Complex denom = p_product(x, ctx) * p_product(w * x * z / y, ctx);
  out.closed = std::sqrt(static_cast<double>(N)) / (phi_zero(ctx) * int_pow(delta_root(y, ctx), N - 1)) *
               numer / denom;
  out.direct = phi21(x, y, z, ctx);

  const Complex ratio = out.direct / out.closed;
  const double turns = std::arg(ratio) / (2.0 * kPi / N);
  out.phase_class = static_cast<int>(ctx.reduce(static_cast<std::int64_t>(std::llround(turns))));
  out.modulus_residual = std::abs(std::abs(out.direct) - std::abs(out.closed)) / std::abs(out.direct);
  out.phase_distance = std::abs(ratio / std::abs(ratio) - ctx.power(out.phase_class));
  return out;
}

IdentityResult check_phi21_closed(Complex x, Complex y, Complex z, const UnityContext& ctx,
                                  double modulus_tol, double phase_tol) {
  IdentityResult result("phi21-closed", modulus_tol);
  result.add("N", std::int64_t{ctx.order()}).add("x", x).add("y", y).add("z", z);
  const Phi21ClosedForm form = phi21_cyclic_closed(x, y, z, ctx);
  result.add("phase_class", std::int64_t{form.phase_class})
      .add("phase_distance", form.phase_distance)
      .add("phase_tolerance", phase_tol);
  result.constant = form.closed;
  // Scale the phase miss onto the modulus tolerance so one number decides pass.
  const double residual = std::max(form.modulus_residual, form.phase_distance * (modulus_tol / phase_tol));
  return result.finish(residual);
}

IdentityResult check_wff(Complex x, Complex y, Complex z, const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  if (cyclic_restriction_residual(x, y, z, N) > 1e-9) {
    throw InputError("check_wff: z^N (1-x^N) = 1-y^N violated");
  }
  IdentityResult result("wff", tol);
  result.add("N", std::int64_t{N}).add("x", x).add("y", y).add("z", z);
  const Complex x2 = y / (x * z);
  const Complex y2 = ctx.omega() / z;
  const double partner_restriction = cyclic_restriction_residual(x2, y2, x, N);
  result.add("partner_restriction_residual", partner_restriction);
  const Complex product = phi21(x, y, z, ctx) * phi21(x2, y2, x, ctx);
  result.constant = product;
  return result.finish(std::max(std::abs(product - static_cast<double>(N)) / N, partner_restriction));
}

IdentityResult check_shift_recursion(Complex x, Complex y, Complex z, int m, int n, int k,
                                     const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  if (cyclic_restriction_residual(x, y, z, N) > 1e-9) {
    throw InputError("check_shift_recursion: z^N (1-x^N) = 1-y^N violated");
  }
  IdentityResult result("shift-recursion", tol);
  result.add("N", std::int64_t{N})
      .add("x", x)
      .add("y", y)
      .add("z", z)
      .add("m", std::int64_t{m})
      .add("n", std::int64_t{n})
      .add("k", std::int64_t{k});
  const Complex w = ctx.omega();
  const Complex zk = z * ctx.power(k);
  const Complex shifted = phi21(x * ctx.power(m), y * ctx.power(n), zk, ctx);
  const Complex factor = int_pow(w / y, k) * int_pow(zk, -n) * omega_pochhammer_signed(y, n, ctx) *
                         omega_pochhammer_signed(z, k, ctx) * omega_pochhammer_signed(w * x / y, m - n, ctx) /
                         (omega_pochhammer_signed(x, m, ctx) * omega_pochhammer_signed(w * x * z / y, m - n + k, ctx));
  const Complex rhs = phi21(x, y, z, ctx) * factor;
  result.add("lhs", shifted).add("rhs", rhs);
  return result.finish(relative_gap(shifted, rhs));
}

IdentityResult check_phi32_transform(Complex x1, Complex x2, Complex y1, Complex y2, Complex z,
                                     int z1_branch, const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  const Complex restriction_lhs = int_pow(z, N) * one_minus_power(x1, N) * one_minus_power(x2, N);
  const Complex restriction_rhs = one_minus_power(y1, N) * one_minus_power(y2, N);
  if (relative_gap(restriction_lhs, restriction_rhs) > 1e-9) {
    throw InputError("check_phi32_transform: periodic restriction violated");
  }
  IdentityResult result("phi32-transform", tol);
  result.add("N", std::int64_t{N})
      .add("x1", x1)
      .add("x2", x2)
      .add("y1", y1)
      .add("y2", y2)
      .add("z", z)
      .add("z1_branch", std::int64_t{z1_branch});

  const Complex w = ctx.omega();
  const Complex z1 = ctx.power(z1_branch) * principal_root(one_minus_power(y1, N) / one_minus_power(x1, N), N);
  const Complex A = phi21(x1, y1, z1, ctx) * phi21(x2, y2, z / z1, ctx) / static_cast<double>(N);
  const Complex lhs = eval_terminating_phi(CyclicSeriesSpec{N, {x1, x2}, {y1, y2}, z, true}, ctx);
  const CyclicSeriesSpec image{N, {z / z1, y1 / (x1 * z1)}, {w / z1, w * x2 * z / (y2 * z1)}, w * x1 / y2, true};
  const Complex rhs = A * eval_terminating_phi(image, ctx);
  result.constant = A;
  result.add("z1", z1).add("lhs", lhs).add("rhs", rhs);
  return result.finish(relative_gap(lhs, rhs));
}

IdentityResult check_euler_chain(int alpha, int beta, int gamma, Complex x, Complex y, int z_branch,
                                 const UnityContext& ctx, double tol) {
  const int N = ctx.order();
  const int shift = alpha + beta - gamma;
  if (shift < 0 || shift > N) throw InputError("check_euler_chain: need 0 <= alpha+beta-gamma <= N");
  IdentityResult result("euler-chain", tol);
  result.add("N", std::int64_t{N})
      .add("alpha", std::int64_t{alpha})
      .add("beta", std::int64_t{beta})
      .add("gamma", std::int64_t{gamma})
      .add("x", x)
      .add("y", y)
      .add("z_branch", std::int64_t{z_branch});

  const Complex w = ctx.omega();
  const Complex wa = ctx.power(alpha);
  const Complex wb = ctx.power(beta);
  const Complex wgb = ctx.power(gamma - beta);
  const Complex ws = ctx.power(shift);
  const Complex z = ctx.power(z_branch) * principal_root(one_minus_power(y, N) / one_minus_power(x, N), N);
  const double inv_n = 1.0 / N;

  const Complex b_bar = phi21(x, wa * x, 1.0, ctx) * phi21(wgb * y, w * y, wb, ctx) * inv_n;
  const Complex a = phi21(wgb * y, wa * x, 1.0 / z, ctx) * phi21(x, w * y, wb * z, ctx) * inv_n;
  const Complex b = phi21(ws * z * x / y, wb * z * x / y, 1.0, ctx) * phi21(wb * z, w * z, wgb, ctx) * inv_n;
  const Complex chain = a * b / b_bar;
  const Complex target = omega_pochhammer(ws * x / y, N - shift, ctx);
  result.constant = chain;
  result.add("target", target);
  return result.finish(relative_gap(chain, target));
}

IdentityResult check_saalschutz(Complex a, Complex b, Complex c, int n, Complex q, double tol) {
  if (!(std::abs(q) < 1.0)) throw InputError("check_saalschutz: need |q| < 1");
  if (n < 0 || n > 12) throw InputError("check_saalschutz: need 0 <= n <= 12");
  IdentityResult result("saalschutz", tol);
  result.add("a", a).add("b", b).add("c", c).add("n", std::int64_t{n}).add("q", q);

  const Complex qn_inv = int_pow(q, -n);
  const Complex d = int_pow(q, 1 - n) * a * b / c;
  Complex lhs(0.0, 0.0);
  for (int l = 0; l <= n; ++l) {
    const Complex den = q_pochhammer(c, q, l) * q_pochhammer(d, q, l) * q_pochhammer(q, q, l);
    if (std::abs(den) < kPoleGuard) throw DomainError("check_saalschutz: denominator pole at l=" + std::to_string(l));
    lhs += q_pochhammer(a, q, l) * q_pochhammer(b, q, l) * q_pochhammer(qn_inv, q, l) / den * int_pow(q, l);
  }
  const Complex rden = q_pochhammer(c, q, n) * q_pochhammer(c / (a * b), q, n);
  if (std::abs(rden) < kPoleGuard) throw DomainError("check_saalschutz: right-hand side pole");
  const Complex rhs = q_pochhammer(c / a, q, n) * q_pochhammer(c / b, q, n) / rden;
  result.add("lhs", lhs).add("rhs", rhs);
  return result.finish(relative_gap(lhs, rhs));
}

double pochhammer_clearance(Complex b, const UnityContext& ctx) {
  double worst = std::numeric_limits<double>::infinity();
  for (int l = 0; l < ctx.order(); ++l) worst = std::min(worst, std::abs(Complex(1.0, 0.0) - b * ctx.power(l)));
  return worst;
}

namespace {

constexpr double kClearance = 1e-3;

Complex draw_annulus(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius2(0.04, 2.25);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  return std::polar(std::sqrt(radius2(rng)), phase(rng));
}

bool clear(std::initializer_list<Complex> values, const UnityContext& ctx) {
  for (const Complex& v : values)
    if (pochhammer_clearance(v, ctx) < kClearance) return false;
  return true;
}

constexpr int kMaxDraws = 10000;

}  // namespace

CyclicTriple sample_cyclic_triple(std::mt19937_64& rng, const UnityContext& ctx) {
  const int N = ctx.order();
  const Complex w = ctx.omega();
  std::uniform_int_distribution<int> branch(0, N - 1);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const Complex x = draw_annulus(rng);
    const Complex y = draw_annulus(rng);
    const int b = branch(rng);
    const Complex dx = one_minus_power(x, N);
    const Complex dy = one_minus_power(y, N);
    if (std::abs(dx) < kClearance || std::abs(dy) < kClearance) continue;
    const Complex z = ctx.power(b) * principal_root(dy / dx, N);
    // Denominators of both wff series, and every p-product argument.
    if (!clear({y, w / z, x, z, w * x / y, w * x * z / y}, ctx)) continue;
    return CyclicTriple{x, y, z};
  }
  throw SamplerError("sample_cyclic_triple: no well-conditioned draw");
}

Phi32Params sample_phi32_params(std::mt19937_64& rng, const UnityContext& ctx, bool z_is_omega) {
  const int N = ctx.order();
  const Complex w = ctx.omega();
  std::uniform_int_distribution<int> branch(0, N - 1);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Phi32Params s{};
    s.x1 = draw_annulus(rng);
    s.x2 = draw_annulus(rng);
    s.y1 = draw_annulus(rng);
    const Complex d1 = one_minus_power(s.x1, N);
    const Complex d2 = one_minus_power(s.x2, N);
    const Complex e1 = one_minus_power(s.y1, N);
    if (std::abs(d1) < kClearance || std::abs(d2) < kClearance || std::abs(e1) < kClearance) continue;
    if (z_is_omega) {
      s.z = w;
      s.y2 = ctx.power(branch(rng)) * principal_root(1.0 - d1 * d2 / e1, N);
    } else {
      s.y2 = draw_annulus(rng);
      const Complex e2 = one_minus_power(s.y2, N);
      if (std::abs(e2) < kClearance) continue;
      s.z = ctx.power(branch(rng)) * principal_root(e1 * e2 / (d1 * d2), N);
    }
    if (std::abs(one_minus_power(s.y2, N)) < kClearance) continue;
    // Every branch of z1 must leave the series and its constant pole-free.
    const Complex z1 = principal_root(e1 / d1, N);
    bool ok = clear({s.y1, s.y2}, ctx);
    for (int b = 0; b < N && ok; ++b) {
      const Complex zb = ctx.power(b) * z1;
      ok = clear({w / zb, w * s.x2 * s.z / (s.y2 * zb)}, ctx);
    }
    if (ok) return s;
  }
  throw SamplerError("sample_phi32_params: no well-conditioned draw");
}

Complex q_pochhammer_infinite(Complex x, Complex q) {
  if (!(std::abs(q) < 1.0)) throw InputError("q_pochhammer_infinite: need |q| < 1");
  Complex prod(1.0, 0.0);
  Complex qj(1.0, 0.0);
  while (std::abs(qj) * std::max(1.0, std::abs(x)) > 1e-18) {
    prod *= Complex(1.0, 0.0) - x * qj;
    qj *= q;
  }
  return prod;
}

IdentityResult check_q_binomial_theorem(Complex a, Complex x, Complex q, double tol) {
  if (!(std::abs(q) < 1.0) || !(std::abs(x) < 1.0)) {
    throw InputError("check_q_binomial_theorem: need |q| < 1 and |x| < 1");
  }
  IdentityResult result("binomial-q", tol);
  result.add("a", a).add("x", x).add("q", q);
  const Complex num[] = {a};
  const Complex lhs = eval_basic_phi(num, {}, q, x);
  const Complex den = q_pochhammer_infinite(x, q);
  if (std::abs(den) < kPoleGuard) throw DomainError("check_q_binomial_theorem: (x; q)_inf vanishes");
  const Complex rhs = q_pochhammer_infinite(a * x, q) / den;
  result.add("lhs", lhs).add("rhs", rhs);
  return result.finish(relative_gap(lhs, rhs));
}

}  // namespace cpotts
