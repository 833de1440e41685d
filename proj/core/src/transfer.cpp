#include "cpotts/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cpotts/errors.hpp"
#include "cpotts/weights.hpp"

namespace cpotts {

namespace {

long long checked_dimension(int L, int N) {
  if (L < 1) throw InputError("transfer matrix: L must be >= 1, got " + std::to_string(L));
  long long dim = 1;
  for (int j = 0; j < L; ++j) {
    dim *= N;
    if (dim > kMaxTransferDimension) {
      throw InputError("transfer matrix: N^L exceeds " + std::to_string(kMaxTransferDimension));
    }
  }
  return dim;
}

// spins[c * L + j] = σ_{j+1} of configuration c.
std::vector<int> spin_table(long long dim, int L, int N) {
  std::vector<int> spins(static_cast<std::size_t>(dim * L));
  for (long long c = 0; c < dim; ++c) {
    long long rest = c;
    for (int j = 0; j < L; ++j) {
      spins[static_cast<std::size_t>(c * L + j)] = static_cast<int>(rest % N);
      rest /= N;
    }
  }
  return spins;
}

// Fills entries(s, t) = ∏_j f(σ, σ', j) using the shared spin table.
template <class Factor>
TransferMatrix build(int L, const UnityContext& ctx, Factor factor) {
  const int N = ctx.order();
  const long long dim = checked_dimension(L, N);
  const std::vector<int> spins = spin_table(dim, L, N);
  TransferMatrix out{L, N, Eigen::MatrixXcd(dim, dim)};
  for (long long s = 0; s < dim; ++s) {
    const int* a = &spins[static_cast<std::size_t>(s * L)];
    for (long long t = 0; t < dim; ++t) {
      const int* b = &spins[static_cast<std::size_t>(t * L)];
      Complex prod(1.0, 0.0);
      for (int j = 0; j < L; ++j) prod *= factor(a, b, j, (j + 1) % L);
      out.entries(s, t) = prod;
    }
  }
  return out;
}

}  // namespace

int config_spin(long long config, int site, int N) {
  for (int j = 0; j < site; ++j) config /= N;
  return static_cast<int>(config % N);
}

TransferMatrix build_T(const Rapidity& p, const Rapidity& q, int L, const UnityContext& ctx) {
  const WeightTable w(p, q, WeightKind::W, ctx);
  const WeightTable wbar(p, q, WeightKind::Wbar, ctx);
  return build(L, ctx, [&](const int* s, const int* t, int j, int next) {
    return w(s[j] - t[j]) * wbar(s[next] - t[j]);
  });
}

TransferMatrix build_That(const Rapidity& p, const Rapidity& r, int L, const UnityContext& ctx) {
  const WeightTable w(p, r, WeightKind::W, ctx);
  const WeightTable wbar(p, r, WeightKind::Wbar, ctx);
  return build(L, ctx, [&](const int* s, const int* t, int j, int next) {
    return wbar(s[j] - t[j]) * w(s[j] - t[next]);
  });
}

TransferMatrix build_T_pointwise(const Rapidity& p, const Rapidity& q, int L, const UnityContext& ctx) {
  return build(L, ctx, [&](const int* s, const int* t, int j, int next) {
    return weight_w(p, q, s[j], t[j], ctx) * weight_wbar(p, q, s[next], t[j], ctx);
  });
}

TransferMatrix build_That_pointwise(const Rapidity& p, const Rapidity& r, int L, const UnityContext& ctx) {
  return build(L, ctx, [&](const int* s, const int* t, int j, int next) {
    return weight_wbar(p, r, s[j], t[j], ctx) * weight_w(p, r, s[j], t[next], ctx);
  });
}

IdentityResult check_commutation(const Rapidity& p, const Rapidity& q, const Rapidity& r, int L,
                                 const UnityContext& ctx, double tol) {
  IdentityResult result("transfer-commutation", tol);
  result.add("N", std::int64_t{ctx.order()}).add("L", std::int64_t{L});

  const Eigen::MatrixXcd A = build_T(p, q, L, ctx).entries * build_That(p, r, L, ctx).entries;
  const Eigen::MatrixXcd B = build_T(p, r, L, ctx).entries * build_That(p, q, L, ctx).entries;

  Eigen::Index bi = 0, bj = 0;
  const double max_b = B.cwiseAbs().maxCoeff(&bi, &bj);
  if (max_b == 0.0) throw DomainError("check_commutation: T_r T̂_q vanishes identically");
  const Complex lambda = A(bi, bj) / B(bi, bj);
  const double max_a = A.cwiseAbs().maxCoeff();
  const double deviation = (A - lambda * B).cwiseAbs().maxCoeff() / max_a;

  double spread = 0.0;
  for (Eigen::Index i = 0; i < B.rows(); ++i)
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      if (std::abs(B(i, j)) >= 0.1 * max_b) spread = std::max(spread, std::abs(A(i, j) / B(i, j) - lambda) / std::abs(lambda));

  result.constant = lambda;
  result.add("lambda_spread", spread);
  return result.finish(deviation);
}

}  // namespace cpotts
