#pragma once

#include <Eigen/Dense>

#include "cpotts/algebra.hpp"
#include "cpotts/identity_result.hpp"
#include "cpotts/rapidity.hpp"

namespace cpotts {

/// Dense N^L × N^L transfer matrix. Configurations use a mixed-radix index
/// with site 1 least significant; boundaries are periodic.
struct TransferMatrix {
  int L = 0;
  int N = 0;
  Eigen::MatrixXcd entries;

  Eigen::Index dimension() const noexcept { return entries.rows(); }
};

/// Largest N^L accepted by the builders.
inline constexpr long long kMaxTransferDimension = 10000;

/// Spin j (0-based) of configuration index `config`.
int config_spin(long long config, int site, int N);

/// (T_q)_{σ,σ'} = ∏_j W_pq(σ_j - σ'_j) W̄_pq(σ_{j+1} - σ'_j), σ_{L+1} = σ_1.
TransferMatrix build_T(const Rapidity& p, const Rapidity& q, int L, const UnityContext& ctx);

/// (T̂_r)_{σ,σ'} = ∏_j W̄_pr(σ_j - σ'_j) W_pr(σ_j - σ'_{j+1}), σ'_{L+1} = σ'_1.
TransferMatrix build_That(const Rapidity& p, const Rapidity& r, int L, const UnityContext& ctx);

/// Same entries as build_T but from pointwise weight calls; structural oracle.
TransferMatrix build_T_pointwise(const Rapidity& p, const Rapidity& q, int L, const UnityContext& ctx);
TransferMatrix build_That_pointwise(const Rapidity& p, const Rapidity& r, int L, const UnityContext& ctx);

/// A = T_q T̂_r, B = T_r T̂_q, λ = A/B at the largest |B| entry.
/// Residual = max |A - λB| / max |A|; constant = λ. Also reports the spread
/// of A/B over entries with |B| >= 0.1 max |B|.
IdentityResult check_commutation(const Rapidity& p, const Rapidity& q, const Rapidity& r, int L,
                                 const UnityContext& ctx, double tol = 1e-8);

}  // namespace cpotts
