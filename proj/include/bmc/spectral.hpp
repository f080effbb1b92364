#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "bmc/errors.hpp"
#include "bmc/operators.hpp"
#include "bmc/rng.hpp"
#include "bmc/trim.hpp"

namespace bmc {

struct SolverParams {
  double tol = 1e-8;       // on the residual relative to the largest value
  int max_iter = 0;        // 0 selects 10*k + 200
  int subspace = 0;        // 0 selects min(2k + 10, min(rows, cols))
  std::uint64_t seed = 0x243F6A8885A308D3ULL;
};

struct SpectrumEstimate {
  Eigen::VectorXd values;     // descending
  Eigen::VectorXd residuals;  // relative residual per value
  int iterations = 0;
  bool converged = false;
};

namespace detail {

inline Eigen::VectorXd random_direction(Eigen::Index dim, Xoshiro256& rng) {
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = 2.0 * rng.uniform01() - 1.0;
  return v;
}

// Two rounds of classical Gram-Schmidt against the first s columns.
inline void reorthogonalize(const Eigen::MatrixXd& basis, Eigen::Index s, Eigen::VectorXd& w) {
  if (s == 0) return;
  const auto cols = basis.leftCols(s);
  w.noalias() -= cols * (cols.transpose() * w);
  w.noalias() -= cols * (cols.transpose() * w);
}

// Random direction orthogonal to the first s columns; zero if the complement
// is numerically exhausted.
inline Eigen::VectorXd fresh_orthonormal(const Eigen::MatrixXd& basis, Eigen::Index s,
                                         Xoshiro256& rng) {
  const Eigen::Index dim = basis.rows();
  if (s >= dim) return Eigen::VectorXd::Zero(dim);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd w = random_direction(dim, rng);
    w /= w.norm();
    reorthogonalize(basis, s, w);
    const double norm = w.norm();
    if (norm > 1e-8) return w / norm;
  }
  return Eigen::VectorXd::Zero(dim);
}

// Operators too small for restarted iteration get materialized through their
// smaller side and handed to a dense SVD.
template <LinearOperatorLike Op>
SpectrumEstimate dense_svd_fallback(const Op& op, int k) {
  const Eigen::Index nr = op.rows();
  const Eigen::Index nc = op.cols();
  Eigen::MatrixXd m(nr, nc);
  if (nr <= nc) {
    for (Eigen::Index i = 0; i < nr; ++i) {
      m.row(i) = op.apply_adjoint(Eigen::VectorXd::Unit(nr, i)).transpose();
    }
  } else {
    for (Eigen::Index j = 0; j < nc; ++j) {
      m.col(j) = op.apply(Eigen::VectorXd::Unit(nc, j));
    }
  }
  if (!m.allFinite()) throw NonFinite("operator produced a non-finite vector");
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  SpectrumEstimate result;
  result.values = svd.singularValues().head(k);
  result.residuals = Eigen::VectorXd::Zero(k);
  result.iterations = 0;
  result.converged = true;
  return result;
}

}  // namespace detail

/// Top-k singular values of a matrix-free linear map by Golub-Kahan-Lanczos
/// bidiagonalization with full reorthogonalization and thick restarts.
///
/// The solver keeps the projected matrix B = U^T A V explicitly (it stays
/// upper-bidiagonal between restarts and diagonal-plus-row after one), so the
/// Ritz values are the singular values of a small dense matrix. In-basis
/// residual estimates decide when to attempt convergence; acceptance requires
/// explicit residuals ||A v - s u|| and ||A^T u - s v|| within tol relative,
/// plus a short fresh-probe sweep that guards against missed copies of
/// repeated values. Returned values are Rayleigh quotients of unit vectors
/// and never exceed the true norm. A run is deterministic given the seed.
///
/// Throws NonFinite if a NaN or Inf appears, InvalidArgument on a bad k/tol.
template <LinearOperatorLike Op>
SpectrumEstimate top_singular_values(const Op& op, int k, SolverParams params = {}) {
  const Eigen::Index nr = op.rows();
  const Eigen::Index nc = op.cols();
  const Eigen::Index minmn = std::min(nr, nc);
  if (k < 1 || k > minmn) throw InvalidArgument("k must be in [1, min(rows, cols)]");
  if (!(params.tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (minmn <= std::max<Eigen::Index>(k + 2, 16)) return detail::dense_svd_fallback(op, k);

  const int max_iter = params.max_iter > 0 ? params.max_iter : 10 * k + 200;
  const Eigen::Index lo = std::min<Eigen::Index>(k + 2, minmn);
  const Eigen::Index cap = std::max(
      lo, params.subspace > 0
              ? std::min<Eigen::Index>(params.subspace, minmn)
              : std::min<Eigen::Index>(2 * static_cast<Eigen::Index>(k) + 10, minmn));

  Xoshiro256 rng(params.seed);
  Eigen::MatrixXd basis_u = Eigen::MatrixXd::Zero(nr, cap);
  Eigen::MatrixXd basis_v = Eigen::MatrixXd::Zero(nc, cap);
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(cap, cap);
  Eigen::VectorXd coupling = Eigen::VectorXd::Zero(cap);

  Eigen::VectorXd v_next = detail::random_direction(nc, rng);
  v_next /= v_next.norm();

  Eigen::Index s = 0;
  int iterations = 0;
  int verify_cooldown = 0;
  constexpr double kBreakdown = 1e-13;

  // One bidiagonalization step: grow U, V and the projected matrix by one.
  const auto expand_one = [&] {
    Eigen::VectorXd w = op.apply(v_next);
    if (!w.allFinite()) throw NonFinite("operator produced a non-finite vector");
    if (s > 0) w.noalias() -= basis_u.leftCols(s) * coupling.head(s);
    detail::reorthogonalize(basis_u, s, w);
    double alpha = w.norm();
    if (alpha > kBreakdown) {
      basis_u.col(s) = w / alpha;
    } else {
      alpha = 0.0;
      basis_u.col(s) = detail::fresh_orthonormal(basis_u, s, rng);
    }
    basis_v.col(s) = v_next;
    projected.col(s).head(s) = coupling.head(s);
    projected(s, s) = alpha;

    Eigen::VectorXd z = op.apply_adjoint(basis_u.col(s));
    if (!z.allFinite()) throw NonFinite("operator produced a non-finite vector");
    z.noalias() -= alpha * v_next;
    detail::reorthogonalize(basis_v, s + 1, z);
    double beta = z.norm();
    if (beta > kBreakdown) {
      v_next = z / beta;
    } else {
      beta = 0.0;
      v_next = detail::fresh_orthonormal(basis_v, s + 1, rng);
    }
    coupling.setZero();
    coupling[s] = beta;
    ++s;
    ++iterations;
  };

  // Keep the leading Ritz triplets and the coupling they induce, then
  // continue expanding from the same v_next. The factorization relation is
  // preserved exactly, so Ritz values improve monotonically across restarts.
  const auto thick_restart = [&](const Eigen::JacobiSVD<Eigen::MatrixXd>& svd) {
    const Eigen::Index keep = std::min<Eigen::Index>(k + 5, cap - 1);
    const Eigen::MatrixXd new_u = basis_u.leftCols(s) * svd.matrixU().leftCols(keep);
    const Eigen::MatrixXd new_v = basis_v.leftCols(s) * svd.matrixV().leftCols(keep);
    Eigen::VectorXd new_coupling = Eigen::VectorXd::Zero(cap);
    for (Eigen::Index i = 0; i < keep; ++i) {
      new_coupling[i] = coupling.head(s).dot(svd.matrixU().col(i));
    }
    basis_u.leftCols(keep) = new_u;
    basis_v.leftCols(keep) = new_v;
    projected.setZero();
    projected.topLeftCorner(keep, keep).diagonal() = svd.singularValues().head(keep);
    coupling = new_coupling;
    s = keep;
  };

  // Rayleigh values and true residuals of the current leading Ritz triplets,
  // measured with explicit operator products. This is what convergence means;
  // the in-basis residual estimates only decide when to try.
  struct Verified {
    Eigen::VectorXd values;
    Eigen::VectorXd residuals;
    bool ok = false;
  };
  const auto verify_candidates = [&](const Eigen::JacobiSVD<Eigen::MatrixXd>& svd) {
    Verified out;
    out.values.resize(k);
    out.residuals.resize(k);
    const Eigen::MatrixXd ritz_u = basis_u.leftCols(s) * svd.matrixU().leftCols(k);
    const Eigen::MatrixXd ritz_v = basis_v.leftCols(s) * svd.matrixV().leftCols(k);
    Eigen::VectorXd raw(k);
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXd av = op.apply(ritz_v.col(i));
      Eigen::VectorXd atu = op.apply_adjoint(ritz_u.col(i));
      double sigma = ritz_u.col(i).dot(av);
      double flip = 1.0;
      if (sigma < 0.0) {
        sigma = -sigma;
        flip = -1.0;
      }
      out.values[i] = sigma;
      raw[i] = std::max((av - sigma * flip * ritz_u.col(i)).norm(),
                        (flip * atu - sigma * ritz_v.col(i)).norm());
    }
    const double scale = out.values.maxCoeff();
    out.residuals = scale > 0.0 ? (raw / scale).eval() : Eigen::VectorXd::Zero(k);
    // Report in descending value order.
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return out.values[a] > out.values[b]; });
    Eigen::VectorXd values(k), residuals(k);
    for (int i = 0; i < k; ++i) {
      values[i] = out.values[order[static_cast<std::size_t>(i)]];
      residuals[i] = out.residuals[order[static_cast<std::size_t>(i)]];
    }
    out.values = values;
    out.residuals = residuals;
    out.ok = out.residuals.maxCoeff() <= params.tol;
    return out;
  };

  // Krylov iteration from a single vector cannot certify multiplicities: an
  // exactly repeated value can converge with copies missing. Before accepting,
  // push a fresh random probe for a few steps and reject if any leading Ritz
  // value climbs past what was accepted.
  const auto probe_confirms = [&](const Eigen::VectorXd& accepted) {
    if (s >= minmn) return true;  // basis spans the whole space, values exact
    const Eigen::Index keep = std::min<Eigen::Index>(k + 5, cap - 1);
    if (s + 5 > cap && s > keep) {
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(
          projected.topLeftCorner(s, s), Eigen::ComputeFullU | Eigen::ComputeFullV);
      thick_restart(svd);
    }
    // The probe must be orthogonal to the pending v_next as well; then the
    // projected matrix stays exactly U^T A V after the pending coupling row is
    // dropped, and only the abandoned residual direction has to be
    // re-discovered if it still matters.
    Eigen::VectorXd probe = detail::fresh_orthonormal(basis_v, s, rng);
    probe -= v_next * v_next.dot(probe);
    probe -= v_next * v_next.dot(probe);
    const double probe_norm = probe.norm();
    if (probe_norm <= 1e-8) return true;
    v_next = probe / probe_norm;
    coupling.setZero();
    const Eigen::Index steps = std::min<Eigen::Index>(5, cap - s);
    for (Eigen::Index g = 0; g < steps; ++g) expand_one();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected.topLeftCorner(s, s));
    const double margin =
        10.0 * params.tol * std::max(accepted[0], std::numeric_limits<double>::min());
    for (int i = 0; i < k; ++i) {
      if (svd.singularValues()[i] > accepted[i] + margin) return false;
    }
    return true;
  };

  SpectrumEstimate result;
  while (true) {
    if (s == cap) {
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected.topLeftCorner(s, s),
                                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
      thick_restart(svd);
    }
    expand_one();
    if (s < k) continue;
    if (verify_cooldown > 0) {
      --verify_cooldown;
      if (iterations < max_iter) continue;
    }

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(projected.topLeftCorner(s, s),
                                                Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double scale = std::max(sigma[0], std::numeric_limits<double>::min());
    double worst = 0.0;
    for (int i = 0; i < k; ++i) {
      worst = std::max(worst,
                       std::fabs(coupling.head(s).dot(svd.matrixU().col(i))) / scale);
    }
    const bool candidate = sigma[0] == 0.0 || worst <= params.tol;

    if (candidate || iterations >= max_iter) {
      const Verified verified = verify_candidates(svd);
      if (iterations >= max_iter) {
        result.values = verified.values;
        result.residuals = verified.residuals;
        result.iterations = iterations;
        result.converged = verified.ok;
        break;
      }
      if (verified.ok && probe_confirms(verified.values)) {
        result.values = verified.values;
        result.residuals = verified.residuals;
        result.iterations = iterations;
        result.converged = true;
        break;
      }
      verify_cooldown = 5;  // keep iterating before re-checking
    }
  }

  if constexpr (HasNormBounds<Op>) {
    const double bound = std::sqrt(op.one_norm() * op.inf_norm());
    if (result.values.size() > 0 && result.values[0] > bound * (1.0 + 1e-10) + 1e-30) {
      throw Error("computed spectral norm exceeds sqrt(|A|_1 |A|_inf)");
    }
  }
  return result;
}

/// sqrt(n/T) * sigma_1(Nhat_Gamma - N). Zero when T = 0.
double scaled_spectral_norm(const PathCounts& trimmed, const BmcInstance& instance,
                            std::int64_t T, SolverParams params = {});

/// Euclidean norm of the first row of Nhat - N: a certified lower bound for
/// sigma_1(Nhat - N) that needs no iteration. Expects untrimmed counts.
double row_lower_bound(const PathCounts& counts, const BmcInstance& instance, std::int64_t T);

/// Top-k singular values of the trimmed counts matrix itself (uncentered).
/// Requires k >= K + 1 so the profile spans the expected rank-K signal and at
/// least one noise value.
SpectrumEstimate spectral_gap_profile(const PathCounts& trimmed, const BmcInstance& instance,
                                      int k, SolverParams params = {});

}  // namespace bmc
