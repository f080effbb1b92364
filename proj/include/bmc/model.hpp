#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace bmc {

/// Cluster-level parameters of a block Markov chain. Independent of the
/// number of states n.
///
/// Invariants established by validate_model():
///   - alpha > 0 elementwise, sums to 1
///   - p > 0 elementwise, rows sum to 1, full rank
///   - pi^T p = pi^T, pi > 0, sums to 1
///   - eta = max over a,b,c of { p(b,a)/p(c,a), p(a,b)/p(a,c) } >= 1
struct ClusterModel {
  Eigen::Index K = 0;
  Eigen::VectorXd alpha;
  Eigen::MatrixXd p;
  Eigen::VectorXd pi;
  double eta = 1.0;
};

/// A concrete n-state chain. States are assigned to clusters contiguously:
/// cluster k occupies [offsets[k], offsets[k+1]). Sizes follow the floor
/// rule |V_k| = floor(n*alpha_k) for k >= 2 with the remainder in cluster 1.
///
/// The n x n transition matrix P, with P(x,y) = p(sigma(x),sigma(y))/|V_sigma(y)|,
/// is never materialized here; see transition_row() and the dense helpers in
/// spectral.hpp for oracle-scale use.
struct BmcInstance {
  ClusterModel model;
  Eigen::Index n = 0;
  Eigen::VectorX<Eigen::Index> cluster_sizes;  // K entries
  Eigen::VectorX<Eigen::Index> offsets;        // K+1 entries, prefix sums

  /// Cluster of state x, by binary search over the offsets.
  Eigen::Index cluster_of(Eigen::Index x) const;

  /// Stationary probability of state x: pi_k / |V_k| for k = cluster_of(x).
  double stationary(Eigen::Index x) const;

  /// The full stationary distribution as an n-vector.
  Eigen::VectorXd stationary_vector() const;
};

/// The K x K reduction R of the expected frequency matrix N = T Diag(Pi) P,
/// with R(k,l) = T pi_k p(k,l) / sqrt(|V_k| |V_l|). The singular values of N
/// are exactly those of R padded with n-K zeros.
struct ExpectedSpectrum {
  Eigen::MatrixXd reduced;
  Eigen::VectorXd singular_values;  // K values, descending
};

/// Validates (alpha, p) and computes the stationary distribution pi and the
/// ratio bound eta.
///
/// Throws BadRatios, NonPositiveEntry, NotStochastic, or RankDeficient.
ClusterModel validate_model(const Eigen::VectorXd& alpha, const Eigen::MatrixXd& p);

/// Assigns states to clusters by the floor rule. Throws TooSmall if any
/// cluster would be empty.
BmcInstance build_instance(const ClusterModel& model, Eigen::Index n);

/// Per-cluster transition masses out of state x, i.e. row sigma(x) of p.
/// The per-state mass toward cluster l is the returned value divided by |V_l|.
Eigen::VectorXd transition_row(const BmcInstance& instance, Eigen::Index x);

/// Exact singular values of N = T Diag(Pi) P via the K x K reduction.
ExpectedSpectrum expected_spectrum(const BmcInstance& instance, std::int64_t T);

}  // namespace bmc
