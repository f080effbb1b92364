#include "bmc/model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "bmc/errors.hpp"

namespace bmc {
namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kRankTolerance = 1e-10;
constexpr Eigen::Index kDenseStationaryLimit = 64;

// Stationary row vector of a row-stochastic matrix: the left eigenvector for
// eigenvalue 1, obtained directly by replacing one equation of
// (p^T - I) pi = 0 with the normalization sum(pi) = 1.
Eigen::VectorXd stationary_dense(const Eigen::MatrixXd& p) {
  const Eigen::Index k = p.rows();
  Eigen::MatrixXd a = p.transpose() - Eigen::MatrixXd::Identity(k, k);
  a.row(k - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
  rhs[k - 1] = 1.0;
  return a.fullPivLu().solve(rhs);
}

// Power iteration fallback for large K. Converges geometrically since p is
// strictly positive.
Eigen::VectorXd stationary_power(const Eigen::MatrixXd& p) {
  const Eigen::Index k = p.rows();
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  for (int iter = 0; iter < 100000; ++iter) {
    Eigen::VectorXd next = p.transpose() * pi;
    next /= next.sum();
    const double delta = (next - pi).cwiseAbs().maxCoeff();
    pi = next;
    if (delta < 1e-16) break;
  }
  return pi;
}

}  // namespace

Eigen::Index BmcInstance::cluster_of(Eigen::Index x) const {
  const Eigen::Index* begin = offsets.data();
  const Eigen::Index* end = begin + offsets.size();
  return std::upper_bound(begin, end, x) - begin - 1;
}

double BmcInstance::stationary(Eigen::Index x) const {
  const Eigen::Index k = cluster_of(x);
  return model.pi[k] / static_cast<double>(cluster_sizes[k]);
}

Eigen::VectorXd BmcInstance::stationary_vector() const {
  Eigen::VectorXd out(n);
  for (Eigen::Index k = 0; k < model.K; ++k) {
    out.segment(offsets[k], cluster_sizes[k])
        .setConstant(model.pi[k] / static_cast<double>(cluster_sizes[k]));
  }
  return out;
}

ClusterModel validate_model(const Eigen::VectorXd& alpha, const Eigen::MatrixXd& p) {
  const Eigen::Index k = alpha.size();
  if (k < 1) throw BadRatios("alpha must have at least one entry");
  if (p.rows() != k || p.cols() != k) {
    throw ShapeMismatch("p must be K x K with K = alpha.size()");
  }
  if (!alpha.allFinite() || !p.allFinite()) {
    throw InvalidArgument("model parameters must be finite");
  }
  if ((alpha.array() <= 0.0).any()) throw BadRatios("cluster ratios must be positive");
  if (std::fabs(alpha.sum() - 1.0) > kSumTolerance) {
    throw BadRatios("cluster ratios must sum to 1, got " + std::to_string(alpha.sum()));
  }
  if ((p.array() <= 0.0).any()) throw NonPositiveEntry("p must be strictly positive");
  for (Eigen::Index r = 0; r < k; ++r) {
    const double s = p.row(r).sum();
    if (std::fabs(s - 1.0) > kSumTolerance) {
      throw NotStochastic("row " + std::to_string(r + 1) + " of p sums to " + std::to_string(s));
    }
  }

  ClusterModel model;
  model.K = k;
  // Canonicalize so that downstream identities hold at full double precision.
  model.alpha = alpha / alpha.sum();
  model.p = p;
  for (Eigen::Index r = 0; r < k; ++r) model.p.row(r) /= model.p.row(r).sum();

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(model.p);
  if (svd.singularValues()[k - 1] <= kRankTolerance) {
    throw RankDeficient("smallest singular value of p is " +
                        std::to_string(svd.singularValues()[k - 1]));
  }

  model.pi = k <= kDenseStationaryLimit ? stationary_dense(model.p) : stationary_power(model.p);
  model.pi /= model.pi.sum();
  if ((model.pi.array() <= 0.0).any()) {
    throw RankDeficient("stationary distribution of p is not strictly positive");
  }

  double eta = 1.0;
  for (Eigen::Index a = 0; a < k; ++a) {
    const double row_ratio = model.p.row(a).maxCoeff() / model.p.row(a).minCoeff();
    const double col_ratio = model.p.col(a).maxCoeff() / model.p.col(a).minCoeff();
    eta = std::max({eta, row_ratio, col_ratio});
  }
  model.eta = eta;
  return model;
}

BmcInstance build_instance(const ClusterModel& model, Eigen::Index n) {
  if (n < 1) throw TooSmall("n must be positive");
  const Eigen::Index k = model.K;

  BmcInstance instance;
  instance.model = model;
  instance.n = n;
  instance.cluster_sizes.resize(k);
  Eigen::Index assigned = 0;
  for (Eigen::Index c = 1; c < k; ++c) {
    instance.cluster_sizes[c] =
        static_cast<Eigen::Index>(std::floor(static_cast<double>(n) * model.alpha[c]));
    assigned += instance.cluster_sizes[c];
  }
  instance.cluster_sizes[0] = n - assigned;
  if ((instance.cluster_sizes.array() < 1).any()) {
    throw TooSmall("n = " + std::to_string(n) + " leaves an empty cluster");
  }

  instance.offsets.resize(k + 1);
  instance.offsets[0] = 0;
  for (Eigen::Index c = 0; c < k; ++c) {
    instance.offsets[c + 1] = instance.offsets[c] + instance.cluster_sizes[c];
  }
  return instance;
}

Eigen::VectorXd transition_row(const BmcInstance& instance, Eigen::Index x) {
  if (x < 0 || x >= instance.n) throw InvalidArgument("state index out of range");
  return instance.model.p.row(instance.cluster_of(x));
}

ExpectedSpectrum expected_spectrum(const BmcInstance& instance, std::int64_t T) {
  const Eigen::Index k = instance.model.K;
  ExpectedSpectrum out;
  out.reduced.resize(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const double scale = std::sqrt(static_cast<double>(instance.cluster_sizes[a]) *
                                     static_cast<double>(instance.cluster_sizes[b]));
      out.reduced(a, b) =
          static_cast<double>(T) * instance.model.pi[a] * instance.model.p(a, b) / scale;
    }
  }
  out.singular_values = Eigen::JacobiSVD<Eigen::MatrixXd>(out.reduced).singularValues();
  return out;
}

}  // namespace bmc
