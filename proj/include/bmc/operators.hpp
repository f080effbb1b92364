#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <concepts>
#include <cstdint>

#include "bmc/model.hpp"
#include "bmc/sampler.hpp"

namespace bmc {

/// Matrix-free linear map, the shape the singular value solver works on.
template <class Op>
concept LinearOperatorLike = requires(const Op& op, const Eigen::VectorXd& v) {
  { op.rows() } -> std::convertible_to<Eigen::Index>;
  { op.cols() } -> std::convertible_to<Eigen::Index>;
  { op.apply(v) } -> std::convertible_to<Eigen::VectorXd>;
  { op.apply_adjoint(v) } -> std::convertible_to<Eigen::VectorXd>;
};

/// Operators that can cheaply bound their spectral norm by
/// sqrt(one_norm * inf_norm).
template <class Op>
concept HasNormBounds = requires(const Op& op) {
  { op.one_norm() } -> std::convertible_to<double>;
  { op.inf_norm() } -> std::convertible_to<double>;
};

class DenseOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd a) : a_(std::move(a)) {}

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return a_ * v; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const { return a_.transpose() * u; }
  double one_norm() const { return a_.cwiseAbs().colwise().sum().maxCoeff(); }
  double inf_norm() const { return a_.cwiseAbs().rowwise().sum().maxCoeff(); }
  const Eigen::MatrixXd& matrix() const { return a_; }

 private:
  Eigen::MatrixXd a_;
};

class SparseOperator {
 public:
  explicit SparseOperator(Eigen::SparseMatrix<double, Eigen::RowMajor> a) : a_(std::move(a)) {}

  Eigen::Index rows() const { return a_.rows(); }
  Eigen::Index cols() const { return a_.cols(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const { return a_ * v; }
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const { return a_.transpose() * u; }
  double one_norm() const;
  double inf_norm() const;

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> a_;
};

/// The centered map v -> Nhat_Gamma v - T Diag(Pi) (P v), sparse counts minus
/// the rank-K expectation. The expectation side never materializes N: a
/// product reduces to per-cluster sums, costing O(n + nnz + K^2) per apply.
///
/// Immutable after construction and safe to share across threads.
class CenteredOperator {
 public:
  CenteredOperator(const PathCounts& trimmed, const BmcInstance& instance, std::int64_t T);

  Eigen::Index rows() const { return n_; }
  Eigen::Index cols() const { return n_; }
  Eigen::VectorXd apply(const Eigen::VectorXd& v) const;
  Eigen::VectorXd apply_adjoint(const Eigen::VectorXd& u) const;
  double one_norm() const;
  double inf_norm() const;

  const BmcInstance& instance() const { return instance_; }
  std::int64_t path_length() const { return T_; }

 private:
  /// Expected value of an entry in cluster block (a, b).
  double cell(Eigen::Index a, Eigen::Index b) const;

  Eigen::SparseMatrix<double, Eigen::RowMajor> counts_;
  BmcInstance instance_;
  std::int64_t T_;
  Eigen::Index n_;
};

/// Shape-checked constructor mirroring the rest of the pipeline's free
/// function style.
CenteredOperator centered_operator(const PathCounts& trimmed, const BmcInstance& instance,
                                   std::int64_t T);

}  // namespace bmc
