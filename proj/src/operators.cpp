#include "bmc/operators.hpp"

#include <cmath>

#include "bmc/errors.hpp"

namespace bmc {

double SparseOperator::one_norm() const {
  Eigen::VectorXd col_abs = Eigen::VectorXd::Zero(a_.cols());
  for (int row = 0; row < a_.outerSize(); ++row) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(a_, row); it; ++it) {
      col_abs[it.col()] += std::fabs(it.value());
    }
  }
  return col_abs.size() > 0 ? col_abs.maxCoeff() : 0.0;
}

double SparseOperator::inf_norm() const {
  double best = 0.0;
  for (int row = 0; row < a_.outerSize(); ++row) {
    double sum = 0.0;
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(a_, row); it; ++it) {
      sum += std::fabs(it.value());
    }
    best = std::max(best, sum);
  }
  return best;
}

CenteredOperator::CenteredOperator(const PathCounts& trimmed, const BmcInstance& instance,
                                   std::int64_t T)
    : counts_(trimmed.counts), instance_(instance), T_(T), n_(instance.n) {
  if (trimmed.n != instance.n) {
    throw ShapeMismatch("counts are " + std::to_string(trimmed.n) + "-state but instance has n = " +
                        std::to_string(instance.n));
  }
  if (T < 0) throw InvalidArgument("T must be nonnegative");
}

double CenteredOperator::cell(Eigen::Index a, Eigen::Index b) const {
  return static_cast<double>(T_) * instance_.model.pi[a] * instance_.model.p(a, b) /
         (static_cast<double>(instance_.cluster_sizes[a]) *
          static_cast<double>(instance_.cluster_sizes[b]));
}

Eigen::VectorXd CenteredOperator::apply(const Eigen::VectorXd& v) const {
  if (v.size() != n_) throw ShapeMismatch("vector length does not match operator");
  const Eigen::Index k = instance_.model.K;

  Eigen::VectorXd cluster_sum(k);
  for (Eigen::Index c = 0; c < k; ++c) {
    cluster_sum[c] = v.segment(instance_.offsets[c], instance_.cluster_sizes[c]).sum();
  }
  // w_a = Pi_x (P v)_x for any x in cluster a.
  Eigen::VectorXd w(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    double acc = 0.0;
    for (Eigen::Index b = 0; b < k; ++b) {
      acc += instance_.model.p(a, b) * cluster_sum[b] /
             static_cast<double>(instance_.cluster_sizes[b]);
    }
    w[a] = instance_.model.pi[a] / static_cast<double>(instance_.cluster_sizes[a]) * acc;
  }

  Eigen::VectorXd out = counts_ * v;
  for (Eigen::Index a = 0; a < k; ++a) {
    out.segment(instance_.offsets[a], instance_.cluster_sizes[a]).array() -=
        static_cast<double>(T_) * w[a];
  }
  return out;
}

Eigen::VectorXd CenteredOperator::apply_adjoint(const Eigen::VectorXd& u) const {
  if (u.size() != n_) throw ShapeMismatch("vector length does not match operator");
  const Eigen::Index k = instance_.model.K;

  Eigen::VectorXd cluster_sum(k);
  for (Eigen::Index c = 0; c < k; ++c) {
    cluster_sum[c] = u.segment(instance_.offsets[c], instance_.cluster_sizes[c]).sum();
  }
  // g_b = (P^T Diag(Pi) u)_y for any y in cluster b.
  Eigen::VectorXd g(k);
  for (Eigen::Index b = 0; b < k; ++b) {
    double acc = 0.0;
    for (Eigen::Index a = 0; a < k; ++a) {
      acc += instance_.model.p(a, b) * instance_.model.pi[a] * cluster_sum[a] /
             static_cast<double>(instance_.cluster_sizes[a]);
    }
    g[b] = acc / static_cast<double>(instance_.cluster_sizes[b]);
  }

  Eigen::VectorXd out = counts_.transpose() * u;
  for (Eigen::Index b = 0; b < k; ++b) {
    out.segment(instance_.offsets[b], instance_.cluster_sizes[b]).array() -=
        static_cast<double>(T_) * g[b];
  }
  return out;
}

double CenteredOperator::one_norm() const {
  const Eigen::Index k = instance_.model.K;
  // Column y of the expectation contributes |V_a| * cell(a, b(y)) per cluster a.
  Eigen::VectorXd base(k);
  for (Eigen::Index b = 0; b < k; ++b) {
    double acc = 0.0;
    for (Eigen::Index a = 0; a < k; ++a) {
      acc += static_cast<double>(instance_.cluster_sizes[a]) * cell(a, b);
    }
    base[b] = acc;
  }
  Eigen::VectorXd col_abs(n_);
  for (Eigen::Index b = 0; b < k; ++b) {
    col_abs.segment(instance_.offsets[b], instance_.cluster_sizes[b]).setConstant(base[b]);
  }
  for (int row = 0; row < counts_.outerSize(); ++row) {
    const Eigen::Index a = instance_.cluster_of(row);
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts_, row); it; ++it) {
      const double c = cell(a, instance_.cluster_of(it.col()));
      col_abs[it.col()] += std::fabs(it.value() - c) - c;
    }
  }
  return col_abs.maxCoeff();
}

double CenteredOperator::inf_norm() const {
  const Eigen::Index k = instance_.model.K;
  Eigen::VectorXd base(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    double acc = 0.0;
    for (Eigen::Index b = 0; b < k; ++b) {
      acc += static_cast<double>(instance_.cluster_sizes[b]) * cell(a, b);
    }
    base[a] = acc;
  }
  Eigen::VectorXd row_abs(n_);
  for (Eigen::Index a = 0; a < k; ++a) {
    row_abs.segment(instance_.offsets[a], instance_.cluster_sizes[a]).setConstant(base[a]);
  }
  for (int row = 0; row < counts_.outerSize(); ++row) {
    const Eigen::Index a = instance_.cluster_of(row);
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(counts_, row); it; ++it) {
      const double c = cell(a, instance_.cluster_of(it.col()));
      row_abs[it.row()] += std::fabs(it.value() - c) - c;
    }
  }
  return row_abs.maxCoeff();
}

CenteredOperator centered_operator(const PathCounts& trimmed, const BmcInstance& instance,
                                   std::int64_t T) {
  return CenteredOperator(trimmed, instance, T);
}

}  // namespace bmc
