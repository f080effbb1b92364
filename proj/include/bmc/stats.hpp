#pragma once

#include <Eigen/Core>
#include <utility>

namespace bmc::stats {

/// Sample mean and standard deviation (ddof = 1).
std::pair<double, double> mean_sd(const Eigen::VectorXd& samples);

/// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Regularized lower incomplete gamma function P(a, x).
double incomplete_gamma(double a, double x);

/// Quantile of Student's t distribution with `df` degrees of freedom.
double student_t_quantile(double p, double df);

/// Quantile of the chi-squared distribution with `df` degrees of freedom.
double chi_squared_quantile(double p, double df);

}  // namespace bmc::stats
