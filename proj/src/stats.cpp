#include "bmc/stats.hpp"

#include <cmath>
#include <limits>

#include "bmc/errors.hpp"

namespace bmc::stats {
namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

std::pair<double, double> mean_sd(const Eigen::VectorXd& samples) {
  const auto r = samples.size();
  if (r < 1) throw TooFewSamples("mean_sd: empty sample");
  const double mean = samples.mean();
  if (r < 2) return {mean, 0.0};
  const double ss = (samples.array() - mean).square().sum();
  return {mean, std::sqrt(ss / static_cast<double>(r - 1))};
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double incomplete_gamma(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) {
    // Series representation.
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // Continued fraction for the upper tail (modified Lentz).
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return 1.0 - h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double student_t_quantile(double p, double df) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("student_t_quantile: p outside (0,1)");
  if (!(df > 0.0)) throw InvalidArgument("student_t_quantile: df must be positive");
  if (p == 0.5) return 0.0;
  const bool upper = p > 0.5;
  const double pp = upper ? p : 1.0 - p;

  // CDF(t) = 1 - I_{df/(df+t^2)}(df/2, 1/2) / 2 for t >= 0; bisect on t.
  const auto cdf = [df](double t) {
    return 1.0 - 0.5 * incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
  };
  double lo = 0.0, hi = 1.0;
  while (cdf(hi) < pp && hi < 1e12) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < pp) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-14 * (1.0 + hi)) break;
  }
  const double t = 0.5 * (lo + hi);
  return upper ? t : -t;
}

double chi_squared_quantile(double p, double df) {
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("chi_squared_quantile: p outside [0,1)");
  if (!(df > 0.0)) throw InvalidArgument("chi_squared_quantile: df must be positive");
  if (p == 0.0) return 0.0;
  const auto cdf = [df](double x) { return incomplete_gamma(df / 2.0, x / 2.0); };
  double lo = 0.0, hi = df + 10.0;
  while (cdf(hi) < p && hi < 1e12) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-13 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bmc::stats
