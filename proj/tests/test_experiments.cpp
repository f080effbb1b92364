#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bmc/errors.hpp"
#include "bmc/experiments.hpp"
#include "bmc/stats.hpp"
#include "oracles.hpp"

using namespace bmc;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("path length follows round(n (ln n)^a)") {
  CHECK(regime_path_length(10000, 1.0) == 92103);
  CHECK(regime_path_length(2000, 1.0) == 15202);  // 15201.80 rounds up
  CHECK(regime_path_length(500, 0.0) == 500);
  CHECK(regime_path_length(500, -0.5) == 201);
  CHECK_THROWS_AS(regime_path_length(2, 1.0), InvalidArgument);
}

TEST_CASE("quantile plumbing") {
  // Textbook values: t with 1 dof is the Cauchy quantile tan(0.475 pi).
  CHECK(stats::student_t_quantile(0.975, 1.0) == doctest::Approx(12.7062047362).epsilon(1e-9));
  CHECK(stats::student_t_quantile(0.975, 47.0) == doctest::Approx(2.0117405).epsilon(1e-6));
  CHECK(stats::student_t_quantile(0.025, 47.0) ==
        doctest::Approx(-2.0117405).epsilon(1e-6));
  CHECK(stats::chi_squared_quantile(0.999, 29.0) == doctest::Approx(58.3012).epsilon(1e-5));
}

TEST_CASE("confidence intervals") {
  CHECK(confidence_interval({1.0, 1.0, 1.0, 1.0}) == std::pair{1.0, 0.0});

  const auto [mean, hw] = confidence_interval({0.0, 2.0});
  CHECK(mean == doctest::Approx(1.0));
  // sd = sqrt(2), hw = t_{0.975,1} sd / sqrt(2) = 12.7062...
  CHECK(hw == doctest::Approx(12.7062047362).epsilon(1e-9));

  const auto [neg_mean, neg_hw] = confidence_interval({0.0, -2.0});
  CHECK(neg_mean == doctest::Approx(-1.0));
  CHECK(neg_hw == doctest::Approx(hw).epsilon(1e-12));

  CHECK_THROWS_AS(confidence_interval({1.0}), TooFewSamples);
  CHECK_THROWS_AS(confidence_interval({1.0, 2.0}, 1.5), InvalidArgument);
}

TEST_CASE("run_regime determinism and aggregation") {
  const ClusterModel model = oracle::study_model();
  RegimeSpec spec;
  spec.exponent = 1.0;
  spec.n_grid = {60, 90};
  spec.replications = 4;
  spec.base_seed = 2026;

  const auto serial = run_regime(model, spec, 1);
  const auto threaded = run_regime(model, spec, 2);
  REQUIRE(serial.size() == 2);
  for (std::size_t cell = 0; cell < 2; ++cell) {
    REQUIRE(serial[cell].samples.size() == 4);
    for (std::size_t rep = 0; rep < 4; ++rep) {
      CHECK(serial[cell].samples[rep] == threaded[cell].samples[rep]);
    }
    CHECK(serial[cell].T == regime_path_length(serial[cell].n, 1.0));
  }

  // With two replications the mean is exactly the average.
  RegimeSpec two = spec;
  two.n_grid = {60};
  two.replications = 2;
  const auto pair_stats = run_regime(model, two, 1);
  CHECK(pair_stats[0].mean ==
        doctest::Approx(0.5 * (pair_stats[0].samples[0] + pair_stats[0].samples[1]))
            .epsilon(1e-15));

  RegimeSpec bad = spec;
  bad.replications = 1;
  CHECK_THROWS_AS(run_regime(model, bad, 1), TooFewSamples);
}

TEST_CASE("csv emission") {
  SUBCASE("empty input gives a header-only file") {
    std::ostringstream out;
    emit_csv({}, out);
    CHECK(out.str() == "regime_a,n,T,replications,mean,ci_halfwidth,min,max\n");
  }

  SUBCASE("rows sort by regime then n and parse back") {
    ReplicationStats cell_a;
    cell_a.exponent = 1.0;
    cell_a.n = 500;
    cell_a.T = 3107;
    cell_a.samples = {2.0, 2.25};
    cell_a.mean = 2.125;
    cell_a.ci_halfwidth = 0.5;
    ReplicationStats cell_b = cell_a;
    cell_b.exponent = -0.5;
    cell_b.n = 1000;

    std::ostringstream out;
    emit_csv({cell_a, cell_b}, out);
    std::istringstream in(out.str());
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(row1.rfind("-0.5,1000,", 0) == 0);
    CHECK(row2.rfind("1,500,", 0) == 0);

    double a = 0, mean = 0, hw = 0, lo = 0, hi = 0;
    long long n = 0, t = 0;
    unsigned long reps = 0;
    std::replace(row2.begin(), row2.end(), ',', ' ');
    std::istringstream fields(row2);
    fields >> a >> n >> t >> reps >> mean >> hw >> lo >> hi;
    CHECK(a == 1.0);
    CHECK(n == 500);
    CHECK(t == 3107);
    CHECK(reps == 2);
    CHECK(mean == 2.125);
    CHECK(hw == 0.5);
    CHECK(lo == 2.0);
    CHECK(hi == 2.25);
  }

  SUBCASE("per-replication companion file") {
    ReplicationStats cell;
    cell.exponent = 0.5;
    cell.n = 40;
    cell.T = 77;
    cell.samples = {1.5, 2.5, 3.5};
    std::ostringstream out;
    emit_samples_csv({cell}, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "regime_a,n,replication,value");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 3);
  }
}

TEST_SUITE_END();
