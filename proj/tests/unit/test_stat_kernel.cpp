#include <doctest.h>

#include <cmath>

#include "marsrank/error.hpp"
#include "marsrank/stat_kernel.hpp"
#include "oracles.hpp"

#if defined(MARSRANK_HAVE_BOOST_MATH)
#include <boost/math/special_functions/gamma.hpp>
#endif

using namespace marsrank;
using namespace marsrank::stats;

TEST_CASE("Alpha validates its range") {
  CHECK_NOTHROW(Alpha(0.05));
  CHECK_THROWS_AS(Alpha(0.0), Error);
  CHECK_THROWS_AS(Alpha(1.0), Error);
  CHECK_THROWS_AS(Alpha(std::nan("")), Error);
}

TEST_CASE("chi2_sf closed forms at df = 2") {
  CHECK(chi2_sf(0.0, 2) == 1.0);
  CHECK(chi2_sf(60.0, 2) == doctest::Approx(std::exp(-30.0)).epsilon(1e-15));
  CHECK(chi2_sf(35.0, 2) == doctest::Approx(std::exp(-17.5)).epsilon(1e-15));
  for (double x : {0.1, 1.0, 5.0, 20.0, 100.0, 200.0}) {
    CHECK(chi2_sf(x, 4) == doctest::Approx(std::exp(-x / 2) * (1 + x / 2)).epsilon(1e-14));
  }
}

TEST_CASE("chi2_sf frozen high-precision references") {
  // mpmath gammainc at 50 digits (tests/oracle/mars_oracle.py).
  CHECK(std::fabs(chi2_sf(3.0, 1) - 0.083264516663550401855) < 1e-14);
  CHECK(std::fabs(chi2_sf(7.5, 3) - 0.057558451972636406967) < 1e-14);
  CHECK(std::fabs(chi2_sf(1.2, 5) - 0.94487736500212191941) < 1e-14);
  CHECK(std::fabs(chi2_sf(30.0, 7) - 0.000094959725081341837597) < 1e-15);
  CHECK(chi2_sf(150.0, 1) == doctest::Approx(1.7336432457178263627e-34).epsilon(1e-12));
  CHECK(chi2_sf(200.0, 9) == doctest::Approx(3.3129923939095531364e-38).epsilon(1e-12));
}

TEST_CASE("closed-form and incomplete-gamma routes agree") {
  for (int df = 1; df <= 60; ++df) {
    for (double x = 0.05; x <= 200.0; x *= 1.37) {
      const double q = regularized_gamma_q(0.5 * df, 0.5 * x);
      CHECK(std::fabs(chi2_sf(x, df) - q) < 1e-10);
    }
  }
  // df beyond the closed-form range goes through the general routine.
  CHECK(chi2_sf(150.0, 150) == doctest::Approx(regularized_gamma_q(75.0, 75.0)));
}

#if defined(MARSRANK_HAVE_BOOST_MATH)
TEST_CASE("chi2_sf matches Boost.Math across the grid") {
  for (int df = 1; df <= 120; df += 7) {
    for (double x = 0.01; x <= 200.0; x *= 1.5) {
      const double expected = boost::math::gamma_q(0.5 * df, 0.5 * x);
      CHECK(std::fabs(chi2_sf(x, df) - expected) < 1e-10);
    }
  }
}
#endif

TEST_CASE("chi2_sf domain errors and monotonicity") {
  CHECK_THROWS_AS(chi2_sf(-1.0, 2), Error);
  CHECK_THROWS_AS(chi2_sf(1.0, 0), Error);
  for (int df : {1, 2, 3, 7, 19, 101}) {
    double previous = 1.0;
    for (double x = 0.0; x <= 200.0; x += 0.5) {
      const double q = chi2_sf(x, df);
      CHECK(q <= previous);
      CHECK(q >= 0.0);
      previous = q;
    }
  }
}

TEST_CASE("normal_sf") {
  CHECK(normal_sf(0.0) == 0.5);
  CHECK(std::fabs(normal_sf(5.6774) - 6.83787126570504e-9) < 1e-12);
  double previous = 1.0;
  for (double z = -8.0; z <= 8.0; z += 0.01) {
    CHECK(std::fabs(normal_sf(z) + normal_sf(-z) - 1.0) < 1e-15);
    if (z > -5.0) CHECK(normal_sf(z) < previous);
    CHECK(normal_sf(z) <= previous);
    previous = normal_sf(z);
  }
}

TEST_CASE("inverse_normal_cdf") {
  CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0));
  CHECK(std::fabs(inverse_normal_cdf(0.975) - 1.95996398454005) < 1e-9);
  CHECK(std::fabs(inverse_normal_cdf(0.975) - oracle::bisect_inverse_normal(0.975)) < 1e-9);
  CHECK_THROWS_AS(inverse_normal_cdf(0.0), Error);
  CHECK_THROWS_AS(inverse_normal_cdf(1.0), Error);
  for (double u = 0.001; u < 0.999; u += 0.0005) {
    CHECK(std::fabs(inverse_normal_cdf(u) + inverse_normal_cdf(1.0 - u)) < 1e-9);
    CHECK(std::fabs(normal_cdf(inverse_normal_cdf(u)) - u) < 1e-8);
    CHECK(std::fabs(inverse_normal_cdf(u) - oracle::bisect_inverse_normal(u)) < 1e-9);
  }
  for (double u : {1e-300, 1e-20, 1e-10, 1e-5}) {
    CHECK(std::fabs(inverse_normal_cdf(u) - oracle::bisect_inverse_normal(u)) < 1e-9);
  }
}

TEST_CASE("nemenyi_q table") {
  CHECK(nemenyi_q(2, Alpha(0.05)) == 1.960);
  CHECK(nemenyi_q(3, Alpha(0.05)) == 2.343);
  CHECK(nemenyi_q(8, Alpha(0.05)) == 3.031);
  CHECK(nemenyi_q(2, Alpha(0.10)) == 1.645);
  CHECK(nemenyi_q(10, Alpha(0.10)) == 2.920);
  for (double a : {0.05, 0.10}) {
    for (std::size_t k = 3; k <= kNemenyiMaxK; ++k) {
      CHECK(nemenyi_q(k, Alpha(a)) > nemenyi_q(k - 1, Alpha(a)));
    }
  }
  // k = 2 is the two-sided normal quantile.
  CHECK(nemenyi_q(2, Alpha(0.05)) == doctest::Approx(inverse_normal_cdf(0.975)).epsilon(1e-3));

  const auto code = [](std::size_t k, double a) {
    try {
      (void)nemenyi_q(k, Alpha(a));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code(1, 0.05) == ErrorCode::UnsupportedK);
  CHECK(code(21, 0.05) == ErrorCode::UnsupportedK);
  CHECK(code(3, 0.2) == ErrorCode::UnsupportedAlpha);
}
