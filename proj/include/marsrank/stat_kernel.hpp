#pragma once

#include <cstddef>

namespace marsrank {

// Significance level in (0, 1). Construction validates the range; table-backed
// consumers (nemenyi_q) further restrict the value.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const noexcept { return value_; }
  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

namespace stats {

// Regularized upper incomplete gamma Q(a, x) by series (x < a + 1) or
// Lentz continued fraction (x >= a + 1).
double regularized_gamma_q(double a, double x);

// P(X >= x) for X ~ chi-squared(df). Uses the finite closed-form sums for
// integer and half-integer shape when df <= 100, the general routine otherwise.
double chi2_sf(double x, int df);

double normal_sf(double z);
double normal_cdf(double z);

// Acklam's rational approximation followed by one Halley step against erfc.
double inverse_normal_cdf(double u);

// Nemenyi critical constant q_{alpha,k,inf} / sqrt(2) for 2 <= k <= 20,
// alpha in {0.05, 0.10}.
double nemenyi_q(std::size_t k, Alpha alpha);

inline constexpr std::size_t kNemenyiMaxK = 20;

}  // namespace stats
}  // namespace marsrank
