#pragma once

#include <cstdint>

namespace cardylab {

struct WilsonInterval {
  double p_hat;
  double lo;
  double hi;
};

/// 95% Wilson score interval. Well-behaved near p = 0 and p = 1.
WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials);

/// Standard deviation implied by the 95% Wilson half-width.
inline double wilson_sigma(const WilsonInterval& w) { return (w.hi - w.lo) / (2.0 * 1.959963984540054); }

/// 99% chi-square quantile; exact table for small dof, Wilson-Hilferty above.
double chi2_quantile99(int dof);

struct LinearFit {
  double slope;
  double intercept;
  double r_squared;
};

LinearFit least_squares(const double* x, const double* y, int n);

}  // namespace cardylab
