#pragma once

namespace ntarp {

// Regularized incomplete beta function I_x(a, b), the Beta(a, b) CDF.
// Evaluated with the modified Lentz continued fraction, switching to
// 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2). Throws ConfigError
// outside 0 <= x <= 1, a > 0, b > 0 and std::runtime_error if the fraction
// has not converged after 300 terms.
double regularized_incomplete_beta(double x, double a, double b);

}  // namespace ntarp
