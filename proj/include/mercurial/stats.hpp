#pragma once

#include <span>

namespace mercurial {

/// Standard normal CDF.
double normal_cdf(double x);

/// Asymptotic Kolmogorov survival function Q(x) = 2 sum_{j>=1} (-1)^{j-1}
/// exp(-2 j^2 x^2).
double kolmogorov_q(double x);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
};

MeanSd mean_sd(std::span<const double> values);

/// Two-sided KS test of the sample against a normal with the sample's own
/// moments. Returns the p-value (Stephens' small-sample correction of the
/// asymptotic distribution). A degenerate sample (sd == 0) returns 0.
double ks_normal_p(std::span<const double> values);

/// True when the sample is compatible with the fitted normal at level alpha.
bool ks_normal_pass(std::span<const double> values, double alpha = 0.05);

}  // namespace mercurial
