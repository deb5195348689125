#pragma once

#include <span>
#include <vector>

namespace linkdcm {

// Pairwise (tree) summation. Deterministic for a fixed input order and much
// lower rounding error than sequential accumulation on long sums.
double pairwise_sum(std::span<const double> values);

// log(1 + exp(x)) without overflow for large |x|.
double softplus(double x);

// log(sigmoid(x)) = -softplus(-x).
double log_sigmoid(double x);

// Logistic CDF, overflow-safe for |x| up to ~1e308.
double sigmoid(double x);

// Standard normal CDF.
double normal_cdf(double x);

// Two-sided normal tail probability 2 * (1 - Phi(|t|)).
double normal_two_sided_p(double t);

// Upper tail of the chi-squared distribution with `dof` degrees of freedom.
double chi_squared_sf(double x, int dof);

struct FiveNumberSummary {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
};

// Order statistics with linearly interpolated quartiles. Input order does not
// matter; the input is copied and sorted. Requires a non-empty input.
FiveNumberSummary five_number_summary(std::span<const double> values);

}  // namespace linkdcm
