#include "linkdcm/numeric.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "linkdcm/errors.hpp"

namespace linkdcm {

namespace {

double pairwise_sum_range(const double* data, std::size_t n) {
    if (n <= 8) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += data[i];
        return sum;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_range(data, half) +
           pairwise_sum_range(data + half, n - half);
}

double interpolated_quantile(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double position = p * static_cast<double>(n - 1);
    const auto lower = static_cast<std::size_t>(position);
    const std::size_t upper = std::min(lower + 1, n - 1);
    const double weight = position - static_cast<double>(lower);
    return sorted[lower] + weight * (sorted[upper] - sorted[lower]);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_range(values.data(), values.size());
}

double softplus(double x) {
    if (x > 0.0) return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

double log_sigmoid(double x) { return -softplus(-x); }

double sigmoid(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double normal_two_sided_p(double t) { return std::erfc(std::abs(t) * M_SQRT1_2); }

double chi_squared_sf(double x, int dof) {
    if (dof < 1) throw DomainError("chi_squared_sf: dof must be >= 1");
    if (x <= 0.0) return 1.0;
    return boost::math::gamma_q(0.5 * static_cast<double>(dof), 0.5 * x);
}

FiveNumberSummary five_number_summary(std::span<const double> values) {
    if (values.empty()) throw DomainError("five_number_summary: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    FiveNumberSummary s;
    s.min = sorted.front();
    s.q1 = interpolated_quantile(sorted, 0.25);
    s.median = interpolated_quantile(sorted, 0.50);
    s.q3 = interpolated_quantile(sorted, 0.75);
    s.max = sorted.back();
    return s;
}

}  // namespace linkdcm
