#pragma once

#include <cstddef>
#include <vector>

namespace tubal {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile, Wichura's algorithm AS 241 (PPND16).
// Accurate to about 1e-15 over p in (0,1); throws on p outside (0,1).
double normal_quantile(double p);

// One-sample Kolmogorov-Smirnov distance against the standard normal CDF.
double ks_normal(std::vector<double> samples);

struct SampleMoments {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation (n-1 divisor)
};

SampleMoments sample_moments(const std::vector<double>& xs);

double median(std::vector<double> xs);

// Pearson correlation; returns 0 when either side is constant.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace tubal
