#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cperm/conjugacy.hpp"
#include "cperm/rational.hpp"
#include "cperm/stats.hpp"

namespace cperm {

// Exact mean and variance of des, maj or fmaj on the whole group:
//   des:  mu = (rn + r - 2) / (2r),        sigma^2 = (n + 1) / 12
//   maj:  mu = n(n - 1) / 4,               sigma^2 = n(2n^2 + 3n - 5) / 72
//   fmaj: mu = n(rn + r - 2) / 4,          sigma^2 = (2r^2n^3 + 3r^2n^2 + (r^2 - 6)n) / 72
struct TheoreticalMoments {
    std::string stat;
    int n = 0;
    int r = 1;
    Rational mu;
    Rational sigma_sq;
};

TheoreticalMoments theoretical_moments(const Statistic& stat, int n, int r);

// Standard normal CDF via the C library erfc; absolute error well below 1e-9.
double normal_cdf(double x);

// Sup distance between the empirical CDF of the samples and the standard
// normal CDF.
double ks_distance(std::vector<double> samples);

struct SampleSummary {
    std::string stat;
    RPartition lambda;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    double raw_mean = 0;
    double raw_variance = 0;
    double mean = 0;      // of the standardized samples
    double variance = 0;  // of the standardized samples
    double ks = 0;
    Rational mu;        // standardization constants
    Rational sigma_sq;
    // (bin center, count) over standardized values when bins > 0.
    std::vector<std::pair<double, double>> histogram;
};

// Draws `count` independent uniform samples of the class (sample i comes
// from RNG stream i, so any parallel split reproduces the same values),
// standardizes by the group-level moments, and summarizes.
SampleSummary mc_class_sample(const Statistic& stat, const RPartition& lambda,
                              std::uint64_t count, std::uint64_t seed, int bins = 0);

}  // namespace cperm
