#include "cperm/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace cperm {

TheoreticalMoments theoretical_moments(const Statistic& stat, int n, int r) {
    if (n < 1 || r < 1) throw invalid_argument_error("need n >= 1 and r >= 1");
    const long ln = n;
    const long lr = r;
    TheoreticalMoments out;
    out.stat = stat.name();
    out.n = n;
    out.r = r;
    switch (stat.kind) {
        case Statistic::Kind::Des:
            out.mu = make_rational(lr * ln + lr - 2, 2 * lr);
            out.sigma_sq = make_rational(ln + 1, 12);
            break;
        case Statistic::Kind::Maj:
            out.mu = make_rational(ln * (ln - 1), 4);
            out.sigma_sq = make_rational(ln * (2 * ln * ln + 3 * ln - 5), 72);
            break;
        case Statistic::Kind::Fmaj:
            out.mu = make_rational(ln * (lr * ln + lr - 2), 4);
            out.sigma_sq =
                make_rational(2 * lr * lr * ln * ln * ln + 3 * lr * lr * ln * ln + (lr * lr - 6) * ln, 72);
            break;
        default:
            throw invalid_argument_error("moment formulas cover des, maj and fmaj");
    }
    return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_distance(std::vector<double> samples) {
    if (samples.empty()) throw invalid_argument_error("ks distance needs at least one sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double sup = 0;
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        // The empirical CDF jumps from i/n to j/n at this value.
        const double phi = normal_cdf(samples[i]);
        sup = std::max(sup, std::abs(phi - static_cast<double>(i) / n));
        sup = std::max(sup, std::abs(phi - static_cast<double>(j) / n));
        i = j;
    }
    return sup;
}

SampleSummary mc_class_sample(const Statistic& stat, const RPartition& lambda,
                              std::uint64_t count, std::uint64_t seed, int bins) {
    if (count < 1) throw invalid_argument_error("need at least one sample");
    const TheoreticalMoments tm = theoretical_moments(stat, lambda.n, lambda.r);
    const double mu = tm.mu.get_d();
    const double sigma = std::sqrt(tm.sigma_sq.get_d());

    SampleSummary out;
    out.stat = stat.name();
    out.lambda = lambda;
    out.count = count;
    out.seed = seed;
    out.mu = tm.mu;
    out.sigma_sq = tm.sigma_sq;

    const SplitRng root(seed);
    std::vector<double> standardized;
    standardized.reserve(static_cast<std::size_t>(count));
    double raw_mean = 0, raw_m2 = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        SplitRng rng = root.split(i);
        const ColoredPermutation x = sample_class(lambda, rng);
        const double value = static_cast<double>(stat.eval(x));
        const double delta = value - raw_mean;
        raw_mean += delta / static_cast<double>(i + 1);
        raw_m2 += delta * (value - raw_mean);
        standardized.push_back((value - mu) / sigma);
    }
    out.raw_mean = raw_mean;
    out.raw_variance = count > 1 ? raw_m2 / static_cast<double>(count - 1) : 0.0;
    out.mean = (raw_mean - mu) / sigma;
    out.variance = out.raw_variance / (sigma * sigma);
    out.ks = ks_distance(standardized);

    if (bins > 0) {
        const double lo = -5.0, hi = 5.0;
        const double width = (hi - lo) / bins;
        std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
        for (double v : standardized) {
            const int b = std::clamp(static_cast<int>((v - lo) / width), 0, bins - 1);
            counts[static_cast<std::size_t>(b)] += 1.0;
        }
        for (int b = 0; b < bins; ++b)
            out.histogram.emplace_back(lo + (b + 0.5) * width, counts[static_cast<std::size_t>(b)]);
    }
    return out;
}

}  // namespace cperm
