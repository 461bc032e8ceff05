#include "cperm/moments.hpp"

#include <algorithm>
#include <thread>

#include "cperm/blocks.hpp"
#include "cperm/enumerate.hpp"

namespace cperm {

Domain Domain::group(int n, int r) {
    if (n < 1 || r < 1) throw invalid_argument_error("need n >= 1 and r >= 1");
    Domain d;
    d.kind = Kind::Group;
    d.n = n;
    d.r = r;
    return d;
}

Domain Domain::conjugacy_class(RPartition lambda) {
    Domain d;
    d.kind = Kind::Class;
    d.n = lambda.n;
    d.r = lambda.r;
    d.lambda = std::move(lambda);
    return d;
}

Domain Domain::color_orbit(std::vector<int> colors, int r) {
    if (colors.empty()) throw invalid_argument_error("orbit needs at least one color");
    for (int c : colors)
        if (c < 0 || c >= r) throw invalid_argument_error("orbit color out of range");
    Domain d;
    d.kind = Kind::ColorOrbit;
    d.n = static_cast<int>(colors.size());
    d.r = r;
    d.colors = std::move(colors);
    return d;
}

Int Domain::size() const {
    switch (kind) {
        case Kind::Group: return group_order(n, r);
        case Kind::Class: return class_size(lambda);
        case Kind::ColorOrbit:
        default: return factorial(static_cast<unsigned long>(n));
    }
}

Int Domain::work() const {
    switch (kind) {
        case Kind::Group: return group_order(n, r);
        case Kind::Class:
            return n <= 8 ? group_order(n, r) : class_size(lambda);
        case Kind::ColorOrbit:
        default: return factorial(static_cast<unsigned long>(n));
    }
}

std::string Domain::describe() const {
    switch (kind) {
        case Kind::Group:
            return "group n=" + std::to_string(n) + " r=" + std::to_string(r);
        case Kind::Class:
            return "class " + lambda.to_string() + " (n=" + std::to_string(n) +
                   " r=" + std::to_string(r) + ")";
        case Kind::ColorOrbit:
        default: {
            std::string out = "orbit (";
            for (std::size_t i = 0; i < colors.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(colors[i]);
            }
            return out + ") r=" + std::to_string(r);
        }
    }
}

void Domain::for_each(const std::function<void(const ColoredPermutation&)>& f) const {
    switch (kind) {
        case Kind::Group: for_each_element(n, r, f); return;
        case Kind::Class: for_each_in_class(lambda, f); return;
        case Kind::ColorOrbit: for_each_in_color_orbit(colors, r, f); return;
    }
}

namespace {

std::vector<int> dedupe_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_cap(const Int& work, std::uint64_t cap) {
    if (work > Int(static_cast<unsigned long>(cap)))
        throw infeasible_error("enumeration of " + work.get_str() +
                               " elements exceeds the cap of " + std::to_string(cap));
}

}  // namespace

Rational expect_X_product_group(std::vector<int> indices, int n, int r) {
    indices = dedupe_sorted(std::move(indices));
    if (indices.empty()) return 1;
    for (int a : indices)
        if (a < 1 || a > n) throw invalid_argument_error("index outside [n]");
    const Blocks blocks = induced_blocks(indices, n);
    Rational value(1, 1);
    for (const auto& [lo, hi] : blocks.intervals) {
        Rational f(1);
        f /= Rational(factorial(static_cast<unsigned long>(hi - lo + 1)));
        value *= f;
    }
    if (indices.back() == n) {
        const int tail = blocks.size_of_block_containing(n);
        value *= rational_pow(make_rational(r - 1, r), static_cast<unsigned long>(tail));
    }
    return value;
}

Rational expect_X_product_class(std::vector<int> indices, const RPartition& lambda) {
    indices = dedupe_sorted(std::move(indices));
    const int k = static_cast<int>(indices.size());
    if (!has_no_short_cycles(lambda, 2 * k))
        throw short_cycle_error("class has a cycle of length <= " + std::to_string(2 * k) +
                                "; the product formula does not apply");
    return expect_X_product_group(std::move(indices), lambda.n, lambda.r);
}

namespace {

Rational expect_xy_reduced(std::vector<int> xs, std::map<int, int> ys, int n, int r) {
    // Essential positions of the X part.
    std::vector<char> essential(static_cast<std::size_t>(n) + 2, 0);
    for (int a : xs) {
        essential[static_cast<std::size_t>(a)] = 1;
        essential[static_cast<std::size_t>(a) + 1] = 1;
    }

    // Y factors away from every essential position are independent colors.
    for (auto it = ys.begin(); it != ys.end(); ++it) {
        if (!essential[static_cast<std::size_t>(it->first)]) {
            std::map<int, int> rest = ys;
            rest.erase(it->first);
            return make_rational(1, r) * expect_xy_reduced(std::move(xs), std::move(rest), n, r);
        }
    }

    // Expand any essential position that carries no Y factor over all colors.
    for (int p = 1; p <= n; ++p) {
        if (!essential[static_cast<std::size_t>(p)] || ys.count(p)) continue;
        Rational sum = 0;
        for (int c = 0; c < r; ++c) {
            std::map<int, int> extended = ys;
            extended[p] = c;
            sum += expect_xy_reduced(xs, std::move(extended), n, r);
        }
        return sum;
    }

    // Every essential position now has a pinned color: a rise in colors
    // makes the descent impossible, a strict fall makes it automatic.
    for (std::size_t h = 0; h < xs.size(); ++h) {
        const int a = xs[h];
        const int ca = ys.at(a);
        const int cb = ys.at(a + 1);
        if (ca < cb) return 0;
        if (ca > cb) {
            std::vector<int> rest = xs;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(h));
            return expect_xy_reduced(std::move(rest), std::move(ys), n, r);
        }
    }

    // Colors are constant along each block; each Young orbit of size
    // prod |B_i|! contains exactly one element descending at all of xs.
    Rational value = rational_pow(make_rational(1, r), ys.size());
    if (!xs.empty()) {
        const Blocks blocks = induced_blocks(xs, n);
        for (const auto& [lo, hi] : blocks.intervals) {
            Rational f(1);
            f /= Rational(factorial(static_cast<unsigned long>(hi - lo + 1)));
            value *= f;
        }
    }
    return value;
}

// Validates and normalizes the factors; returns nullopt when two Y factors
// contradict each other (the product is identically zero).
std::optional<std::pair<std::vector<int>, std::map<int, int>>> normalize_xy(
    const std::vector<int>& x_indices, const std::vector<std::pair<int, int>>& y_factors,
    int n, int r) {
    for (int a : x_indices)
        if (a < 1 || a >= n) throw invalid_argument_error("X index must lie in [n-1]");
    std::map<int, int> ys;
    for (const auto& [pos, color] : y_factors) {
        if (pos < 1 || pos > n) throw invalid_argument_error("Y index outside [n]");
        if (color < 0 || color >= r) throw invalid_argument_error("Y color out of range");
        const auto [it, inserted] = ys.emplace(pos, color);
        if (!inserted && it->second != color) return std::nullopt;
    }
    return std::make_pair(dedupe_sorted(x_indices), std::move(ys));
}

}  // namespace

Rational expect_XY_product(std::vector<int> x_indices,
                           std::vector<std::pair<int, int>> y_factors, int n, int r) {
    auto normalized = normalize_xy(x_indices, y_factors, n, r);
    if (!normalized) return 0;
    return expect_xy_reduced(std::move(normalized->first), std::move(normalized->second), n, r);
}

Rational expect_XY_product_class(std::vector<int> x_indices,
                                 std::vector<std::pair<int, int>> y_factors,
                                 const RPartition& lambda) {
    auto normalized = normalize_xy(x_indices, y_factors, lambda.n, lambda.r);
    if (!normalized) return 0;
    const int j = static_cast<int>(normalized->first.size());
    const int m = 2 * j + static_cast<int>(normalized->second.size());
    if (!has_no_short_cycles(lambda, m))
        throw short_cycle_error("class has a cycle of length <= " + std::to_string(m) +
                                "; the product formula does not apply");
    return expect_xy_reduced(std::move(normalized->first), std::move(normalized->second),
                             lambda.n, lambda.r);
}

namespace {

Int pow_value(long value, int k) {
    Int out = 1;
    for (int i = 0; i < k; ++i) out *= value;
    return out;
}

// Sharded sweep over the whole group with an associative merge in shard
// order; the result does not depend on the number of worker threads.
template <class Shard, class Merge>
void group_sweep(int n, int /*r*/, int jobs, Shard&& shard_fn, Merge&& merge) {
    const int shards = std::max(1, std::min(jobs, n));
    if (shards == 1) {
        shard_fn(0, 1);
        merge();
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(shards));
    for (int s = 0; s < shards; ++s)
        workers.emplace_back([&, s] { shard_fn(s, shards); });
    for (auto& w : workers) w.join();
    merge();
}

}  // namespace

Rational moment_enumerated(const Statistic& stat, const Domain& domain, int k,
                           const TotalOrder& order, std::uint64_t cap, int jobs) {
    if (k < 0) throw invalid_argument_error("moment order must be >= 0");
    check_cap(domain.work(), cap);

    if (domain.kind == Domain::Kind::Group && jobs > 1) {
        const int shards = std::max(1, std::min(jobs, domain.n));
        std::vector<Int> sums(static_cast<std::size_t>(shards), Int(0));
        Int total = 0;
        group_sweep(
            domain.n, domain.r, jobs,
            [&](int s, int count) {
                for_each_element_shard(domain.n, domain.r, s, count,
                                       [&](const ColoredPermutation& x) {
                                           sums[static_cast<std::size_t>(s)] +=
                                               pow_value(stat.eval(x, order), k);
                                       });
            },
            [&] {
                for (const auto& s : sums) total += s;
            });
        return Rational(total) / Rational(domain.size());
    }

    Int sum = 0;
    Int count = 0;
    domain.for_each([&](const ColoredPermutation& x) {
        sum += pow_value(stat.eval(x, order), k);
        ++count;
    });
    if (count == 0) throw error("empty domain");
    return Rational(sum) / Rational(count);
}

QPolynomial gf_distribution(const Statistic& stat, const Domain& domain,
                            const TotalOrder& order, std::uint64_t cap, int jobs) {
    check_cap(domain.work(), cap);
    const std::size_t width =
        static_cast<std::size_t>(stat.max_value(domain.n, domain.r)) + 1;

    if (domain.kind == Domain::Kind::Group && jobs > 1) {
        const int shards = std::max(1, std::min(jobs, domain.n));
        std::vector<std::vector<Int>> counts(static_cast<std::size_t>(shards),
                                             std::vector<Int>(width, Int(0)));
        std::vector<Int> merged(width, Int(0));
        group_sweep(
            domain.n, domain.r, jobs,
            [&](int s, int count) {
                for_each_element_shard(
                    domain.n, domain.r, s, count, [&](const ColoredPermutation& x) {
                        ++counts[static_cast<std::size_t>(s)]
                                [static_cast<std::size_t>(stat.eval(x, order))];
                    });
            },
            [&] {
                for (const auto& shard : counts)
                    for (std::size_t d = 0; d < width; ++d) merged[d] += shard[d];
            });
        return QPolynomial(std::move(merged));
    }

    std::vector<Int> counts(width, Int(0));
    domain.for_each([&](const ColoredPermutation& x) {
        ++counts[static_cast<std::size_t>(stat.eval(x, order))];
    });
    return QPolynomial(std::move(counts));
}

Eq1Report verify_eq1(int n, int r, int depth, std::uint64_t cap, int jobs) {
    if (depth < n) throw invalid_argument_error("series depth must be >= n");
    Eq1Report report;
    report.n = n;
    report.r = r;
    report.depth = depth;
    const QPolynomial des_gf =
        gf_distribution(Statistic::des(), Domain::group(n, r), TotalOrder::descent(), cap, jobs);
    for (int i = 0; i <= depth; ++i) {
        // Coefficient of q^i in gf(des) / (1-q)^{n+1}.
        Int lhs = 0;
        for (int d = 0; d <= std::min(i, des_gf.degree()); ++d) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + i - d),
                         static_cast<unsigned long>(n));
            lhs += des_gf.coeff(d) * binom;
        }
        const Int rhs = int_pow(Int(static_cast<long>(i) * r + 1), static_cast<unsigned long>(n));
        if (lhs != rhs) report.mismatched_degrees.push_back(i);
    }
    report.ok = report.mismatched_degrees.empty();
    return report;
}

Eq2Report verify_eq2(int n, int r, std::uint64_t cap, int jobs) {
    Eq2Report report;
    report.n = n;
    report.r = r;
    report.lhs =
        gf_distribution(Statistic::fmaj(), Domain::group(n, r), TotalOrder::descent(), cap, jobs);
    report.rhs = q_integer_product(n, r);
    report.ok = report.lhs == report.rhs;
    return report;
}

std::pair<std::map<RPartition, Rational>, Rational> class_moments_sweep(
    int n, int r, int k, const Statistic& stat, const TotalOrder& order) {
    std::map<RPartition, std::pair<Int, Int>> per_class;  // sum, count
    Int group_sum = 0;
    for_each_element(n, r, [&](const ColoredPermutation& x) {
        const Int term = pow_value(stat.eval(x, order), k);
        group_sum += term;
        auto& [sum, count] = per_class[cycle_type(x)];
        sum += term;
        ++count;
    });
    std::map<RPartition, Rational> moments;
    for (const auto& [lambda, acc] : per_class)
        moments.emplace(lambda, Rational(acc.first) / Rational(acc.second));
    return {std::move(moments), Rational(group_sum) / Rational(group_order(n, r))};
}

Theorem1Report verify_theorem1(const RPartition& lambda, int k, const Statistic& stat,
                               std::uint64_t cap, int jobs) {
    if (stat.kind != Statistic::Kind::Des && stat.kind != Statistic::Kind::Fmaj &&
        stat.kind != Statistic::Kind::Maj)
        throw invalid_argument_error("theorem comparison supports des, maj and fmaj");
    Theorem1Report report;
    report.lambda = lambda;
    report.stat = stat.name();
    report.k = k;
    report.hypothesis = has_no_short_cycles(lambda, 2 * k);
    report.class_moment =
        moment_enumerated(stat, Domain::conjugacy_class(lambda), k, TotalOrder::descent(), cap, jobs);
    report.group_moment = moment_enumerated(stat, Domain::group(lambda.n, lambda.r), k,
                                            TotalOrder::descent(), cap, jobs);
    report.equal = report.class_moment == report.group_moment;
    if (stat.kind == Statistic::Kind::Maj) {
        report.symmetric_group_moment = moment_enumerated(
            stat, Domain::group(lambda.n, 1), k, TotalOrder::descent(), cap, jobs);
        report.equal = report.equal && report.class_moment == *report.symmetric_group_moment;
    }
    return report;
}

}  // namespace cperm
