#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cperm/conjugacy.hpp"
#include "cperm/qpoly.hpp"
#include "cperm/rational.hpp"
#include "cperm/stats.hpp"

namespace cperm {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// A probability space: the whole group, one conjugacy class, or one color
// orbit (the n! elements whose one-line letters realize a fixed multiset
// {i^{c_i}}), each with the uniform distribution.
struct Domain {
    enum class Kind { Group, Class, ColorOrbit };

    Kind kind = Kind::Group;
    int n = 0;
    int r = 1;
    RPartition lambda;        // Kind::Class
    std::vector<int> colors;  // Kind::ColorOrbit

    static Domain group(int n, int r);
    static Domain conjugacy_class(RPartition lambda);
    static Domain color_orbit(std::vector<int> colors, int r);

    Int size() const;
    // Number of stat evaluations a full sweep costs (the filtered class
    // sweep pays for the whole group).
    Int work() const;
    std::string describe() const;

    void for_each(const std::function<void(const ColoredPermutation&)>& f) const;
};

// E[X_{a_1} ... X_{a_k}] over the whole group: with B_1,...,B_t the blocks
// induced by the (deduplicated) indices, the mean is prod 1/|B_i|!, times
// ((r-1)/r)^{|B_t|} when n is among the indices (B_t the block containing n).
Rational expect_X_product_group(std::vector<int> indices, int n, int r);

// Same value on a conjugacy class whose cycles all exceed 2k; raises
// short_cycle_error otherwise (callers may fall back to enumeration).
Rational expect_X_product_class(std::vector<int> indices, const RPartition& lambda);

// E[X_{a_1}...X_{a_j} Y_{b_1,c_1}...Y_{b_m,c_m}] over the whole group,
// evaluated by reduction: Y factors at non-essential positions contribute
// 1/r each; missing essential positions are expanded over all colors; an
// adjacent color pair that forces an ascent makes the product vanish, one
// that forces the descent drops the X factor; the fully constrained case is
// (1/r^{#Y}) prod 1/|B_i|!. X indices must lie in [n-1].
Rational expect_XY_product(std::vector<int> x_indices,
                           std::vector<std::pair<int, int>> y_factors, int n, int r);

// Class version: requires all cycles longer than 2*#X + #Y.
Rational expect_XY_product_class(std::vector<int> x_indices,
                                 std::vector<std::pair<int, int>> y_factors,
                                 const RPartition& lambda);

// Exact k-th moment by full enumeration; the universal oracle.
Rational moment_enumerated(const Statistic& stat, const Domain& domain, int k,
                           const TotalOrder& order = TotalOrder::descent(),
                           std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1);

// sum over the domain of q^{stat(x)}.
QPolynomial gf_distribution(const Statistic& stat, const Domain& domain,
                            const TotalOrder& order = TotalOrder::descent(),
                            std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1);

struct MomentReport {
    std::string stat;
    std::string domain;
    int k = 1;
    Rational value;
    std::string method;  // closed-form | enumeration | generating-function
};

// Checks that (1-q)^{-(n+1)} * gf(des) has i-th series coefficient
// (i*r + 1)^n for i = 0..depth.
struct Eq1Report {
    int n = 0, r = 0, depth = 0;
    bool ok = false;
    std::vector<int> mismatched_degrees;
};
Eq1Report verify_eq1(int n, int r, int depth,
                     std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1);

// Checks gf(fmaj) = [r]_q [2r]_q ... [nr]_q exactly.
struct Eq2Report {
    int n = 0, r = 0;
    bool ok = false;
    QPolynomial lhs, rhs;
};
Eq2Report verify_eq2(int n, int r, std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1);

// Compares the k-th moment of a statistic on one conjugacy class against
// the whole group (and, for maj, against the color-free group on [n]).
// `hypothesis` records whether the class is free of cycles of length <= 2k;
// the comparison itself is always carried out exactly.
struct Theorem1Report {
    RPartition lambda;
    std::string stat;
    int k = 1;
    bool hypothesis = false;
    bool equal = false;
    Rational class_moment;
    Rational group_moment;
    std::optional<Rational> symmetric_group_moment;  // maj only
};
Theorem1Report verify_theorem1(const RPartition& lambda, int k, const Statistic& stat,
                               std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1);

// One sweep of the group computing the k-th moment of `stat` on every
// conjugacy class at once; returns (class moments by cycle type, group moment).
std::pair<std::map<RPartition, Rational>, Rational> class_moments_sweep(
    int n, int r, int k, const Statistic& stat,
    const TotalOrder& order = TotalOrder::descent());

}  // namespace cperm
