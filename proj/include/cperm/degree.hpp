#pragma once

#include <string>
#include <vector>

#include "cperm/conjugacy.hpp"
#include "cperm/perm.hpp"
#include "cperm/rational.hpp"
#include "cperm/stats.hpp"

namespace cperm {

// One requirement i^0 -> target^color, i.e. omega(source) = target and
// tau(source) = color.
struct Constraint {
    int source = 1;
    int target = 1;
    int color = 0;

    friend bool operator==(const Constraint&, const Constraint&) = default;
    friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

// A partial colored permutation: a set of constraints with pairwise
// distinct sources. Targets may repeat, in which case no element satisfies
// the set and its indicator is identically zero; that degenerate form is
// allowed so the standard indicator decompositions of the statistics can be
// written term for term.
class PartialColoredPermutation {
  public:
    PartialColoredPermutation(int n, int r, std::vector<Constraint> pairs);

    int n() const { return n_; }
    int r() const { return r_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    const std::vector<Constraint>& pairs() const { return pairs_; }

    bool targets_distinct() const;
    // True when the constraint chains close no cycle (self-loops included),
    // so they embed into cycles longer than the constraint set.
    bool acyclic() const;

    // Text form "{1->3:1, 2->8:0}".
    std::string to_string() const;
    static PartialColoredPermutation parse(const std::string& text, int n, int r);

    friend bool operator==(const PartialColoredPermutation&,
                           const PartialColoredPermutation&) = default;

  private:
    int n_;
    int r_;
    std::vector<Constraint> pairs_;  // sorted by source
};

bool satisfies(const ColoredPermutation& x, const PartialColoredPermutation& p);

// Probability that a uniform element of C_lambda satisfies p, via the
// closed form 1/((n-1)...(n-m)) * 1/r^m, valid when the class has no cycle
// of length <= m. Unsatisfiable sets (repeated targets) have probability 0;
// sets that close a cycle of length l <= m force a short cycle and raise
// short_cycle_error, as does a class violating the hypothesis.
Rational satisfaction_prob_class(const PartialColoredPermutation& p, const RPartition& lambda);

// A statistic written as sum of coeff * indicator terms.
struct DecompositionTerm {
    Rational coeff;
    PartialColoredPermutation constraint;
};

// The explicit indicator decompositions of des, maj and fmaj; every
// constraint has size <= 2 and evaluating the sum pointwise reproduces the
// statistic. Terms are emitted in a fixed order (position, then letter-pair
// rank) so reports are diffable.
std::vector<DecompositionTerm> decompose_statistic(Statistic::Kind kind, int n, int r);

Rational evaluate_decomposition(const std::vector<DecompositionTerm>& terms,
                                const ColoredPermutation& x);

// Dimension-r^n*n! vectors over the fixed element enumeration order.
std::vector<Int> indicator_vector(const PartialColoredPermutation& p);
std::vector<Int> statistic_vector(const Statistic& stat, int n, int r,
                                  const TotalOrder& order = TotalOrder::descent());

// Exact rational span membership: does each target vector lie in the span
// of the indicator vectors of all partial colored permutations of size
// <= m? Gaussian elimination over the integers (fraction-free, content-
// stripped, pivoting on the largest entry magnitude). Indicators whose
// source set is contained in `priority_sources` are inserted first, which
// lets membership certificates with known support terminate early; the
// verdict is independent of that ordering.
std::vector<bool> degree_upper_bound_check_multi(const std::vector<std::vector<Int>>& targets,
                                                 int m, int n, int r,
                                                 const std::vector<int>& priority_sources = {});

bool degree_upper_bound_check(const Statistic& stat, int m, int n, int r,
                              const TotalOrder& order = TotalOrder::descent(),
                              const std::vector<int>& priority_sources = {});

}  // namespace cperm
