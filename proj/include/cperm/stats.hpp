#pragma once

#include <string>
#include <vector>

#include "cperm/perm.hpp"

namespace cperm {

// Sorted positions i in [n] where the image of i^0 exceeds the image of
// (i+1)^0, with the boundary convention that (n+1)^0 maps to itself.
using DescentSet = std::vector<int>;

DescentSet descent_set(const ColoredPermutation& x,
                       const TotalOrder& order = TotalOrder::descent());

bool descent_at(const ColoredPermutation& x, int i,
                const TotalOrder& order = TotalOrder::descent());

long des(const ColoredPermutation& x, const TotalOrder& order = TotalOrder::descent());

// Sum of the descent positions restricted to [n-1].
long maj(const ColoredPermutation& x, const TotalOrder& order = TotalOrder::descent());

// Sum of the colors as integers in {0,...,r-1}; independent of the order.
long col(const ColoredPermutation& x);

// fmaj = r*maj + col.
long fmaj(const ColoredPermutation& x, const TotalOrder& order = TotalOrder::descent());

// A statistic as a pure evaluation object (name + parameters), so requests
// can be serialized and replayed. X:i is the descent indicator at position
// i; Y:i:c is the indicator of tau(i) = c.
struct Statistic {
    enum class Kind { Des, Maj, Col, Fmaj, X, Y };

    Kind kind = Kind::Des;
    int i = 0;
    int c = 0;

    static Statistic des() { return {Kind::Des, 0, 0}; }
    static Statistic maj() { return {Kind::Maj, 0, 0}; }
    static Statistic col() { return {Kind::Col, 0, 0}; }
    static Statistic fmaj() { return {Kind::Fmaj, 0, 0}; }
    static Statistic indicator_X(int i);
    static Statistic indicator_Y(int i, int c);

    long eval(const ColoredPermutation& x,
              const TotalOrder& order = TotalOrder::descent()) const;

    // Largest value the statistic can attain on the given group.
    long max_value(int n, int r) const;

    std::string name() const;          // "des", "X:3", "Y:2:1", ...
    static Statistic parse(const std::string& name);

    friend bool operator==(const Statistic&, const Statistic&) = default;
};

}  // namespace cperm
