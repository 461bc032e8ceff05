#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cperm/perm.hpp"
#include "cperm/rational.hpp"
#include "cperm/rng.hpp"

namespace cperm {

// An r-tuple of integer partitions with total weight n; indexes a conjugacy
// class: parts[j] lists (weakly decreasing) the lengths of the cycles whose
// color sum is j mod r.
struct RPartition {
    int n = 0;
    int r = 1;
    std::vector<std::vector<int>> parts;  // parts[j] for j in 0..r-1

    static RPartition make(int r, std::vector<std::vector<int>> parts);

    int total_weight() const;
    bool empty_color(int j) const { return parts[static_cast<std::size_t>(j)].empty(); }

    // Text form "0:[4,1]; 1:[1,1]; 2:[2]".
    std::string to_string() const;
    static RPartition parse(const std::string& text, int r);

    friend bool operator==(const RPartition&, const RPartition&) = default;
    friend auto operator<=>(const RPartition&, const RPartition&) = default;
};

RPartition cycle_type(const ColoredPermutation& x);

// All r-partitions of n in a fixed deterministic order.
std::vector<RPartition> r_partitions(int n, int r);

// |C_lambda| via the centralizer order of the wreath product: the
// centralizer of an element of cycle type lambda has order
//   prod_{j,i} m_{i,j}! * (i*r)^{m_{i,j}},
// with m_{i,j} the multiplicity of part i in parts[j].
Int class_size(const RPartition& lambda);
Int centralizer_order(const RPartition& lambda);

// True iff every cycle length exceeds m.
bool has_no_short_cycles(const RPartition& lambda, int m);

// A fixed representative of the class.
ColoredPermutation class_representative(const RPartition& lambda);

// Streams each class element exactly once. Uses a filtered sweep of the
// whole group for n <= 8 and a direct constructive generator above; the two
// paths agree wherever both run (exercised in tests).
void for_each_in_class(const RPartition& lambda,
                       const std::function<void(const ColoredPermutation&)>& f);
void for_each_in_class_filtered(const RPartition& lambda,
                                const std::function<void(const ColoredPermutation&)>& f);
void for_each_in_class_constructive(const RPartition& lambda,
                                    const std::function<void(const ColoredPermutation&)>& f);

// Uniform element of the whole group.
ColoredPermutation random_element(int n, int r, SplitRng& rng);

// Uniform element of C_lambda: conjugates a fixed representative by a
// uniform group element, which is exactly uniform by transitivity.
ColoredPermutation sample_class(const RPartition& lambda, SplitRng& rng);

}  // namespace cperm
