#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cperm/perm.hpp"
#include "cperm/rational.hpp"

namespace cperm {

inline Int group_order(int n, int r) {
    return factorial(static_cast<unsigned long>(n)) *
           int_pow(Int(r), static_cast<unsigned long>(n));
}

// Visits every element of the group exactly once: omega in lexicographic
// order, and for each omega the colorings in lexicographic order (tau(1)
// most significant). This fixed order is also the indicator-vector basis
// order used by the degree machinery.
template <class F>
void for_each_element(int n, int r, F&& f) {
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::iota(omega.begin(), omega.end(), 1);
    std::vector<int> tau(static_cast<std::size_t>(n), 0);
    do {
        std::fill(tau.begin(), tau.end(), 0);
        for (;;) {
            f(ColoredPermutation(n, r, omega, tau));
            int pos = n - 1;
            while (pos >= 0 && tau[static_cast<std::size_t>(pos)] == r - 1) {
                tau[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++tau[static_cast<std::size_t>(pos)];
        }
    } while (std::next_permutation(omega.begin(), omega.end()));
}

// Shard s of `shards` visits the elements whose omega(1) falls in its slice,
// in the same relative order as for_each_element. Concatenating shards
// 0..shards-1 reproduces the full order, so any associative merge of shard
// results is independent of the shard count.
template <class F>
void for_each_element_shard(int n, int r, int shard, int shards, F&& f) {
    for (int first = 1; first <= n; ++first) {
        if ((first - 1) % shards != shard) continue;
        std::vector<int> rest;
        for (int v = 1; v <= n; ++v)
            if (v != first) rest.push_back(v);
        std::vector<int> omega(static_cast<std::size_t>(n));
        omega[0] = first;
        std::vector<int> tau(static_cast<std::size_t>(n), 0);
        do {
            std::copy(rest.begin(), rest.end(), omega.begin() + 1);
            std::fill(tau.begin(), tau.end(), 0);
            for (;;) {
                f(ColoredPermutation(n, r, omega, tau));
                int pos = n - 1;
                while (pos >= 0 && tau[static_cast<std::size_t>(pos)] == r - 1) {
                    tau[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++tau[static_cast<std::size_t>(pos)];
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
}

// Visits the color orbit of (c_1,...,c_n): the n! elements whose one-line
// letters form the multiset {1^{c_1},...,n^{c_n}}.
template <class F>
void for_each_in_color_orbit(const std::vector<int>& colors, int r, F&& f) {
    const int n = static_cast<int>(colors.size());
    std::vector<int> arrangement(static_cast<std::size_t>(n));
    std::iota(arrangement.begin(), arrangement.end(), 1);
    std::vector<int> omega(static_cast<std::size_t>(n));
    std::vector<int> tau(static_cast<std::size_t>(n));
    do {
        for (int p = 0; p < n; ++p) {
            const int v = arrangement[static_cast<std::size_t>(p)];
            omega[static_cast<std::size_t>(p)] = v;
            tau[static_cast<std::size_t>(p)] = colors[static_cast<std::size_t>(v - 1)];
        }
        f(ColoredPermutation(n, r, omega, tau));
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

}  // namespace cperm
