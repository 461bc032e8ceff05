#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cperm/perm.hpp"
#include "cperm/rational.hpp"

namespace cperm {

// Maximal integer intervals partitioning [n], induced by a set of indices:
// each index a < n links a and a+1 (the index n links nothing).
struct Blocks {
    int n = 0;
    std::vector<std::pair<int, int>> intervals;  // [lo, hi], 1-based inclusive

    int block_of(int value) const;
    int size_of_block_containing(int value) const;

    friend bool operator==(const Blocks&, const Blocks&) = default;
};

Blocks induced_blocks(const std::vector<int>& indices, int n);

// prod |B_i|!, the order of the Young subgroup S_{B_1} x ... x S_{B_t}.
Int young_order(const Blocks& blocks);

// True iff pi (one-line, 1-based images) maps each block into itself.
bool in_young_subgroup(const std::vector<int>& pi, const Blocks& blocks);

// Conjugation by (pi, 0) for pi in the Young subgroup: relabels cycle
// entries by pi while leaving every color in place.
ColoredPermutation j_conjugate(const std::vector<int>& pi, const Blocks& blocks,
                               const ColoredPermutation& x);

// Visits every element of the Young subgroup as a one-line permutation of [n].
void for_each_young_element(const Blocks& blocks,
                            const std::function<void(const std::vector<int>&)>& f);

// The ColoredDescents canonicalization. Given an element whose cycles all
// have length > 2k (k = number of distinct indices), returns the unique
// member of its orbit under conjugation by the Young subgroup (with zero
// coloring) that has descents at every index in `indices` below n. Raises
// short_cycle_error when a cycle is too short.
//
// The cycle-level variant preserves the written rotation of its input, so a
// trace of the intermediate states can be rendered exactly as given; the
// trace callback fires after the initial block-minimum replacement and then
// after each refinement pass.
RawCycles colored_descents_cycles(RawCycles cycles, std::vector<int> indices, int n, int r,
                                  const std::function<void(const RawCycles&)>& trace = {});

ColoredPermutation colored_descents(const ColoredPermutation& x, std::vector<int> indices,
                                    std::vector<std::string>* trace_lines = nullptr);

}  // namespace cperm
