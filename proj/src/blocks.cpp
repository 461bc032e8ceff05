#include "cperm/blocks.hpp"

#include <algorithm>

namespace cperm {

int Blocks::block_of(int value) const {
    for (std::size_t b = 0; b < intervals.size(); ++b)
        if (value >= intervals[b].first && value <= intervals[b].second)
            return static_cast<int>(b);
    throw invalid_argument_error("value outside [n]");
}

int Blocks::size_of_block_containing(int value) const {
    const auto& iv = intervals[static_cast<std::size_t>(block_of(value))];
    return iv.second - iv.first + 1;
}

Blocks induced_blocks(const std::vector<int>& indices, int n) {
    if (n < 1) throw invalid_argument_error("n must be >= 1");
    std::vector<char> linked(static_cast<std::size_t>(n), 0);  // linked[i]: i and i+1 joined
    for (int a : indices) {
        if (a < 1 || a > n) throw invalid_argument_error("index outside [n]");
        if (a < n) linked[static_cast<std::size_t>(a)] = 1;
    }
    Blocks out;
    out.n = n;
    int lo = 1;
    for (int i = 1; i <= n; ++i) {
        if (i == n || !linked[static_cast<std::size_t>(i)]) {
            out.intervals.emplace_back(lo, i);
            lo = i + 1;
        }
    }
    return out;
}

Int young_order(const Blocks& blocks) {
    Int order = 1;
    for (const auto& [lo, hi] : blocks.intervals)
        order *= factorial(static_cast<unsigned long>(hi - lo + 1));
    return order;
}

bool in_young_subgroup(const std::vector<int>& pi, const Blocks& blocks) {
    if (pi.size() != static_cast<std::size_t>(blocks.n)) return false;
    for (const auto& [lo, hi] : blocks.intervals)
        for (int v = lo; v <= hi; ++v) {
            const int image = pi[static_cast<std::size_t>(v - 1)];
            if (image < lo || image > hi) return false;
        }
    return true;
}

ColoredPermutation j_conjugate(const std::vector<int>& pi, const Blocks& blocks,
                               const ColoredPermutation& x) {
    if (!in_young_subgroup(pi, blocks))
        throw invalid_argument_error("permutation is not in the Young subgroup");
    CycleDecomposition cd = to_cycles(x);
    for (auto& cycle : cd.cycles)
        for (auto& letter : cycle)
            letter.value = pi[static_cast<std::size_t>(letter.value - 1)];
    return from_raw_cycles(cd.cycles, x.n(), x.r());
}

void for_each_young_element(const Blocks& blocks,
                            const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> pi(static_cast<std::size_t>(blocks.n));
    for (int v = 1; v <= blocks.n; ++v) pi[static_cast<std::size_t>(v - 1)] = v;
    const std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.intervals.size()) {
            f(pi);
            return;
        }
        const auto [lo, hi] = blocks.intervals[b];
        auto begin = pi.begin() + (lo - 1);
        auto end = pi.begin() + hi;
        std::sort(begin, end);
        do {
            rec(b + 1);
        } while (std::next_permutation(begin, end));
    };
    rec(0);
}

namespace {

struct Occurrence {
    std::size_t cycle = 0;
    std::size_t pos = 0;
};

ColoredLetter follower(const RawCycles& cycles, const Occurrence& occ) {
    const auto& cycle = cycles[occ.cycle];
    return cycle[(occ.pos + 1) % cycle.size()];
}

int predecessor_value(const RawCycles& cycles, const Occurrence& occ) {
    const auto& cycle = cycles[occ.cycle];
    return cycle[(occ.pos + cycle.size() - 1) % cycle.size()].value;
}

}  // namespace

RawCycles colored_descents_cycles(RawCycles cycles, std::vector<int> indices, int n, int r,
                                  const std::function<void(const RawCycles&)>& trace) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int a : indices)
        if (a < 1 || a > n) throw invalid_argument_error("index outside [n]");
    for (const auto& cycle : cycles)
        for (const auto& letter : cycle)
            if (letter.value < 1 || letter.value > n || letter.color < 0 || letter.color >= r)
                throw invalid_argument_error("cycle letter out of range");
    if (indices.empty()) return cycles;
    const int k = static_cast<int>(indices.size());
    for (const auto& cycle : cycles)
        if (static_cast<int>(cycle.size()) <= 2 * k)
            throw short_cycle_error("cycle of length " + std::to_string(cycle.size()) +
                                    " violates the bound > " + std::to_string(2 * k));

    const Blocks blocks = induced_blocks(indices, n);
    std::vector<int> block_min(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> block_of(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t b = 0; b < blocks.intervals.size(); ++b)
        for (int v = blocks.intervals[b].first; v <= blocks.intervals[b].second; ++v) {
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
            block_min[static_cast<std::size_t>(v)] = blocks.intervals[b].first;
        }

    for (auto& cycle : cycles)
        for (auto& letter : cycle)
            letter.value = block_min[static_cast<std::size_t>(letter.value)];
    if (trace) trace(cycles);

    const TotalOrder order = TotalOrder::descent();
    auto count_values = [&] {
        std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& cycle : cycles)
            for (const auto& letter : cycle) ++count[static_cast<std::size_t>(letter.value)];
        return count;
    };
    auto once_count = [&](const std::vector<int>& count) {
        int once = 0;
        for (int v = 1; v <= n; ++v) once += count[static_cast<std::size_t>(v)] == 1;
        return once;
    };

    std::vector<int> count = count_values();
    int once = once_count(count);
    while (once < n) {
        // Largest once-occurring value whose cyclic predecessor still repeats.
        int chosen_pred = 0;
        for (int j = n; j >= 1; --j) {
            if (count[static_cast<std::size_t>(j)] != 1) continue;
            Occurrence occ{};
            bool found = false;
            for (std::size_t ci = 0; ci < cycles.size() && !found; ++ci)
                for (std::size_t p = 0; p < cycles[ci].size(); ++p)
                    if (cycles[ci][p].value == j) {
                        occ = {ci, p};
                        found = true;
                        break;
                    }
            const int pred = predecessor_value(cycles, occ);
            if (count[static_cast<std::size_t>(pred)] > 1) {
                chosen_pred = pred;
                break;
            }
        }
        if (chosen_pred == 0)
            throw error("refinement stalled; input cycles do not satisfy the length bound");

        const int b = block_of[static_cast<std::size_t>(chosen_pred)];
        const auto [lo, hi] = blocks.intervals[static_cast<std::size_t>(b)];

        // Every occurrence whose current value lies in the block, with the
        // letter that follows it.
        std::vector<Occurrence> occs;
        for (std::size_t ci = 0; ci < cycles.size(); ++ci)
            for (std::size_t p = 0; p < cycles[ci].size(); ++p) {
                const int v = cycles[ci][p].value;
                if (v >= lo && v <= hi) occs.push_back({ci, p});
            }
        std::vector<ColoredLetter> followers;
        followers.reserve(occs.size());
        for (const auto& occ : occs) followers.push_back(follower(cycles, occ));

        // The occurrence followed by the largest letter gets the smallest
        // block value; equal followers stay tied and are resolved by a later
        // pass.
        for (std::size_t h = 0; h < occs.size(); ++h) {
            int dominated_by = 0;
            for (std::size_t g = 0; g < occs.size(); ++g)
                if (g != h && order.less(followers[h], followers[g])) ++dominated_by;
            cycles[occs[h].cycle][occs[h].pos].value = lo + dominated_by;
        }

        if (trace) trace(cycles);
        count = count_values();
        const int new_once = once_count(count);
        if (new_once <= once)
            throw error("refinement did not make progress");
        once = new_once;
    }
    return cycles;
}

ColoredPermutation colored_descents(const ColoredPermutation& x, std::vector<int> indices,
                                    std::vector<std::string>* trace_lines) {
    const CycleDecomposition cd = to_cycles(x);
    std::function<void(const RawCycles&)> trace;
    if (trace_lines)
        trace = [trace_lines](const RawCycles& state) {
            trace_lines->push_back(raw_cycles_string(state));
        };
    RawCycles result =
        colored_descents_cycles(cd.cycles, std::move(indices), x.n(), x.r(), trace);
    return from_raw_cycles(result, x.n(), x.r());
}

}  // namespace cperm
