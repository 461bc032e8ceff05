#include <map>
#include <set>
#include <vector>

#include "cperm/blocks.hpp"
#include "cperm/conjugacy.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/stats.hpp"
#include "doctest.h"

using namespace cperm;

TEST_CASE("induced blocks of {1,2,4,7} in [8]") {
    const auto blocks = induced_blocks({1, 2, 4, 7}, 8);
    const std::vector<std::pair<int, int>> expected{{1, 3}, {4, 5}, {6, 6}, {7, 8}};
    CHECK(blocks.intervals == expected);
    // Adding 8 = n changes nothing: n generates no transposition.
    CHECK(induced_blocks({1, 2, 4, 7, 8}, 8).intervals == expected);
    CHECK(young_order(blocks) == 24);  // 3! * 2! * 1! * 2!
}

TEST_CASE("blocks of the empty index set are singletons") {
    const auto blocks = induced_blocks({}, 5);
    CHECK(blocks.intervals.size() == 5);
    CHECK(young_order(blocks) == 1);
}

TEST_CASE("blocks of {1..n-1} form one interval of order n!") {
    const auto blocks = induced_blocks({1, 2, 3, 4, 5}, 6);
    CHECK(blocks.intervals == std::vector<std::pair<int, int>>{{1, 6}});
    CHECK(young_order(blocks) == 720);
}

TEST_CASE("j_conjugate equals direct conjugation by (pi, 0) on S_{4,2}") {
    const auto blocks = induced_blocks({1, 3}, 4);  // {1,2}, {3,4}
    for_each_young_element(blocks, [&](const std::vector<int>& pi) {
        const ColoredPermutation pi0(4, 2, pi, {0, 0, 0, 0});
        for_each_element(4, 2, [&](const ColoredPermutation& x) {
            CHECK(j_conjugate(pi, blocks, x) == compose(compose(pi0, x), inverse(pi0)));
        });
    });
}

TEST_CASE("j_conjugate relabels cycles and preserves following colors") {
    const auto blocks = induced_blocks({1}, 4);  // {1,2}, {3}, {4}
    const std::vector<int> swap12{2, 1, 3, 4};
    const auto x = parse_element("(1^1 3^0 2^1 4^0)", 2);
    const auto y = j_conjugate(swap12, blocks, x);
    // Relabeled cycle: (2^1 3^0 1^1 4^0), canonically rotated to start at
    // the image of 1; the color after pi(i) equals the color after i.
    CHECK(cycle_string(y) == "(4^0 2^1 3^0 1^1)");
    for (int i = 1; i <= 4; ++i)
        CHECK(y.act({swap12[static_cast<std::size_t>(i - 1)], 0}).color == x.act({i, 0}).color);

    CHECK(j_conjugate({1, 2, 3, 4}, blocks, x) == x);
    CHECK_THROWS_AS(j_conjugate({3, 2, 1, 4}, blocks, x), invalid_argument_error);
}

TEST_CASE("young subgroup enumeration hits young_order distinct elements") {
    const auto blocks = induced_blocks({1, 2, 4}, 5);  // {1,2,3}, {4,5}
    std::set<std::vector<int>> elements;
    for_each_young_element(blocks, [&](const std::vector<int>& pi) { elements.insert(pi); });
    CHECK(Int(elements.size()) == young_order(blocks));
}

TEST_CASE("the worked 9-cycle example and its trace") {
    const auto x = parse_element("(1^0 3^1 8^2 5^2 2^0 7^0 4^1 9^0 6^2)", 3);
    int n = 0;
    const RawCycles raw = parse_raw_cycles("(1^0 3^1 8^2 5^2 2^0 7^0 4^1 9^0 6^2)", 3, &n);
    REQUIRE(n == 9);

    std::vector<std::string> trace;
    const RawCycles result = colored_descents_cycles(
        raw, {1, 2, 4, 5}, 9, 3,
        [&](const RawCycles& state) { trace.push_back(raw_cycles_string(state)); });

    REQUIRE(trace.size() == 4);
    CHECK(trace[0] == "(1^0 1^1 8^2 4^2 1^0 7^0 4^1 9^0 4^2)");
    CHECK(trace[1] == "(1^0 1^1 8^2 5^2 1^0 7^0 4^1 9^0 5^2)");
    CHECK(trace[2] == "(2^0 1^1 8^2 5^2 3^0 7^0 4^1 9^0 5^2)");
    CHECK(trace[3] == "(2^0 1^1 8^2 5^2 3^0 7^0 4^1 9^0 6^2)");
    CHECK(raw_cycles_string(result) == "(2^0 1^1 8^2 5^2 3^0 7^0 4^1 9^0 6^2)");

    const auto y = colored_descents(x, {1, 2, 4, 5});
    CHECK(y == from_raw_cycles(result, 9, 3));
    const auto ds = descent_set(y);
    for (int a : {1, 2, 4, 5}) CHECK(std::count(ds.begin(), ds.end(), a) == 1);

    // Idempotent on its own output.
    CHECK(colored_descents(y, {1, 2, 4, 5}) == y);
}

TEST_CASE("empty index set returns the input unchanged") {
    const auto x = parse_element("(1^0 2^1)", 2);
    CHECK(colored_descents(x, {}) == x);
}

TEST_CASE("short cycles are rejected") {
    const auto x = parse_element("(1^0 2^1)(3^0 4^0)", 2);  // 2-cycles, k=1 needs > 2
    CHECK_THROWS_AS(colored_descents(x, {1}), short_cycle_error);
    const auto id = ColoredPermutation::identity(3, 2);
    CHECK_THROWS_AS(colored_descents(id, {1}), short_cycle_error);
}

TEST_CASE("orbit structure on the 5-cycle classes of S_{5,2}, singleton indices") {
    for (int color = 0; color < 2; ++color) {
        std::vector<std::vector<int>> parts(2);
        parts[static_cast<std::size_t>(color)] = {5};
        const auto lambda = RPartition::make(2, parts);

        std::vector<ColoredPermutation> cls;
        for_each_in_class(lambda, [&](const ColoredPermutation& x) { cls.push_back(x); });
        REQUIRE(Int(cls.size()) == class_size(lambda));

        for (int a = 1; a <= 4; ++a) {
            const auto blocks = induced_blocks({a}, 5);
            // Group elements by J-orbit: key = the minimum of the orbit.
            std::map<ColoredPermutation, std::vector<ColoredPermutation>> orbits;
            for (const auto& x : cls) {
                ColoredPermutation least = x;
                for_each_young_element(blocks, [&](const std::vector<int>& pi) {
                    const auto y = j_conjugate(pi, blocks, x);
                    if (y < least) least = y;
                });
                orbits[least].push_back(x);
            }
            for (const auto& [key, members] : orbits) {
                CHECK(Int(members.size()) == young_order(blocks));
                int with_descent = 0;
                const ColoredPermutation* unique = nullptr;
                for (const auto& y : members) {
                    if (descent_at(y, a)) {
                        ++with_descent;
                        unique = &y;
                    }
                }
                CHECK(with_descent == 1);
                for (const auto& y : members) CHECK(colored_descents(y, {a}) == *unique);
            }
        }
    }
}
