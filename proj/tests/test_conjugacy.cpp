#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "cperm/conjugacy.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/rng.hpp"
#include "doctest.h"

using namespace cperm;

namespace {

std::vector<ColoredPermutation> collect_group(int n, int r) {
    std::vector<ColoredPermutation> all;
    for_each_element(n, r, [&](const ColoredPermutation& x) { all.push_back(x); });
    return all;
}

// Conjugation orbits computed directly from the group operation; the
// independent oracle for everything cycle-type based.
std::vector<std::set<ColoredPermutation>> conjugation_orbits(int n, int r) {
    const auto all = collect_group(n, r);
    std::set<ColoredPermutation> remaining(all.begin(), all.end());
    std::vector<std::set<ColoredPermutation>> orbits;
    while (!remaining.empty()) {
        const ColoredPermutation x = *remaining.begin();
        std::set<ColoredPermutation> orbit;
        for (const auto& g : all) orbit.insert(compose(compose(g, x), inverse(g)));
        for (const auto& y : orbit) remaining.erase(y);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

TEST_CASE("cycle types of the displayed examples") {
    const auto x = ColoredPermutation(8, 3, {3, 8, 5, 6, 2, 1, 4, 7}, {1, 0, 0, 1, 2, 2, 0, 1});
    const auto t = cycle_type(x);
    CHECK(t == RPartition::make(3, {{}, {8}, {}}));
    CHECK(t.to_string() == "0:[]; 1:[8]; 2:[]");

    const auto y = parse_element("(1^0 3^2 7^1 6^0)(2^1)(4^2 5^0)(8^0)(9^1)", 3);
    CHECK(cycle_type(y) == RPartition::make(3, {{4, 1}, {1, 1}, {2}}));

    CHECK(cycle_type(ColoredPermutation::identity(4, 2)) ==
          RPartition::make(2, {{1, 1, 1, 1}, {}}));
}

TEST_CASE("r-partition text form round trips") {
    const auto p = RPartition::make(3, {{4, 1}, {1, 1}, {2}});
    CHECK(p.to_string() == "0:[4,1]; 1:[1,1]; 2:[2]");
    CHECK(RPartition::parse(p.to_string(), 3) == p);
    CHECK(RPartition::parse("1:[8]", 3) == RPartition::make(3, {{}, {8}, {}}));
    CHECK(RPartition::parse("0:[1,4]", 2).parts[0] == std::vector<int>{4, 1});
    CHECK_THROWS_AS(RPartition::parse("5:[1]", 3), parse_error);
    CHECK_THROWS_AS(RPartition::parse("0:[0]", 2), invalid_argument_error);
}

TEST_CASE("r_partitions enumerates each class exactly once") {
    CHECK(r_partitions(1, 1) == std::vector<RPartition>{RPartition::make(1, {{1}})});
    CHECK(r_partitions(2, 2).size() == 5);

    // Count matches the number of genuine conjugation orbits.
    CHECK(r_partitions(2, 2).size() == conjugation_orbits(2, 2).size());
    CHECK(r_partitions(3, 2).size() == conjugation_orbits(3, 2).size());

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto all = r_partitions(n, r);
            std::set<RPartition> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            for (const auto& p : all) CHECK(p.total_weight() == n);
        }
}

TEST_CASE("class sizes match brute-force conjugation orbits for n <= 4, r <= 3") {
    CHECK(class_size(RPartition::make(2, {{1, 1}, {}})) == 1);  // identity of S_{2,2}

    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto orbits = conjugation_orbits(n, r);
            Int total = 0;
            for (const auto& orbit : orbits) {
                const RPartition type = cycle_type(*orbit.begin());
                for (const auto& y : orbit) CHECK(cycle_type(y) == type);  // class invariant
                CHECK(class_size(type) == Int(static_cast<unsigned long>(orbit.size())));
                total += static_cast<unsigned long>(orbit.size());
            }
            CHECK(total == group_order(n, r));

            Int sum = 0;
            for (const auto& p : r_partitions(n, r)) sum += class_size(p);
            CHECK(sum == group_order(n, r));
        }
}

TEST_CASE("cycle type is conjugation invariant (sampled)") {
    SplitRng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = random_element(5, 3, rng);
        const auto g = random_element(5, 3, rng);
        CHECK(cycle_type(compose(compose(g, x), inverse(g))) == cycle_type(x));
    }
}

TEST_CASE("enumerate_class matches filtering by cycle type") {
    const auto lambda = RPartition::make(2, {{}, {2}});
    std::set<ColoredPermutation> enumerated;
    for_each_in_class(lambda, [&](const ColoredPermutation& x) { enumerated.insert(x); });
    std::set<ColoredPermutation> filtered;
    for (const auto& x : collect_group(2, 2))
        if (cycle_type(x) == lambda) filtered.insert(x);
    CHECK(enumerated == filtered);
    CHECK(enumerated.size() == 2);

    const auto id_class = RPartition::make(3, {{1, 1}, {}, {}});
    int count = 0;
    for_each_in_class(id_class, [&](const ColoredPermutation& x) {
        CHECK(x.is_identity());
        ++count;
    });
    CHECK(count == 1);
}

TEST_CASE("constructive and filtered class enumeration agree on overlap") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (const auto& lambda : r_partitions(n, r)) {
                std::set<ColoredPermutation> filtered, constructed;
                std::size_t emitted = 0;
                for_each_in_class_filtered(lambda,
                                           [&](const ColoredPermutation& x) { filtered.insert(x); });
                for_each_in_class_constructive(lambda, [&](const ColoredPermutation& x) {
                    constructed.insert(x);
                    ++emitted;
                });
                CHECK(filtered == constructed);
                CHECK(emitted == constructed.size());  // no duplicates emitted
                CHECK(Int(static_cast<unsigned long>(emitted)) == class_size(lambda));
            }
    // A bigger spot check: the 5-cycle classes of S_{5,2}.
    for (int color = 0; color < 2; ++color) {
        std::vector<std::vector<int>> parts(2);
        parts[static_cast<std::size_t>(color)] = {5};
        const auto lambda = RPartition::make(2, parts);
        std::size_t count = 0;
        for_each_in_class_constructive(lambda, [&](const ColoredPermutation&) { ++count; });
        CHECK(Int(static_cast<unsigned long>(count)) == class_size(lambda));
        CHECK(class_size(lambda) == 384);
    }
}

TEST_CASE("has_no_short_cycles") {
    CHECK(has_no_short_cycles(RPartition::make(2, {{5}, {}}), 4));
    CHECK_FALSE(has_no_short_cycles(RPartition::make(3, {{4, 1}, {1, 1}, {2}}), 1));
    CHECK(has_no_short_cycles(RPartition::make(3, {{}, {8}, {}}), 4));
    CHECK(has_no_short_cycles(RPartition::make(2, {{3, 3}, {}}), 2));
    CHECK_FALSE(has_no_short_cycles(RPartition::make(2, {{3, 3}, {}}), 3));
}

TEST_CASE("sample_class is exactly uniform (5 sigma per element)") {
    // |C| = 6 on this class of S_{3,2}; 10^5 draws.
    const auto lambda = RPartition::make(2, {{2, 1}, {}});
    REQUIRE(class_size(lambda) == 6);
    std::map<ColoredPermutation, long> counts;
    for_each_in_class(lambda, [&](const ColoredPermutation& x) { counts.emplace(x, 0); });

    const long draws = 100000;
    SplitRng rng(20260810);
    for (long i = 0; i < draws; ++i) {
        const auto x = sample_class(lambda, rng);
        CHECK(cycle_type(x) == lambda);
        auto it = counts.find(x);
        REQUIRE(it != counts.end());
        ++it->second;
    }
    const double p = 1.0 / 6.0;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (const auto& [x, c] : counts)
        CHECK(std::abs(static_cast<double>(c) - draws * p) < 5 * sigma);
}

TEST_CASE("sampling the identity class always yields the identity") {
    const auto lambda = RPartition::make(2, {{1, 1, 1}, {}});
    SplitRng rng(3);
    for (int i = 0; i < 20; ++i) CHECK(sample_class(lambda, rng).is_identity());
}

TEST_CASE("class representative has the requested type") {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r)
            for (const auto& lambda : r_partitions(n, r))
                CHECK(cycle_type(class_representative(lambda)) == lambda);
}
