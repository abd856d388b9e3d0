#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hierlab/combinatorics.hpp"

using namespace hierlab;

namespace {

// Independent oracle: Bell numbers via the Bell triangle (Aitken's array),
// nothing shared with the library's restricted-growth enumeration.
std::vector<BigUint> bell_numbers(int n_max) {
    std::vector<BigUint> bell{1}; // B_0
    std::vector<BigUint> row{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<BigUint> next;
        next.push_back(row.back());
        for (std::size_t i = 0; i < row.size(); ++i) next.push_back(next.back() + row[i]);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

long long falling_factorial(int n, int k) {
    long long out = 1;
    for (int i = 0; i < k; ++i) out *= (n - i);
    return out;
}

} // namespace

TEST_CASE("label sets validate and support set algebra") {
    CHECK_THROWS_AS(LabelSet({2, 1}), argument_error);
    CHECK_THROWS_AS(LabelSet({1, 1}), argument_error);
    CHECK_THROWS_AS(LabelSet({0}), argument_error);
    LabelSet y{1, 3, 5};
    CHECK(y.contains(3));
    CHECK_FALSE(y.contains(2));
    CHECK(LabelSet({1, 3}).subset_of(y));
    CHECK(y.unite(LabelSet{2}) == LabelSet({1, 2, 3, 5}));
    CHECK(y.minus(LabelSet{3}) == LabelSet({1, 5}));
    CHECK(LabelSet::range(2, 4) == LabelSet({2, 3, 4}));
    CHECK(LabelSet::range(3, 2).empty());
    CHECK(y.str() == "{1,3,5}");
}

TEST_CASE("partition counts match the Bell-triangle oracle") {
    auto bell = bell_numbers(8);
    for (int n = 0; n <= 8; ++n) {
        auto parts = enumerate_partitions(LabelSet::range(1, n));
        CHECK(static_cast<BigUint>(parts.size()) == bell[static_cast<std::size_t>(n)]);
    }
    CHECK(enumerate_partitions(LabelSet{1}).size() == 1);
    CHECK(enumerate_partitions(LabelSet{1, 2, 3}).size() == 5);
    CHECK(enumerate_partitions(LabelSet{1, 2, 3, 4}).size() == 15);
}

TEST_CASE("partitions are canonical, disjoint, complete and deterministic") {
    LabelSet ground{2, 4, 5, 7, 9};
    auto parts = enumerate_partitions(ground);
    std::set<std::string> seen;
    for (const auto& p : parts) {
        std::vector<int> all;
        int prev_min = 0;
        std::string key;
        for (const auto& blk : p.blocks) {
            REQUIRE_FALSE(blk.empty());
            CHECK(blk[0] > prev_min); // canonical order by smallest element
            prev_min = blk[0];
            for (int x : blk) all.push_back(x);
            key += blk.str();
        }
        std::sort(all.begin(), all.end());
        CHECK(LabelSet(all) == ground); // disjoint union = ground
        CHECK(seen.insert(key).second); // no duplicates
    }
    auto rerun = enumerate_partitions(ground);
    REQUIRE(rerun.size() == parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        CHECK(rerun[i].blocks == parts[i].blocks);
    CHECK_THROWS_AS(enumerate_partitions(LabelSet::range(1, 13)), capacity_error);
}

TEST_CASE("subset enumeration") {
    CHECK(enumerate_subsets(LabelSet{}, false).size() == 1);
    auto s2 = enumerate_subsets(LabelSet{1, 2}, false);
    REQUIRE(s2.size() == 4);
    CHECK(s2[0].empty());
    CHECK(s2[1] == LabelSet{1});
    CHECK(s2[2] == LabelSet{2});
    CHECK(s2[3] == LabelSet({1, 2}));
    CHECK(enumerate_subsets(LabelSet::range(1, 5), true).size() == 31);
    CHECK_THROWS_AS(enumerate_subsets(LabelSet::range(1, 21), false), capacity_error);
}

TEST_CASE("dissection enumeration: block caps and attachment tuples") {
    auto d1 = enumerate_dissections(LabelSet{3}, 2, 0);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].blocks == std::vector<LabelSet>{LabelSet{3}});
    CHECK(d1[0].attachment.empty());

    auto d2 = enumerate_dissections(LabelSet{3, 4}, 2, 0);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].blocks == std::vector<LabelSet>{LabelSet({3, 4})});
    CHECK(d2[1].blocks == std::vector<LabelSet>{LabelSet{3}, LabelSet{4}});

    CHECK(enumerate_dissections(LabelSet{3, 4}, 1, 0).size() == 1);

    // with attachments: each partition with b blocks contributes P(range, b)
    // ordered distinct tuples
    for (int n = 1; n <= 4; ++n) {
        for (int range : {2, 3, 5}) {
            auto ds = enumerate_dissections(LabelSet::range(1, n), n, range);
            long long expected = 0;
            for (const auto& p : enumerate_partitions(LabelSet::range(1, n)))
                if (p.size() <= range) expected += falling_factorial(range, p.size());
            CHECK(static_cast<long long>(ds.size()) == expected);
            for (const auto& d : ds) {
                std::set<int> distinct(d.attachment.begin(), d.attachment.end());
                CHECK(static_cast<int>(distinct.size()) == d.size());
                for (int idx : d.attachment) {
                    CHECK(idx >= 1);
                    CHECK(idx <= range);
                }
            }
        }
    }
    CHECK_THROWS_AS(enumerate_dissections(LabelSet::range(1, 11), 3, 2), capacity_error);
}

TEST_CASE("Stirling numbers: triangle values and closed-form oracles") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    for (int n = 0; n <= 30; ++n) CHECK(stirling2(n, n) == 1);
    for (int n = 1; n <= 30; ++n) CHECK(stirling2(n, 1) == 1);
    // closed forms: S(n,2) = 2^{n-1}-1 and S(n,n-1) = C(n,2)
    for (int n = 2; n <= 30; ++n) {
        CHECK(stirling2(n, 2) == (BigUint{1} << (n - 1)) - 1);
        CHECK(stirling2(n, n - 1) == static_cast<BigUint>(n) * (n - 1) / 2);
    }
    // row sums are Bell numbers (independent triangle)
    auto bell = bell_numbers(30);
    for (int n = 0; n <= 30; ++n) {
        BigUint row = 0;
        for (int k = 0; k <= n; ++k) row += stirling2(n, k);
        CHECK(to_string(row) == to_string(bell[static_cast<std::size_t>(n)]));
    }
    CHECK(to_string(stirling2(30, 2)) == "536870911");
    CHECK_THROWS_AS(stirling2(31, 3), argument_error);
    CHECK_THROWS_AS(stirling2(3, 4), argument_error);
    CHECK_THROWS_AS(stirling2(-1, 0), argument_error);
}

TEST_CASE("partition weights") {
    auto mk = [](int nblocks) {
        Partition p;
        for (int i = 1; i <= nblocks; ++i) p.blocks.push_back(LabelSet{i});
        return p;
    };
    CHECK(partition_weight(mk(1)) == 1);
    CHECK(partition_weight(mk(2)) == -1);
    CHECK(partition_weight(mk(3)) == 2);
    CHECK(partition_weight(mk(4)) == -6);
    CHECK_THROWS_AS(partition_weight(Partition{}), argument_error);
}

TEST_CASE("alternating Stirling sum telescopes to the Kronecker delta") {
    CHECK(alternating_stirling_sum(1) == 1);
    for (int s = 2; s <= 20; ++s) CHECK(alternating_stirling_sum(s) == 0);
    CHECK_THROWS_AS(alternating_stirling_sum(0), argument_error);
    CHECK_THROWS_AS(alternating_stirling_sum(21), argument_error);
}

TEST_CASE("Moebius weight sum over enumerated partitions is the delta as well") {
    for (int s = 1; s <= 8; ++s) {
        long long acc = 0;
        for (const auto& p : enumerate_partitions(LabelSet::range(1, s)))
            acc += partition_weight(p);
        CHECK(acc == (s == 1 ? 1 : 0));
    }
}

TEST_CASE("signed block-count sum over all partitions gives (-1)^m") {
    // sum over partitions P of an m-set of (-1)^{|P|} |P|! equals (-1)^m
    for (int m = 0; m <= 6; ++m) {
        long long acc = 0;
        for (const auto& p : enumerate_partitions(LabelSet::range(1, m))) {
            long long f = 1;
            for (int i = 2; i <= p.size(); ++i) f *= i;
            acc += (p.size() % 2 == 0 ? f : -f);
        }
        CHECK(acc == (m % 2 == 0 ? 1 : -1));
    }
}
