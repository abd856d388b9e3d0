#pragma once

// Set partitions, subsets and dissections of linearly ordered label sets,
// together with the integer weights used by every cluster expansion here.
// All enumerations are deterministic: repeated calls yield the same order.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hierlab/errors.hpp"

namespace hierlab {

// Particle labels. Kept strictly increasing; labels are small positive ints
// (1-based particle indices).
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(std::initializer_list<int> xs) : v_(xs) { validate(); }
    explicit LabelSet(std::vector<int> xs) : v_(std::move(xs)) { validate(); }

    // The contiguous range first..last; empty when last < first.
    static LabelSet range(int first, int last);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& labels() const { return v_; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(int x) const;
    bool subset_of(const LabelSet& other) const;
    LabelSet unite(const LabelSet& other) const;
    LabelSet minus(const LabelSet& other) const;

    bool operator==(const LabelSet&) const = default;

    std::string str() const;

private:
    void validate() const;
    std::vector<int> v_;
};

// Partition of a ground set into disjoint nonempty blocks. Canonical block
// order: by smallest element (restricted-growth enumeration produces it).
struct Partition {
    std::vector<LabelSet> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
    bool operator==(const Partition&) const = default;
};

// Partition whose blocks inherit the ground set's linear order, optionally
// paired with an ordered tuple of distinct attachment indices (one per block).
struct Dissection {
    std::vector<LabelSet> blocks;
    std::vector<int> attachment; // empty when no attachment was requested
    int size() const { return static_cast<int>(blocks.size()); }
    bool operator==(const Dissection&) const = default;
};

// Exact wide integers for Stirling/Bell values up to n = 30.
using BigUint = unsigned __int128;
std::string to_string(BigUint value);

// All set partitions of `ground`, |ground| <= 12. Exactly Bell(|ground|) of
// them, canonical, duplicate-free.
std::vector<Partition> enumerate_partitions(const LabelSet& ground);

// All subsets in deterministic (bitmask) order, |ground| <= 20.
std::vector<LabelSet> enumerate_subsets(const LabelSet& ground, bool nonempty_only);

// Partitions of `ground` into at most max_blocks blocks; when index_range > 0
// each partition is emitted once per ordered tuple of distinct attachment
// indices from 1..index_range (partitions with more blocks than available
// indices are dropped). |ground| <= 10.
std::vector<Dissection> enumerate_dissections(const LabelSet& ground, int max_blocks,
                                              int index_range);

// Stirling numbers of the second kind by the triangle recursion, exact,
// 0 <= k <= n <= 30.
BigUint stirling2(int n, int k);

// Moebius weight (-1)^{|P|-1} (|P|-1)! of a partition in the Ln* expansion.
long long partition_weight(const Partition& p);

// Sum_k (-1)^{k-1} S(s,k) (k-1)! which telescopes to 1 at s = 1 and 0 beyond;
// evaluated exactly, 1 <= s <= 20.
long long alternating_stirling_sum(int s);

} // namespace hierlab
