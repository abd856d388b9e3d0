#include "hierlab/combinatorics.hpp"

#include <algorithm>
#include <array>

namespace hierlab {

namespace {

constexpr int kMaxPartitionGround = 12;
constexpr int kMaxSubsetGround = 20;
constexpr int kMaxDissectionGround = 10;
constexpr int kMaxStirling = 30;

} // namespace

void LabelSet::validate() const {
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (v_[i] < 1)
            throw argument_error("LabelSet: labels must be positive, got " + std::to_string(v_[i]));
        if (i > 0 && v_[i] <= v_[i - 1])
            throw argument_error("LabelSet: labels must be strictly increasing");
    }
}

LabelSet LabelSet::range(int first, int last) {
    std::vector<int> v;
    for (int x = first; x <= last; ++x) v.push_back(x);
    return LabelSet(std::move(v));
}

bool LabelSet::contains(int x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
}

bool LabelSet::subset_of(const LabelSet& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

LabelSet LabelSet::unite(const LabelSet& other) const {
    std::vector<int> out;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(out));
    return LabelSet(std::move(out));
}

LabelSet LabelSet::minus(const LabelSet& other) const {
    std::vector<int> out;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
    return LabelSet(std::move(out));
}

std::string LabelSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

std::string to_string(BigUint value) {
    if (value == 0) return "0";
    std::string s;
    while (value > 0) {
        s += static_cast<char>('0' + static_cast<int>(value % 10));
        value /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::vector<Partition> enumerate_partitions(const LabelSet& ground) {
    const int n = ground.size();
    if (n > kMaxPartitionGround)
        throw capacity_error("enumerate_partitions: ground size " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxPartitionGround));
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    // Restricted-growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    // Block j collects the elements with a[i] = j; blocks come out ordered by
    // smallest element because first occurrences of j are increasing.
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    auto emit = [&] {
        int nblocks = 1 + *std::max_element(a.begin(), a.end());
        Partition p;
        p.blocks.reserve(static_cast<std::size_t>(nblocks));
        for (int j = 0; j < nblocks; ++j) {
            std::vector<int> blk;
            for (int i = 0; i < n; ++i)
                if (a[static_cast<std::size_t>(i)] == j) blk.push_back(ground[i]);
            p.blocks.emplace_back(std::move(blk));
        }
        out.push_back(std::move(p));
    };
    while (true) {
        emit();
        // odometer step on the restricted-growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, a[static_cast<std::size_t>(j)]);
            if (a[static_cast<std::size_t>(i)] <= cap) break;
        }
        if (i == 0) break;
        a[static_cast<std::size_t>(i)] += 1;
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    return out;
}

std::vector<LabelSet> enumerate_subsets(const LabelSet& ground, bool nonempty_only) {
    const int n = ground.size();
    if (n > kMaxSubsetGround)
        throw capacity_error("enumerate_subsets: ground size " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxSubsetGround));
    std::vector<LabelSet> out;
    const std::uint32_t total = 1u << n;
    for (std::uint32_t mask = nonempty_only ? 1u : 0u; mask < total; ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(ground[i]);
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<Dissection> enumerate_dissections(const LabelSet& ground, int max_blocks,
                                              int index_range) {
    const int n = ground.size();
    if (n > kMaxDissectionGround)
        throw capacity_error("enumerate_dissections: ground size " + std::to_string(n) +
                             " exceeds cap " + std::to_string(kMaxDissectionGround));
    if (max_blocks < 1) throw argument_error("enumerate_dissections: max_blocks must be >= 1");
    if (index_range < 0) throw argument_error("enumerate_dissections: negative index_range");

    std::vector<Dissection> out;
    for (const Partition& p : enumerate_partitions(ground)) {
        if (p.size() > max_blocks) continue;
        if (index_range == 0) {
            out.push_back(Dissection{p.blocks, {}});
            continue;
        }
        if (p.size() > index_range) continue;
        // every ordered tuple of |P| distinct indices from 1..index_range
        std::vector<int> tuple(static_cast<std::size_t>(p.size()), 0);
        std::vector<bool> used(static_cast<std::size_t>(index_range) + 1, false);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == p.size()) {
                out.push_back(Dissection{p.blocks, tuple});
                return;
            }
            for (int idx = 1; idx <= index_range; ++idx) {
                if (used[static_cast<std::size_t>(idx)]) continue;
                used[static_cast<std::size_t>(idx)] = true;
                tuple[static_cast<std::size_t>(depth)] = idx;
                self(self, depth + 1);
                used[static_cast<std::size_t>(idx)] = false;
            }
        };
        rec(rec, 0);
    }
    return out;
}

BigUint stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n || n > kMaxStirling)
        throw argument_error("stirling2: need 0 <= k <= n <= " + std::to_string(kMaxStirling));
    // triangle S(i,j) = S(i-1,j-1) + j*S(i-1,j), exact in 128-bit
    std::vector<BigUint> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j >= 1; --j)
            row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                               static_cast<BigUint>(j) * row[static_cast<std::size_t>(j)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

long long partition_weight(const Partition& p) {
    const int m = p.size();
    if (m < 1) throw argument_error("partition_weight: empty partition");
    long long fact = 1;
    for (int i = 2; i <= m - 1; ++i) fact *= i;
    return (m % 2 == 1) ? fact : -fact;
}

long long alternating_stirling_sum(int s) {
    if (s < 1 || s > 20) throw argument_error("alternating_stirling_sum: need 1 <= s <= 20");
    __int128 acc = 0;
    __int128 kfact = 1; // (k-1)! running
    for (int k = 1; k <= s; ++k) {
        if (k >= 2) kfact *= (k - 1);
        __int128 term = static_cast<__int128>(stirling2(s, k)) * kfact;
        acc += (k % 2 == 1) ? term : -term;
    }
    return static_cast<long long>(acc);
}

} // namespace hierlab
