#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lpm/error.hpp"

namespace lpm {

inline constexpr int kMaxVars = 16;

// A subset of {1..n}, stored as a bitmask where bit i stands for element i+1.
class SubsetMask {
public:
    SubsetMask() = default;
    SubsetMask(int n, std::uint32_t bits) : n_(n), bits_(bits) {
        require(n >= 0 && n <= kMaxVars, "SubsetMask: n must be in [0, 16]");
        require((bits >> n) == 0, "SubsetMask: bits reference an index > n");
    }

    // From 1-based indices; duplicates are rejected.
    static SubsetMask from_indices(int n, const std::vector<int>& one_based) {
        std::uint32_t bits = 0;
        for (int i : one_based) {
            require(i >= 1 && i <= n, "SubsetMask: index out of range");
            const std::uint32_t b = 1u << (i - 1);
            require((bits & b) == 0, "SubsetMask: duplicate index");
            bits |= b;
        }
        return SubsetMask(n, bits);
    }
    static SubsetMask from_indices(int n, std::initializer_list<int> one_based) {
        return from_indices(n, std::vector<int>(one_based));
    }
    static SubsetMask full(int n) { return SubsetMask(n, full_bits(n)); }
    static SubsetMask empty(int n) { return SubsetMask(n, 0); }

    static std::uint32_t full_bits(int n) {
        return n >= 32 ? ~0u : ((1u << n) - 1u);
    }

    int n() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int zero_based) const { return (bits_ >> zero_based) & 1u; }

    // Ascending 1-based indices.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i + 1);
        return out;
    }
    std::vector<int> zero_based() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    SubsetMask complement() const { return SubsetMask(n_, full_bits(n_) & ~bits_); }
    bool is_subset_of(const SubsetMask& o) const { return (bits_ & ~o.bits_) == 0; }

    friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
        require(a.n_ == b.n_, "SubsetMask: ground set mismatch");
        return SubsetMask(a.n_, a.bits_ | b.bits_);
    }
    friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
        require(a.n_ == b.n_, "SubsetMask: ground set mismatch");
        return SubsetMask(a.n_, a.bits_ & b.bits_);
    }
    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

private:
    int n_ = 0;
    std::uint32_t bits_ = 0;
};

// All k-subsets of an n-set in lexicographic order of their sorted index lists.
inline std::vector<std::uint32_t> k_subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace lpm
