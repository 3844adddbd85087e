#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mvlab {

inline constexpr int kMaxGround = 64;

// C(n, r) for 0 <= n <= 64; zero when r is out of range. Exact in 64 bits.
std::uint64_t binomial(int n, int r);

// Subset of the ground set [n] = {1, ..., n}. Element i lives in bit i-1.
class KSubset {
public:
    KSubset() = default;
    KSubset(int n, std::uint64_t bits);
    KSubset(int n, std::initializer_list<int> elements);
    static KSubset from_elements(int n, std::span<const int> elements);
    static KSubset full(int n);

    int n() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int element) const {
        return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U);
    }

    std::vector<int> elements() const;
    KSubset complement() const;

    bool is_subset_of(const KSubset& o) const { return (bits_ & ~o.bits_) == 0; }
    int intersection_size(const KSubset& o) const { return std::popcount(bits_ & o.bits_); }
    bool disjoint(const KSubset& o) const { return (bits_ & o.bits_) == 0; }

    // "{1,2,5}"
    std::string to_string() const;

    friend bool operator==(const KSubset&, const KSubset&) = default;

private:
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

std::uint64_t full_mask(int n);

// Colex rank of a bit mask among all masks of the same popcount:
// sum over i of C(p_i, i) where p_1 < p_2 < ... are the 0-based set bit positions.
std::uint64_t colex_rank(std::uint64_t bits);

// Inverse of colex_rank for r-element masks.
std::uint64_t colex_unrank(std::uint64_t rank, int r);

// Next mask with the same popcount in colex (numeric) order (Gosper's hack).
inline std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

// Calls f(mask) for every r-element submask of `universe`, in colex order.
template <class F>
void for_each_submask_of_size(std::uint64_t universe, int r, F&& f) {
    int m = std::popcount(universe);
    if (r < 0 || r > m) return;
    std::uint64_t pos[64];
    int idx = 0;
    for (std::uint64_t u = universe; u; u &= u - 1) pos[idx++] = u & (~u + 1);
    if (r == 0) {
        f(std::uint64_t{0});
        return;
    }
    int c[65];
    for (int i = 0; i < r; ++i) c[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i = 0; i < r; ++i) mask |= pos[c[i]];
        f(mask);
        // colex successor of the index combination
        int j = 0;
        while (j + 1 < r && c[j] + 1 == c[j + 1]) {
            c[j] = j;
            ++j;
        }
        if (c[j] + 1 >= m) return;
        ++c[j];
    }
}

} // namespace mvlab
