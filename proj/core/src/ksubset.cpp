#include "mvlab/ksubset.hpp"

#include <array>

#include "mvlab/errors.hpp"

namespace mvlab {

namespace {

struct BinomialTable {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> c{};
    constexpr BinomialTable() {
        for (int n = 0; n <= kMaxGround; ++n) {
            c[n][0] = 1;
            for (int r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r <= n - 1 ? c[n - 1][r] : 0);
        }
    }
};

constexpr BinomialTable kBinomials{};

} // namespace

std::uint64_t binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n || n > kMaxGround) return 0;
    return kBinomials.c[n][r];
}

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

KSubset::KSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxGround) throw ConstraintError("ground-set", "n must lie in [0, 64], got " + std::to_string(n));
    if (bits & ~full_mask(n)) throw DomainError("subset has elements outside [" + std::to_string(n) + "]");
}

KSubset::KSubset(int n, std::initializer_list<int> elements)
    : KSubset(from_elements(n, std::span<const int>(elements.begin(), elements.size()))) {}

KSubset KSubset::from_elements(int n, std::span<const int> elements) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
        auto bit = std::uint64_t{1} << (e - 1);
        if (bits & bit) throw DomainError("duplicate element " + std::to_string(e));
        bits |= bit;
    }
    return {n, bits};
}

KSubset KSubset::full(int n) { return {n, full_mask(n)}; }

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (auto b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

KSubset KSubset::complement() const { return {n_, full_mask(n_) & ~bits_}; }

std::string KSubset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

std::uint64_t colex_rank(std::uint64_t bits) {
    std::uint64_t rank = 0;
    int i = 1;
    for (auto b = bits; b; b &= b - 1, ++i) rank += binomial(std::countr_zero(b), i);
    return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, int r) {
    std::uint64_t bits = 0;
    int p = kMaxGround - 1;
    for (int i = r; i >= 1; --i) {
        while (binomial(p, i) > rank) --p;
        bits |= std::uint64_t{1} << p;
        rank -= binomial(p, i);
        --p;
    }
    return bits;
}

} // namespace mvlab
