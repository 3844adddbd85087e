#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mvlab {

// Dynamic bit set over dense indices [0, size). Word layout is little-endian
// (index 0 is bit 0 of word 0), so comparing two masks word-by-word from the
// top is the same as comparing the index sets in colex order.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // (*this & a & ~b) != 0 without materializing the temporary.
    bool intersects_minus(const Bits& a, const Bits& minus) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & a.words_[i] & ~minus.words_[i]) return true;
        return false;
    }

    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    // Returns size() when no further bit is set.
    std::size_t find_first() const { return find_next_from(0); }
    std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                auto b = static_cast<std::size_t>(std::countr_zero(word));
                f(w * 64 + b);
                word &= word - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    // Colex comparison of the represented index sets.
    friend bool colex_less(const Bits& a, const Bits& b) {
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        }
        return false;
    }

    friend bool operator==(const Bits& a, const Bits& b) = default;

private:
    std::size_t find_next_from(std::size_t i) const {
        if (i >= size_) return size_;
        std::size_t w = i >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            if (++w >= words_.size()) return size_;
            word = words_[w];
        }
    }

    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mvlab
