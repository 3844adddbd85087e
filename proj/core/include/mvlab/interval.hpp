#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

namespace mvlab {

// Closed integer interval [lo, hi]. A point interval is an exact value.
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    static Interval exact(std::int64_t v) { return {v, v}; }

    bool is_exact() const { return lo == hi; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    // a - [lo, hi] = [a - hi, a - lo]
    friend Interval operator-(std::int64_t a, const Interval& x) { return {a - x.hi, a - x.lo}; }
    friend Interval operator*(std::int64_t a, const Interval& x) {
        return a >= 0 ? Interval{a * x.lo, a * x.hi} : Interval{a * x.hi, a * x.lo};
    }
    friend Interval operator+(const Interval& x, std::int64_t a) { return {x.lo + a, x.hi + a}; }

    friend Interval max(const Interval& a, const Interval& b) {
        return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    std::string to_string() const {
        return is_exact() ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

} // namespace mvlab
