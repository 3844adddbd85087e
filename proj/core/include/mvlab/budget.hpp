#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace mvlab {

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    std::chrono::milliseconds time_limit{60'000};

    static SearchBudget unlimited() {
        return {UINT64_MAX, std::chrono::milliseconds::max()};
    }
};

// Shared node/time accounting for one search. Safe to tick from several workers.
class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    BudgetTracker(const BudgetTracker&) = delete;
    BudgetTracker& operator=(const BudgetTracker&) = delete;

    // Counts one node; returns false once the budget is exhausted.
    bool tick() {
        if (exhausted_.load(std::memory_order_relaxed)) return false;
        auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget_.max_nodes) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((n & 0x3ff) == 0 && budget_.time_limit != std::chrono::milliseconds::max()) {
            if (std::chrono::steady_clock::now() - start_ > budget_.time_limit) {
                exhausted_.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

// Worker cap: MVLAB_THREADS if set and positive, otherwise hardware concurrency.
unsigned worker_count();

} // namespace mvlab
