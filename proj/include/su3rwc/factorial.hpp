#pragma once

#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>

#include "su3rwc/rational.hpp"

namespace su3rwc {

// Append-only factorial cache. Entries live in a deque so references stay
// stable across growth; readers only touch indices below the published size,
// writers extend under a lock.
class FactorialTable {
  public:
    static const BigInt& get(long n) {
        if (n < 0) throw std::domain_error("factorial of negative integer");
        FactorialTable& t = instance();
        std::size_t need = static_cast<std::size_t>(n) + 1;
        if (t.size_.load(std::memory_order_acquire) < need) t.grow(need);
        return t.cache_[static_cast<std::size_t>(n)];
    }

  private:
    FactorialTable() {
        cache_.emplace_back(1);
        size_.store(1, std::memory_order_release);
    }

    static FactorialTable& instance() {
        static FactorialTable table;
        return table;
    }

    void grow(std::size_t need) {
        std::lock_guard<std::mutex> lock(mutex_);
        std::size_t have = size_.load(std::memory_order_relaxed);
        while (have < need) {
            cache_.push_back(cache_.back() * static_cast<unsigned long>(have));
            ++have;
            size_.store(have, std::memory_order_release);
        }
    }

    std::deque<BigInt> cache_;
    std::atomic<std::size_t> size_{0};
    std::mutex mutex_;
};

inline const BigInt& factorial(long n) { return FactorialTable::get(n); }

}  // namespace su3rwc
