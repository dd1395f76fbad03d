#ifndef GRP_UTIL_HPP
#define GRP_UTIL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace grp {

/// Thread-safe build-once cache. After the first get() the value is immutable
/// and reads are lock-free.
template <typename T>
class Lazy {
 public:
  template <typename Builder>
  const T& get(Builder&& build) const {
    const T* p = ptr_.load(std::memory_order_acquire);
    if (p) return *p;
    std::lock_guard<std::mutex> lock(mu_);
    if (!value_) {
      value_ = std::make_unique<T>(build());
      ptr_.store(value_.get(), std::memory_order_release);
    }
    return *value_;
  }

  bool built() const { return ptr_.load(std::memory_order_acquire) != nullptr; }

 private:
  mutable std::atomic<const T*> ptr_{nullptr};
  mutable std::mutex mu_;
  mutable std::unique_ptr<T> value_;
};

/// Run fn(i) for i in [0, n) on a small worker pool. jobs <= 1 runs inline.
/// Exceptions are rethrown (first one wins) after all workers finish.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = hw ? hw : 1;
  if (jobs > n) jobs = static_cast<unsigned>(n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(n);  // drain remaining work
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace grp

#endif  // GRP_UTIL_HPP
