#pragma once

#include <cstddef>
#include <memory>

#include <oneapi/tbb/global_control.h>
#include <oneapi/tbb/parallel_for.h>
#include <oneapi/tbb/task_arena.h>

namespace gcdvss::detail {

// Runs body(0..n-1), on a private TBB arena when threads > 1. Callers write
// results into per-index slots, so the outcome never depends on scheduling.
// The requested thread count is honoured even above the core count.
class Executor {
public:
  explicit Executor(unsigned threads) {
    if (threads > 1) {
      limit_ = std::make_unique<tbb::global_control>(
          tbb::global_control::max_allowed_parallelism, threads);
      arena_ = std::make_unique<tbb::task_arena>(static_cast<int>(threads));
    }
  }

  unsigned threads() const noexcept {
    return arena_ ? static_cast<unsigned>(arena_->max_concurrency()) : 1u;
  }

  template <class Body>
  void for_each(std::size_t n, const Body& body) {
    if (!arena_ || n < 2) {
      for (std::size_t i = 0; i < n; ++i) body(i);
      return;
    }
    arena_->execute([&] {
      tbb::parallel_for(std::size_t{0}, n, [&](std::size_t i) { body(i); });
    });
  }

private:
  std::unique_ptr<tbb::global_control> limit_;
  std::unique_ptr<tbb::task_arena> arena_;
};

}  // namespace gcdvss::detail
