#pragma once

#include <cstdint>

namespace snaphdr {

// Sets the worker count for all parallel_for loops (0 = hardware default).
void set_num_threads(int n);
int num_threads();

// Static partition of [0, n). Each index is processed by exactly one worker
// with a fixed serial order inside the body, so results are bit-identical
// for any thread count as long as distinct indices write disjoint outputs.
template <typename Fn>
void parallel_for(std::int64_t n, const Fn& body);

namespace detail {
void run_parallel(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx);
}

template <typename Fn>
void parallel_for(std::int64_t n, const Fn& body) {
  detail::run_parallel(
      n, [](void* ctx, std::int64_t i) { (*static_cast<const Fn*>(ctx))(i); },
      const_cast<void*>(static_cast<const void*>(&body)));
}

}  // namespace snaphdr
