#include "clusterf2/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace clusterf2 {
namespace {

std::atomic<unsigned> g_threads{0};

unsigned resolved_threads() noexcept {
  unsigned n = g_threads.load(std::memory_order_relaxed);
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

}  // namespace

void set_thread_count(unsigned n) noexcept { g_threads.store(n, std::memory_order_relaxed); }

unsigned thread_count() noexcept { return resolved_threads(); }

std::size_t chunk_count(std::size_t n) noexcept {
  if (n == 0) return 0;
  return std::min<std::size_t>(resolved_threads(), n);
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t* chunks_out) {
  const std::size_t chunks = chunk_count(n);
  if (chunks_out) *chunks_out = chunks;
  if (chunks == 0) return;
  if (chunks == 1) {
    body(0, 0, n);
    return;
  }

  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(chunks);
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = n * c / chunks;
    const std::size_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace clusterf2
