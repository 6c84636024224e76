#pragma once

#include <cstddef>
#include <functional>

namespace clusterf2 {

// 0 selects the machine's logical core count.
void set_thread_count(unsigned n) noexcept;
unsigned thread_count() noexcept;

// Splits [0, n) into contiguous chunks, one per worker, and calls
// body(chunk, begin, end). Chunk boundaries depend only on n and the worker
// count, so callers that merge per-chunk results in chunk order get output
// independent of scheduling.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t* chunks_out = nullptr);

std::size_t chunk_count(std::size_t n) noexcept;

}  // namespace clusterf2
