#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qccs {

/// Worker count: `requested` if nonzero, else QCCS_THREADS if set, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Splits [0, count) into contiguous chunks and runs body(begin, end, chunk) on up to
/// `threads` workers. Chunk c always covers the same range regardless of scheduling,
/// so per-chunk results merged in chunk order are deterministic.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned threads, std::size_t chunks, Body&& body) {
    if (count == 0 || chunks == 0) {
        return;
    }
    chunks = std::min(chunks, count);
    const auto bounds = [&](std::size_t c) { return count * c / chunks; };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            body(bounds(c), bounds(c + 1), c);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks; c += threads) {
                body(bounds(c), bounds(c + 1), c);
            }
        });
    }
}

} // namespace qccs
