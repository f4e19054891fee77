#ifndef CAPA_ISAC_PARALLEL_HPP
#define CAPA_ISAC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace capa_isac {

/// Number of chunks a parallel_chunks call will split n items into.
inline std::size_t parallel_chunk_count(long n) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<std::size_t>(std::min<long>(n, static_cast<long>(hw)));
}

/// Splits [0, n) into contiguous chunks and runs fn(chunk_index, lo, hi) on a
/// worker thread per chunk. Callers own all cross-chunk reduction, which
/// keeps results deterministic regardless of thread count.
template <typename Fn>
void parallel_chunks(long n, Fn&& fn) {
    if (n <= 0) return;
    const std::size_t chunks = parallel_chunk_count(n);
    if (chunks <= 1) {
        fn(std::size_t{0}, 0L, n);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    const long base = n / static_cast<long>(chunks);
    const long extra = n % static_cast<long>(chunks);
    long lo = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const long hi = lo + base + (static_cast<long>(c) < extra ? 1 : 0);
        workers.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
        lo = hi;
    }
    for (std::thread& w : workers) w.join();
}

/// Order-preserving parallel map: results[i] = fn(i).
template <typename T, typename Fn>
std::vector<T> parallel_map(long n, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(n));
    parallel_chunks(n, [&](std::size_t, long lo, long hi) {
        for (long i = lo; i < hi; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    });
    return out;
}

}  // namespace capa_isac

#endif
