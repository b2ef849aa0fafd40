#include "schwarz/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace schwarz {

unsigned thread_count() {
    if (const char* env = std::getenv("SPHERICAL_SCHWARZ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

namespace {

// fn is applied to every index of one contiguous chunk per worker.
template <typename ChunkFn>
void run_chunks(std::size_t n, ChunkFn&& chunk_fn) {
    unsigned workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        chunk_fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t base = n / workers, extra = n % workers, begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t len = base + (w < extra ? 1 : 0);
        pool.emplace_back(chunk_fn, w, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

} // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    run_chunks(n, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
}

double parallel_min(std::size_t n, const std::function<double(std::size_t)>& fn) {
    if (n == 0) return std::numeric_limits<double>::infinity();
    unsigned workers = std::min<std::size_t>(thread_count(), n);
    std::vector<double> chunk_min(std::max(1u, workers), std::numeric_limits<double>::infinity());
    run_chunks(n, [&](unsigned w, std::size_t lo, std::size_t hi) {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = lo; i < hi; ++i) m = std::min(m, fn(i));
        chunk_min[w] = m;
    });
    double m = std::numeric_limits<double>::infinity();
    for (double v : chunk_min) m = std::min(m, v);
    return m;
}

double parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn) {
    return -parallel_min(n, [&](std::size_t i) { return -fn(i); });
}

} // namespace schwarz
