#include "perfarr/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace perfarr {

std::size_t worker_count() {
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PERFECT_ARRAYS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
    }
    return n;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& chunk) {
    if (n <= 0) return;
    const std::size_t workers = std::min<std::size_t>(worker_count(), static_cast<std::size_t>(n));
    if (workers <= 1) {
        chunk(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t per = n / static_cast<std::int64_t>(workers);
    const std::int64_t rem = n % static_cast<std::int64_t>(workers);
    std::int64_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::int64_t end = begin + per + (static_cast<std::int64_t>(w) < rem ? 1 : 0);
        pool.emplace_back(chunk, begin, end);
        begin = end;
    }
    for (std::thread& t : pool) t.join();
}

} // namespace perfarr
