#include "extremal/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace extremal {

int thread_count() {
    static const int cached = [] {
        if (const char* env = std::getenv("EXTREMAL_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1)
                return v;
            return 1;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(hw == 0 ? 1 : (hw > 8 ? 8 : hw));
    }();
    return cached;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = thread_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int spawn = static_cast<int>(count < static_cast<std::size_t>(workers) ? count : static_cast<std::size_t>(workers));
    pool.reserve(spawn - 1);
    for (int t = 0; t < spawn - 1; ++t)
        pool.emplace_back(body);
    body();
    for (auto& th : pool)
        th.join();
}

} // namespace extremal
