#include "mst/util.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace mst {

int worker_count() {
    const char *env = std::getenv("MST_THREADS");
    if (!env)
        return 1;
    int requested = 1;
    try {
        requested = std::stoi(env);
    } catch (...) {
        return 1;
    }
    if (requested < 1)
        return 1;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    return requested < hw ? requested : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn) {
    const int workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(workers))
                fn(i);
        });
    }
    for (auto &t : pool)
        t.join();
}

} // namespace mst
