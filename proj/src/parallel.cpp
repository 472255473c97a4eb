#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace harmroot::detail {

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("HARMROOT_THREADS")) {
        try {
            budget = std::stoi(env);
        } catch (...) {
            budget = 1;
        }
    }
    return std::clamp(budget, 1, 256);
}

void parallel_for(int n, const std::function<void(int, int)>& fn) {
    if (n <= 0) return;
    const int threads = std::min(thread_budget(), n);
    if (threads == 1) {
        fn(0, n);
        return;
    }
    const int chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(fn, begin, end);
    }
    for (auto& th : pool) th.join();
}

}  // namespace harmroot::detail
