#include "anisoheat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace anisoheat {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ANISOHEAT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || cap < 1) throw std::invalid_argument("ANISOHEAT_THREADS: positive integer required");
        hw = std::min<long>(hw, cap);
    }
    return hw;
}

namespace {
constexpr std::size_t kChunk = 2048;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    const int workers = worker_count();
    if (n == 0) return;
    if (workers == 1 || n < 2 * kChunk) {
        fn(0, n);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t b = next.fetch_add(kChunk);
            if (b >= n) return;
            fn(b, std::min(n, b + kChunk));
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
    if (n == 0) return 0.0;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_for(n, [&](std::size_t b, std::size_t e) {
        while (b < e) {
            const std::size_t c = b / kChunk;
            const std::size_t stop = std::min(e, (c + 1) * kChunk);
            double s = 0.0;
            for (std::size_t i = b; i < stop; ++i) s += term(i);
            partial[c] += s;
            b = stop;
        }
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

}  // namespace anisoheat
