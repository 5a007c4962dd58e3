#include "chromascope/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace chromascope {

unsigned default_worker_count() {
    if (const char* env = std::getenv("CHROMASCOPE_THREADS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    workers = std::max(1U, workers);
    if (total < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    const std::uint64_t base = total / workers;
    const std::uint64_t extra = total % workers;
    auto bounds = [&](unsigned i) {
        const std::uint64_t begin = i * base + std::min<std::uint64_t>(i, extra);
        return std::pair{begin, begin + base + (i < extra ? 1 : 0)};
    };
    if (workers == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) {
        threads.emplace_back([&, i] {
            try {
                auto [begin, end] = bounds(i);
                fn(i, begin, end);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace chromascope
