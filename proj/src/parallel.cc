#include "rewire/parallel.h"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rewire {

size_t worker_count() {
    size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
    const char *env = std::getenv("REWIRE_THREADS");
    if (env == nullptr || *env == '\0') {
        return hw;
    }
    try {
        long v = std::stol(env);
        if (v <= 0) {
            return hw;
        }
        return static_cast<size_t>(v);
    } catch (const std::exception &) {
        return hw;
    }
}

void parallel_for(size_t count, const std::function<void(size_t)> &body) {
    size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        threads.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace rewire
