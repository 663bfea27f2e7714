#ifndef NEUROKEX_PARALLEL_HPP
#define NEUROKEX_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace neurokex {

// Runs f(i) for i in [0, n) on a small thread pool. Callers write results
// into presized per-index slots, so output order is independent of
// scheduling. The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f, unsigned threads = 0)
{
    if (n == 0)
        return;
    if (threads == 0)
        threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    if (threads > n)
        threads = static_cast<unsigned>(n);

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load())
                return;
            try {
                f(i);
            }
            catch (...) {
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failed.load())
        std::rethrow_exception(error);
}

} // namespace neurokex

#endif // NEUROKEX_PARALLEL_HPP
