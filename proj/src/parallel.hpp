#ifndef MSTD_SRC_PARALLEL_HPP
#define MSTD_SRC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mstd::detail {

inline auto effective_workers(unsigned requested) -> unsigned
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Calls body(chunk) for every chunk in [0, chunks). Chunks are handed out in
 * increasing order from a shared counter. Any exception is rethrown on the
 * calling thread after all workers stop.
 */
template <typename Body>
auto for_each_chunk(std::uint64_t chunks, unsigned workers, Body && body) -> void
{
    workers = static_cast<unsigned>(std::min<std::uint64_t>(effective_workers(workers), chunks));
    if (workers <= 1) {
        for (std::uint64_t c = 0 ; c < chunks ; ++c)
            body(c);
        return;
    }

    std::atomic<std::uint64_t> next{ 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run = [&] {
        try {
            for (auto c = next++ ; c < chunks ; c = next++)
                body(c);
        }
        catch (...) {
            std::lock_guard lock{ failure_mutex };
            if (! failure)
                failure = std::current_exception();
            next = chunks;
        }
    };

    {
        std::vector<std::jthread> threads;
        for (unsigned t = 0 ; t < workers ; ++t)
            threads.emplace_back(run);
    }

    if (failure)
        std::rethrow_exception(failure);
}

} // namespace mstd::detail

#endif
