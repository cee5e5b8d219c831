#ifndef GALEPOLY_PARALLEL_HPP
#define GALEPOLY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace galepoly {

/// Execution knobs shared by the predicates that fan out over many LPs.
struct ExecOptions
{
    unsigned threads = 1;
};

namespace detail {

template <typename Body>
void runWorkers(std::size_t count, unsigned threads, Body&& body)
{
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1)
    {
        body();
        return;
    }
    std::exception_ptr failure;
    std::mutex failureMutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
        pool.emplace_back([&] {
            try
            {
                body();
            }
            catch (...)
            {
                std::lock_guard lock(failureMutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace detail

/// Evaluates fn(i) for i in [0, count); results are stored by index.
template <typename Fn>
auto parallelMap(std::size_t count, const ExecOptions& exec, Fn&& fn)
{
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> slots(count);
    std::atomic<std::size_t> next{0};
    detail::runWorkers(count, exec.threads, [&] {
        for (std::size_t i = next++; i < count; i = next++)
            slots[i].emplace(fn(i));
    });
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

/**
 * Least i in [0, count) with pred(i), or nullopt. Indices above the best hit
 * found so far are skipped, so the answer matches a serial scan regardless of
 * thread count.
 */
template <typename Pred>
std::optional<std::size_t> firstIndexWhere(std::size_t count, const ExecOptions& exec, Pred&& pred)
{
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    detail::runWorkers(count, exec.threads, [&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
            if (i >= best.load())
                break;
            if (pred(i))
            {
                std::size_t current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i))
                {
                }
                break;
            }
        }
    });
    if (best.load() == count)
        return std::nullopt;
    return best.load();
}

}  // namespace galepoly

#endif  // GALEPOLY_PARALLEL_HPP
