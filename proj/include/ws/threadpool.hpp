#pragma once
#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ws {

/// Fork-join pool for the compute kernels. parallel_chunks splits [0, n)
/// into exactly `threads()` contiguous ranges, so every output element is
/// owned by one worker and reductions inside a range run sequentially --
/// results are bit-identical for any thread count.
class ThreadPool {
public:
    explicit ThreadPool(int threads);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int threads() const { return nthreads_; }

    /// fn(begin, end) on contiguous chunks covering [0, n).
    void parallel_chunks(size_t n, const std::function<void(size_t, size_t)>& fn);

private:
    void worker_loop(int id);

    int nthreads_;
    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_start_, cv_done_;
    const std::function<void(size_t, size_t)>* job_ = nullptr;
    size_t job_n_ = 0;
    uint64_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

}  // namespace ws
