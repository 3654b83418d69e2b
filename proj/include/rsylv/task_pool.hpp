#pragma once

// Fixed-size worker pool. Tasks may submit further tasks; wait_idle() blocks
// until the queue drains and rethrows the first task exception, after which
// queued tasks are skipped (outstanding work is aborted, not executed).

#include <condition_variable>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rsylv {

class TaskPool {
public:
    explicit TaskPool(std::size_t workers);
    ~TaskPool();

    TaskPool(const TaskPool&) = delete;
    TaskPool& operator=(const TaskPool&) = delete;

    void submit(std::function<void()> task);

    /// Blocks until no task is queued or running; rethrows the first failure.
    void wait_idle();

private:
    void worker_loop();

    std::mutex mu_;
    std::condition_variable work_cv_;
    std::condition_variable idle_cv_;
    std::deque<std::function<void()>> queue_;
    std::size_t running_ = 0;
    bool stop_ = false;
    std::exception_ptr error_;
    std::vector<std::thread> threads_;
};

} // namespace rsylv
