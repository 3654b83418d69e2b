#include "rsylv/task_pool.hpp"

namespace rsylv {

TaskPool::TaskPool(std::size_t workers) {
    threads_.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i)
        threads_.emplace_back([this] { worker_loop(); });
}

TaskPool::~TaskPool() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        stop_ = true;
    }
    work_cv_.notify_all();
    for (std::thread& t : threads_) t.join();
}

void TaskPool::submit(std::function<void()> task) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        queue_.push_back(std::move(task));
    }
    work_cv_.notify_one();
}

void TaskPool::wait_idle() {
    std::unique_lock<std::mutex> lock(mu_);
    idle_cv_.wait(lock, [this] { return queue_.empty() && running_ == 0; });
    if (error_) {
        std::exception_ptr e = error_;
        error_ = nullptr;
        std::rethrow_exception(e);
    }
}

void TaskPool::worker_loop() {
    std::unique_lock<std::mutex> lock(mu_);
    for (;;) {
        work_cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
        if (stop_ && queue_.empty()) return;
        std::function<void()> task = std::move(queue_.front());
        queue_.pop_front();
        ++running_;
        const bool skip = (error_ != nullptr); // abort outstanding work after a failure
        lock.unlock();
        if (!skip) {
            try {
                task();
            } catch (...) {
                std::lock_guard<std::mutex> g(mu_);
                if (!error_) error_ = std::current_exception();
            }
        }
        lock.lock();
        --running_;
        if (queue_.empty() && running_ == 0) idle_cv_.notify_all();
    }
}

} // namespace rsylv
