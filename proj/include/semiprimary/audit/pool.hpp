#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace semiprimary {

/// Thread count from an explicit request, overridden by the THREADS environment variable.
inline unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(requested, 1u);
}

/// Runs every task once. Each worker owns a deque seeded round-robin, pops from its front and
/// steals from the back of the others when empty. The first exception is rethrown after all
/// workers stop; results must be written to caller-owned slots, so output order never depends
/// on scheduling.
class WorkStealingPool {
 public:
  explicit WorkStealingPool(unsigned threads) : n_(std::max(threads, 1u)) {}

  void run(const std::vector<std::function<void()>>& tasks) {
    if (n_ == 1 || tasks.size() < 2) {
      for (const auto& t : tasks) t();
      return;
    }
    struct Queue {
      std::mutex m;
      std::deque<std::size_t> q;
    };
    std::vector<Queue> queues(n_);
    for (std::size_t i = 0; i < tasks.size(); ++i) queues[i % n_].q.push_back(i);
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_m;
    auto take = [&](unsigned self, std::size_t& out) {
      {
        std::lock_guard<std::mutex> g(queues[self].m);
        if (!queues[self].q.empty()) {
          out = queues[self].q.front();
          queues[self].q.pop_front();
          return true;
        }
      }
      for (unsigned k = 1; k < n_; ++k) {
        auto& v = queues[(self + k) % n_];
        std::lock_guard<std::mutex> g(v.m);
        if (!v.q.empty()) {
          out = v.q.back();
          v.q.pop_back();
          return true;
        }
      }
      return false;
    };
    auto worker = [&](unsigned self) {
      std::size_t i = 0;
      while (!failed && take(self, i)) {
        try {
          tasks[i]();
        } catch (...) {
          std::lock_guard<std::mutex> g(error_m);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    };
    std::vector<std::thread> ts;
    for (unsigned k = 1; k < n_; ++k) ts.emplace_back(worker, k);
    worker(0);
    for (auto& t : ts) t.join();
    if (error) std::rethrow_exception(error);
  }

 private:
  unsigned n_;
};

}  // namespace semiprimary
