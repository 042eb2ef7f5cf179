// Copyright 2026 The Distract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTRACT_PIPELINE_H_
#define DISTRACT_PIPELINE_H_

// Ordered parallel map over the lines of a stream.
//
// Lines are numbered from 1 and handed to a pool of `workers` threads.
// Results are buffered and passed to `sink` strictly in line order, one at
// a time, so the sink is the single serialization point and its output does
// not depend on the worker count. At most `window` lines are in flight
// between the reader and the sink. A sink returning false stops the run
// early; an exception from `work` or `sink` stops it and is rethrown.

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace distract {

template <typename Result>
void MapLinesOrdered(
    std::istream& in, int workers,
    const std::function<Result(std::size_t, const std::string&)>& work,
    const std::function<bool(std::size_t, Result&&)>& sink) {
  if (workers <= 1) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!sink(number, work(number, line))) return;
    }
    return;
  }

  const std::size_t window = static_cast<std::size_t>(workers) * 64;
  std::mutex mu;
  std::condition_variable queue_cv;   // queue non-empty or done
  std::condition_variable window_cv;  // room in the window
  std::deque<std::pair<std::size_t, std::string>> queue;
  std::map<std::size_t, Result> finished;
  std::size_t next_to_emit = 1;
  std::size_t read_count = 0;
  bool input_done = false;
  bool stop = false;
  std::exception_ptr error;

  auto fail = [&](std::exception_ptr e) {
    if (!error) error = e;
    stop = true;
    queue_cv.notify_all();
    window_cv.notify_all();
  };

  auto worker = [&] {
    for (;;) {
      std::pair<std::size_t, std::string> item;
      {
        std::unique_lock<std::mutex> lock(mu);
        queue_cv.wait(lock, [&] { return stop || !queue.empty() || input_done; });
        if (stop || queue.empty()) return;
        item = std::move(queue.front());
        queue.pop_front();
      }
      std::optional<Result> result;
      try {
        result.emplace(work(item.first, item.second));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        fail(std::current_exception());
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      if (stop) return;
      finished.emplace(item.first, std::move(*result));
      for (auto it = finished.find(next_to_emit); it != finished.end();
           it = finished.find(next_to_emit)) {
        Result ready = std::move(it->second);
        finished.erase(it);
        bool keep_going = false;
        try {
          keep_going = sink(next_to_emit, std::move(ready));
        } catch (...) {
          fail(std::current_exception());
          return;
        }
        ++next_to_emit;
        window_cv.notify_all();
        if (!keep_going) {
          stop = true;
          queue_cv.notify_all();
          return;
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);

  std::string line;
  for (;;) {
    if (!std::getline(in, line)) break;
    std::unique_lock<std::mutex> lock(mu);
    window_cv.wait(lock,
                   [&] { return stop || read_count + 1 - next_to_emit < window; });
    if (stop) break;
    queue.emplace_back(++read_count, std::move(line));
    queue_cv.notify_one();
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    input_done = true;
    queue_cv.notify_all();
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace distract

#endif  // DISTRACT_PIPELINE_H_
