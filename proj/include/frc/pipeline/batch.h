// Copyright 2026 The FRC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRC_PIPELINE_BATCH_H_
#define FRC_PIPELINE_BATCH_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace frc {

// Outcome of one record in a batch: a value (index 0) or the failure
// message (index 1).
template <typename T>
using BatchResult = std::variant<T, std::string>;

// Runs fn(i) for i in [0, count) on up to `workers` threads. Results keep
// input order regardless of completion order; an exception thrown for one
// record is captured in its slot and the rest keep running.
template <typename T, typename Fn>
std::vector<BatchResult<T>> run_batch(std::size_t count, int workers, Fn fn) {
  std::vector<BatchResult<T>> results(
      count, BatchResult<T>(std::in_place_index<1>, "not run"));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i].template emplace<0>(fn(i));
      } catch (const std::exception& e) {
        results[i].template emplace<1>(e.what());
      }
    }
  };
  std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    work();
    return results;
  }
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return results;
}

}  // namespace frc

#endif  // FRC_PIPELINE_BATCH_H_
