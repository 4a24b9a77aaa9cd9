// Copyright 2026 The ctiqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace ctiqa {

// Thread-count control shared by every OpenMP kernel. Deterministic mode pins
// execution to one thread; the kernels are written so that results do not
// depend on the thread count anyway, but stages that reduce across images
// (dataset statistics, batch losses) rely on this to fix reduction order.
void set_num_workers(int workers);
int num_workers();

void set_deterministic(bool on);
bool deterministic();

}  // namespace ctiqa

#include <cstdint>
#include <exception>
#include <mutex>

namespace ctiqa {

// Runs f(i) for i in [0, n) across OpenMP threads. The first exception thrown
// by any iteration is rethrown on the calling thread after the loop.
template <typename F>
void parallel_for(std::int64_t n, F&& f) {
  std::exception_ptr error;
  std::mutex guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace ctiqa
