// Copyright (c) the PSWA Codec Project
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

#include "pswa/threading.h"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pswa {

namespace {

int g_workers = 0;

int default_workers() {
  if (const char* env = std::getenv("PSWA_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

}  // namespace

void set_workers(int n) { g_workers = n >= 1 ? n : 1; }

int workers() {
  if (g_workers == 0) g_workers = default_workers();
  return g_workers;
}

void parallel_for(int64_t begin, int64_t end,
                  const std::function<void(int64_t)>& fn) {
  int64_t n = end - begin;
  if (n <= 0) return;
  int w = workers();
  if (w == 1 || n == 1) {
    for (int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  if (int64_t(w) > n) w = int(n);
  // Dynamic chunks: assignment of indices to workers varies run to run,
  // but each index writes only its own outputs, so bytes do not.
  std::atomic<int64_t> next(begin);
  const int64_t chunk = std::max<int64_t>(1, n / (int64_t(w) * 8));
  std::vector<std::thread> pool;
  pool.reserve(w - 1);
  auto body = [&] {
    for (;;) {
      int64_t i0 = next.fetch_add(chunk);
      if (i0 >= end) return;
      int64_t i1 = std::min(end, i0 + chunk);
      for (int64_t i = i0; i < i1; ++i) fn(i);
    }
  };
  for (int i = 0; i < w - 1; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

}  // namespace pswa
