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

#ifndef PSWA_THREADING_H_
#define PSWA_THREADING_H_

#include <cstdint>
#include <functional>

namespace pswa {

// Worker count for parallel_for. Defaults to PSWA_THREADS if set, else 1.
void set_workers(int n);
int workers();

// Runs fn(i) for i in [begin, end). Work is partitioned over indices only;
// each index is computed by exactly one worker from read-only inputs, so the
// result is byte-identical for any worker count.
void parallel_for(int64_t begin, int64_t end,
                  const std::function<void(int64_t)>& fn);

}  // namespace pswa

#endif  // PSWA_THREADING_H_
