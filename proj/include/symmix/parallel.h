// Copyright 2026 The symmix Authors.
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

#ifndef SYMMIX_PARALLEL_H_
#define SYMMIX_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace symmix {

// Environment variable holding the worker thread count.
inline constexpr const char* kThreadsEnv = "SYMMIX_THREADS";

// Value of SYMMIX_THREADS when it is a positive integer, otherwise every
// hardware thread.
int default_thread_count();

// Runs body(i) for i in [0, count) on up to `threads` workers (0 means
// default_thread_count()). Indices are handed out in contiguous blocks. The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(size_t count, int threads,
                  const std::function<void(size_t)>& body);

}  // namespace symmix

#endif  // SYMMIX_PARALLEL_H_
