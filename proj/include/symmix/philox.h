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

#ifndef SYMMIX_PHILOX_H_
#define SYMMIX_PHILOX_H_

#include <array>
#include <cstdint>

namespace symmix {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11), matching the
// Random123 reference outputs.
struct Philox4x32 {
  using Counter = std::array<uint32_t, 4>;
  using Key = std::array<uint32_t, 2>;

  static constexpr const char* kName = "philox4x32-10";
  static constexpr int kRounds = 10;

  static Counter Block(Counter counter, Key key);
};

// Independent stream of 32-bit words for one trajectory. The key is the
// 64-bit seed and the counter is (block index, trajectory index), so every
// (seed, trajectory) pair owns a disjoint region of the counter space.
class TrajectoryStream {
 public:
  // Bumped whenever the mapping from (seed, index) to draws changes.
  static constexpr const char* kVersion = "philox4x32-10/stream-v1";

  TrajectoryStream(uint64_t seed, uint64_t trajectory);

  uint32_t Next();
  // Uniform on [0, bound), bound >= 1. Lemire's multiply-shift with
  // rejection, so exactly uniform.
  uint32_t Uniform(uint32_t bound);

 private:
  void Refill();

  Philox4x32::Key key_;
  uint64_t trajectory_;
  uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
};

}  // namespace symmix

#endif  // SYMMIX_PHILOX_H_
