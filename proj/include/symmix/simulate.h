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

#ifndef SYMMIX_SIMULATE_H_
#define SYMMIX_SIMULATE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symmix/mixing.h"
#include "symmix/partition.h"
#include "symmix/philox.h"

namespace symmix {

// Permutations are 0-based images: perm[i] is the image of i.
using Permutation = std::vector<int>;

Partition cycle_type(std::span<const int> perm);

// Uniform n-cycle: 0 followed by a uniform shuffle of 1..n-1, read as a cycle.
Permutation sample_ncycle(int n, TrajectoryStream& stream);

// One trajectory: n-cycle then k left-multiplied uniform transpositions.
Permutation sample_chain(const ChainSpec& spec, TrajectoryStream& stream);

struct SimulationReport {
  ChainSpec spec;
  uint64_t trials = 0;
  uint64_t seed = 0;
  std::string generator = TrajectoryStream::kVersion;
  std::map<Partition, uint64_t> class_counts;
  std::map<int, uint64_t> fixed_point_histogram;
  // Mean of fix^r for r = 1, 2, ...
  std::vector<double> empirical_moments;

  friend bool operator==(const SimulationReport& a, const SimulationReport& b) {
    return a.spec.n == b.spec.n && a.spec.k == b.spec.k &&
           a.trials == b.trials && a.seed == b.seed &&
           a.generator == b.generator && a.class_counts == b.class_counts &&
           a.fixed_point_histogram == b.fixed_point_histogram &&
           a.empirical_moments == b.empirical_moments;
  }
};

inline constexpr int kDefaultMomentCount = 4;

// Trajectory t uses TrajectoryStream(seed, t), so the report depends only on
// (spec, trials, seed), never on `threads` (0 = default_thread_count()).
// Every trajectory's sign is checked against spec.parity().
SimulationReport run_chain(const ChainSpec& spec, uint64_t trials,
                           uint64_t seed, int threads = 0,
                           int moments = kDefaultMomentCount);

// (1/2) sum_gamma |count/trials - exact(gamma)|.
double empirical_tv(const SimulationReport& report,
                    const ClassDistribution& exact);

}  // namespace symmix

#endif  // SYMMIX_SIMULATE_H_
