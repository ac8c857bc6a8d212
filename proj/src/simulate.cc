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

#include "symmix/simulate.h"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>
#include <utility>

#include "symmix/errors.h"
#include "symmix/parallel.h"

namespace symmix {
namespace {

constexpr uint64_t kTrajectoriesPerBlock = 4096;

}  // namespace

Partition cycle_type(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (size_t i = start; !seen[i]; i = static_cast<size_t>(perm[i])) {
      seen[i] = 1;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Permutation sample_ncycle(int n, TrajectoryStream& stream) {
  if (n < 1) throw DomainError("n-cycle needs n >= 1");
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i >= 2; --i) {
    const int j = 1 + static_cast<int>(stream.Uniform(static_cast<uint32_t>(i)));
    std::swap(order[i], order[j]);
  }
  Permutation perm(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) perm[order[t]] = order[(t + 1) % n];
  return perm;
}

Permutation sample_chain(const ChainSpec& spec, TrajectoryStream& stream) {
  spec.Validate();
  Permutation perm = sample_ncycle(spec.n, stream);
  Permutation inverse(perm.size());
  for (int i = 0; i < spec.n; ++i) inverse[perm[i]] = i;

  const uint32_t n = static_cast<uint32_t>(spec.n);
  for (int step = 0; step < spec.k; ++step) {
    const int a = static_cast<int>(stream.Uniform(n));
    int b = static_cast<int>(stream.Uniform(n - 1));
    if (b >= a) ++b;
    // (a b) o perm: the preimages of a and b swap images.
    std::swap(perm[inverse[a]], perm[inverse[b]]);
    std::swap(inverse[a], inverse[b]);
  }
  return perm;
}

SimulationReport run_chain(const ChainSpec& spec, uint64_t trials,
                           uint64_t seed, int threads, int moments) {
  spec.Validate();
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  if (moments < 0) throw DomainError("negative moment count");

  SimulationReport report;
  report.spec = spec;
  report.trials = trials;
  report.seed = seed;

  const int expected_sign = spec.parity() == Parity::kEven ? 1 : -1;
  const uint64_t blocks = (trials + kTrajectoriesPerBlock - 1) / kTrajectoriesPerBlock;
  std::mutex merge_mutex;
  parallel_for(static_cast<size_t>(blocks), threads, [&](size_t block) {
    std::map<Partition, uint64_t> local;
    const uint64_t begin = block * kTrajectoriesPerBlock;
    const uint64_t end = std::min(trials, begin + kTrajectoriesPerBlock);
    for (uint64_t t = begin; t < end; ++t) {
      TrajectoryStream stream(seed, t);
      Partition type = cycle_type(sample_chain(spec, stream));
      if (sign(type) != expected_sign) {
        throw ConsistencyError("trajectory " + std::to_string(t) +
                               " ended in the wrong coset");
      }
      ++local[std::move(type)];
    }
    std::lock_guard lock(merge_mutex);
    for (auto& [type, count] : local) report.class_counts[type] += count;
  });

  for (const auto& [type, count] : report.class_counts) {
    report.fixed_point_histogram[fixed_points(type)] += count;
  }
  for (int r = 1; r <= moments; ++r) {
    Integer sum = 0;
    for (const auto& [fix, count] : report.fixed_point_histogram) {
      sum += pow(Integer(fix), static_cast<unsigned long>(r)) *
             Integer(static_cast<unsigned long>(count));
    }
    report.empirical_moments.push_back(
        make_ratio(sum, Integer(static_cast<unsigned long>(trials))).get_d());
  }
  return report;
}

double empirical_tv(const SimulationReport& report,
                    const ClassDistribution& exact) {
  if (report.spec.n != exact.n()) {
    throw WeightMismatchError("simulation and exact law are for different n");
  }
  if (report.spec.parity() != exact.parity()) {
    throw ParityMismatchError("simulation and exact law live on different cosets");
  }
  const Integer trials(static_cast<unsigned long>(report.trials));
  Ratio sum = 0;
  for (size_t g = 0; g < exact.classes().size(); ++g) {
    auto it = report.class_counts.find(exact.classes()[g]);
    const Integer count(static_cast<unsigned long>(
        it == report.class_counts.end() ? 0 : it->second));
    sum += abs(make_ratio(count, trials) - exact.masses()[g]);
  }
  return Ratio(sum / 2).get_d();
}

}  // namespace symmix
