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

#include "symmix/characters.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "symmix/errors.h"

namespace symmix {
namespace {

// Memo over (remaining shape, remaining cycle-type suffix).
using Memo = std::map<std::pair<Partition, std::vector<int>>, Integer>;

// Removes every rim hook of length m from `shape`, reporting each result with
// its leg length. Works on beta-numbers: a rim hook of length m is a bead
// moved from b to b - m onto an empty position.
template <typename Visit>
void ForEachRimHook(const Partition& shape, int m, Visit&& visit) {
  const int rows = shape.length();
  std::vector<int> beta(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) beta[i] = shape.part(i) + (rows - 1 - i);

  for (int i = 0; i < rows; ++i) {
    const int target = beta[i] - m;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++height;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int r = 0; r < rows; ++r) {
      const int part = moved[r] - (rows - 1 - r);
      if (part > 0) parts.push_back(part);
    }
    visit(Partition(std::move(parts)), height);
  }
}

Integer Evaluate(const Partition& shape, std::span<const int> cycles,
                 Memo& memo) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  auto key = std::make_pair(shape, std::vector<int>(cycles.begin(), cycles.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  Integer total = 0;
  ForEachRimHook(shape, cycles.front(), [&](const Partition& rest, int height) {
    Integer sub = Evaluate(rest, cycles.subspan(1), memo);
    if (height % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  });
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& gamma) {
  if (lambda.weight() != gamma.weight()) {
    throw WeightMismatchError("character of " + lambda.ToString() + " at " +
                              gamma.ToString() + ": weights differ");
  }
  Memo memo;
  return Evaluate(lambda, gamma.parts(), memo);
}

Ratio normalized_transposition_char(const Partition& lambda) {
  const long n = lambda.weight();
  if (n < 2) throw DomainError("transpositions need n >= 2");
  Integer sum = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    const long part = lambda.part(i - 1);
    sum += part * part - (2L * i - 1) * part;
  }
  return make_ratio(sum, Integer(n * (n - 1)));
}

int ncycle_character(const Partition& lambda) {
  if (!is_hook(lambda)) return 0;
  return lambda.length() % 2 == 1 ? 1 : -1;
}

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 1) throw DomainError("character table needs n >= 1");
  partitions_ = enumerate_partitions(n);
  for (size_t i = 0; i < partitions_.size(); ++i) {
    index_.emplace(partitions_[i], i);
    dimensions_.push_back(symmix::dimension(partitions_[i]));
    class_sizes_.push_back(symmix::class_size(partitions_[i]));
  }
  row_once_ = std::make_unique<std::once_flag[]>(partitions_.size());
  rows_.resize(partitions_.size());
}

size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw DomainError(p.ToString() + " is not a partition of " +
                      std::to_string(n_));
  }
  return it->second;
}

const std::vector<Integer>& CharacterTable::row(size_t lambda) const {
  std::call_once(row_once_[lambda], [&] {
    Memo memo;
    std::vector<Integer> values;
    values.reserve(partitions_.size());
    for (const Partition& gamma : partitions_) {
      values.push_back(Evaluate(partitions_[lambda], gamma.parts(), memo));
    }
    rows_[lambda] = std::move(values);
  });
  return rows_[lambda];
}

std::shared_ptr<const CharacterTable> character_table(int n, int ceiling) {
  if (n < 1) throw DomainError("character table needs n >= 1");
  if (n > ceiling) {
    throw ResourceLimitError("character table for n = " + std::to_string(n) +
                             " exceeds the ceiling " + std::to_string(ceiling));
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n);
  return slot;
}

}  // namespace symmix
