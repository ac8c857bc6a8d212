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

#ifndef SYMMIX_CHARACTERS_H_
#define SYMMIX_CHARACTERS_H_

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "symmix/exactmath.h"
#include "symmix/partition.h"

namespace symmix {

// Largest n for which character_table() builds a table unless the caller
// passes a different ceiling.
inline constexpr int kCharacterTableCeiling = 20;

// chi^lambda(gamma) by the Murnaghan-Nakayama rule: strip rim hooks of length
// gamma_1, gamma_2, ... (largest first) with sign (-1)^height. Throws
// WeightMismatchError when |lambda| != |gamma|.
Integer mn_character(const Partition& lambda, const Partition& gamma);

// chi^lambda at a transposition divided by the dimension, from the
// closed form sum_i (lambda_i^2 - (2i - 1) lambda_i) / (n (n - 1)).
// Requires n >= 2.
Ratio normalized_transposition_char(const Partition& lambda);

// chi^lambda at an n-cycle: 0 off hooks, (-1)^(rows - 1) on hooks.
int ncycle_character(const Partition& lambda);

// Full character table of S_n. Irreducibles and classes are both indexed by
// enumerate_partitions(n). Rows are evaluated on first access; concurrent
// readers are safe.
class CharacterTable {
 public:
  explicit CharacterTable(int n);
  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  int n() const { return n_; }
  size_t size() const { return partitions_.size(); }
  const std::vector<Partition>& partitions() const { return partitions_; }
  // Throws DomainError when the partition is not of weight n.
  size_t index_of(const Partition& p) const;

  const Natural& dimension(size_t lambda) const { return dimensions_[lambda]; }
  const Natural& class_size(size_t gamma) const { return class_sizes_[gamma]; }

  const std::vector<Integer>& row(size_t lambda) const;
  const Integer& value(size_t lambda, size_t gamma) const {
    return row(lambda)[gamma];
  }
  const Integer& value(const Partition& lambda, const Partition& gamma) const {
    return value(index_of(lambda), index_of(gamma));
  }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::unordered_map<Partition, size_t> index_;
  std::vector<Natural> dimensions_;
  std::vector<Natural> class_sizes_;
  mutable std::unique_ptr<std::once_flag[]> row_once_;
  mutable std::vector<std::vector<Integer>> rows_;
};

// Process-wide cached table for S_n. Throws DomainError for n < 1 and
// ResourceLimitError when n exceeds `ceiling`.
std::shared_ptr<const CharacterTable> character_table(
    int n, int ceiling = kCharacterTableCeiling);

}  // namespace symmix

#endif  // SYMMIX_CHARACTERS_H_
