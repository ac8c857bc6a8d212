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

#ifndef SYMMIX_PARTITION_H_
#define SYMMIX_PARTITION_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symmix/exactmath.h"

namespace symmix {

// An integer partition: weakly decreasing positive parts. Serves both as an
// irreducible-representation label and as a cycle type. The empty partition
// is a valid value of weight 0.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  // Parses "[4,1,1]", "[4,1^2]", "4,1,1" or "[]". Parts may be given in any
  // order; they are sorted into weakly decreasing order.
  static Partition Parse(std::string_view text);

  // (n)
  static Partition Row(int n);
  // (1^n)
  static Partition Column(int n);
  // (n - j, 1^j)
  static Partition Hook(int n, int j);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // i-th part (0-based), or 0 past the end.
  int part(int i) const {
    return i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }

  // "[4,1,1]"
  std::string ToString() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n in reverse-lexicographic order, beginning with (n).
std::vector<Partition> enumerate_partitions(int n);

// p(n) through Euler's pentagonal recurrence.
Natural partition_count(int n);

Partition conjugate(const Partition& lambda);

// Drops the first part: (l1, l2, ...) -> (l2, ...).
Partition truncate(const Partition& lambda);

// Number of standard Young tableaux, by the hook length formula.
Natural dimension(const Partition& lambda);

bool is_hook(const Partition& lambda);
// Hook with lambda_1 > 1 and lambda_2 == 1, i.e. (n - j, 1^j), 1 <= j <= n-2.
bool is_proper_hook(const Partition& lambda);
// Number of rows minus one.
int hook_height(const Partition& lambda);

// Permutations in S_n with cycle type gamma: n! / z_gamma.
Natural class_size(const Partition& gamma);

// Number of parts equal to 1.
int fixed_points(const Partition& gamma);

// Sign of any permutation with cycle type gamma: (-1)^(n - #parts).
int sign(const Partition& gamma);

}  // namespace symmix

template <>
struct std::hash<symmix::Partition> {
  size_t operator()(const symmix::Partition& p) const noexcept;
};

#endif  // SYMMIX_PARTITION_H_
