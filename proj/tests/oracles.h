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

#ifndef SYMMIX_TESTS_ORACLES_H_
#define SYMMIX_TESTS_ORACLES_H_

// Brute-force reference computations for the tests. Nothing here calls the
// library code it is used to check.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace symmix::oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> AllPermutations(int n) {
  std::vector<Perm> out;
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> CycleLengths(const Perm& p) {
  std::vector<bool> seen(p.size());
  std::vector<int> lengths;
  for (size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (size_t i = s; !seen[i]; i = static_cast<size_t>(p[i])) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

inline int FixedPoints(const Perm& p) {
  int f = 0;
  for (size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i);
  return f;
}

inline int Sign(const Perm& p) {
  return (p.size() - CycleLengths(p).size()) % 2 == 0 ? 1 : -1;
}

// a o b
inline Perm Compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<size_t>(b[i])];
  return out;
}

// Law of (uniform n-cycle) followed by k left-multiplied uniform
// transpositions, by direct convolution over the group. Returned as counts
// per permutation; the common denominator is (n-1)! * C(n,2)^k.
inline std::map<Perm, mpz_class> ChainCounts(int n, int k) {
  std::map<Perm, mpz_class> law;
  std::vector<Perm> transpositions;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Perm t(static_cast<size_t>(n));
      std::iota(t.begin(), t.end(), 0);
      std::swap(t[a], t[b]);
      transpositions.push_back(t);
    }
  }
  for (const Perm& p : AllPermutations(n)) {
    if (CycleLengths(p).size() == 1) law[p] = 1;
  }
  for (int step = 0; step < k; ++step) {
    std::map<Perm, mpz_class> next;
    for (const auto& [p, w] : law) {
      for (const Perm& t : transpositions) next[Compose(t, p)] += w;
    }
    law = std::move(next);
  }
  return law;
}

// S(r, i) by plain recursion, no memo.
inline mpz_class StirlingRecursive(unsigned r, unsigned i) {
  if (r == 0 && i == 0) return 1;
  if (r == 0 || i == 0) return 0;
  return i * StirlingRecursive(r - 1, i) + StirlingRecursive(r - 1, i - 1);
}

// Set partitions of an r-set by block count, via restricted growth strings.
inline std::vector<long> SetPartitionCounts(int r) {
  std::vector<long> counts(static_cast<size_t>(r) + 1, 0);
  std::vector<int> rgs(static_cast<size_t>(r), 0);
  std::function<void(int, int)> go = [&](int pos, int blocks) {
    if (pos == r) {
      ++counts[static_cast<size_t>(blocks)];
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      go(pos + 1, std::max(blocks, b + 1));
    }
  };
  go(0, 0);
  return counts;
}

inline mpz_class PascalBinomial(unsigned n, unsigned k) {
  std::vector<std::vector<mpz_class>> rows(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return k > n ? mpz_class(0) : rows[n][k];
}

// p(n) by the parts-at-most-m dynamic program.
inline long PartitionCountDp(int n) {
  std::vector<long> ways(static_cast<size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) ways[total] += ways[total - part];
  }
  return ways[static_cast<size_t>(n)];
}

// Semistandard tableaux of shape `shape` with content `content`.
inline long Kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  // Fill entries 1, 2, ... in turn; the cells holding value v form a
  // horizontal strip added to the previous shape.
  std::function<long(std::vector<int>, size_t)> go = [&](std::vector<int> inner,
                                                         size_t value) -> long {
    if (value == content.size()) return inner == shape ? 1 : 0;
    long total = 0;
    std::vector<int> outer = inner;
    std::function<void(size_t, int)> place = [&](size_t row, int left) {
      if (row == shape.size()) {
        if (left == 0) total += go(outer, value + 1);
        return;
      }
      const int limit_shape = shape[row];
      const int limit_strip = row == 0 ? limit_shape : std::min(limit_shape, inner[row - 1]);
      for (int add = 0; inner[row] + add <= limit_strip && add <= left; ++add) {
        outer[row] = inner[row] + add;
        place(row + 1, left - add);
      }
      outer[row] = inner[row];
    };
    place(0, content[value]);
    return total;
  };
  return go(std::vector<int>(shape.size(), 0), 0);
}

// Character of the permutation module on row tabloids of shape `rows` at a
// permutation with the given cycle lengths: the number of ways to place
// whole cycles into rows with the right sizes.
inline long TabloidFixedPoints(const std::vector<int>& cycles,
                               const std::vector<int>& rows) {
  std::vector<int> room = rows;
  std::function<long(size_t)> go = [&](size_t c) -> long {
    if (c == cycles.size()) return 1;
    long total = 0;
    for (int& r : room) {
      if (r >= cycles[c]) {
        r -= cycles[c];
        total += go(c + 1);
        r += cycles[c];
      }
    }
    return total;
  };
  return go(0);
}

}  // namespace symmix::oracle

#endif  // SYMMIX_TESTS_ORACLES_H_
