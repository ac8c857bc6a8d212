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

#ifndef SYMMIX_TENSOR_H_
#define SYMMIX_TENSOR_H_

// Irreducible multiplicities in tensor powers of the defining representation
// rho (character = number of fixed points) and of the standard representation
// S^(n-1,1) (character = fixed points - 1).
//
// Two independent routes are provided: closed forms in Stirling numbers that
// hold for 1 <= r <= n - lambda_2, and a character inner product over the
// conjugacy classes of S_n that holds everywhere.

#include <string>
#include <string_view>
#include <vector>

#include "symmix/exactmath.h"
#include "symmix/partition.h"

namespace symmix {

enum class Rep { kDefining, kStandard };
enum class Method { kClosedForm, kOracle };

std::string_view to_string(Rep rep);
std::string_view to_string(Method method);
// "defining" or "standard"; throws DomainError otherwise.
Rep parse_rep(std::string_view text);

// Largest r for which the closed forms hold: n - lambda_2.
int closed_form_max_r(const Partition& lambda);

// a_{lambda,r} = f^{lambda-bar} sum_{i=|lambda-bar|}^{r} C(i,|lambda-bar|) S(r,i),
// where lambda-bar drops the first row. Throws ValidityRangeError unless
// 1 <= r <= n - lambda_2.
Natural defining_multiplicity(const Partition& lambda, int r);

// b_{lambda,r}: alternating binomial transform of the defining sums. Evaluated
// in signed arithmetic; throws ConsistencyError if the result is negative.
Natural standard_multiplicity(const Partition& lambda, int r);

// (1/n!) sum_gamma |C_gamma| phi(gamma)^r chi^lambda(gamma), phi = fix or
// fix - 1. Throws ConsistencyError if the division by n! is inexact or the
// result is negative, ResourceLimitError beyond the character-table ceiling.
Natural oracle_multiplicity(const Partition& lambda, int r, Rep rep);

struct DecompositionEntry {
  Partition lambda;
  Natural multiplicity;
  Method method;
  Natural dimension;
};

struct DecompositionTable {
  int n = 0;
  int r = 0;
  Rep rep = Rep::kDefining;
  // One entry per partition of n, in enumerate_partitions order, zero
  // multiplicities included.
  std::vector<DecompositionEntry> entries;

  const DecompositionEntry& at(const Partition& lambda) const;
  // sum multiplicity * dimension; n^r or (n-1)^r.
  Natural dimension_sum() const;
  bool used_oracle() const;
};

// Closed form where valid, oracle elsewhere. Requires n >= 3, r >= 1. The
// dimension sum is verified before returning.
DecompositionTable decompose(int n, int r, Rep rep, int threads = 0);

// Out-of-range entries where the closed-form expression, evaluated anyway,
// disagrees with the oracle. Diagnostic only.
struct Divergence {
  Partition lambda;
  Integer closed_form;
  Natural oracle;
};
std::vector<Divergence> closed_form_divergences(int n, int r, Rep rep);

}  // namespace symmix

#endif  // SYMMIX_TENSOR_H_
