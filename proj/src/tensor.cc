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

#include "symmix/tensor.h"

#include <string>

#include "symmix/characters.h"
#include "symmix/errors.h"
#include "symmix/parallel.h"

namespace symmix {
namespace {

// sum_{i=depth}^{r} C(i, depth) S(r, i)
Natural BellLikeSum(unsigned depth, unsigned r) {
  Natural sum = 0;
  for (unsigned i = depth; i <= r; ++i) sum += binomial(i, depth) * stirling2(r, i);
  return sum;
}

Integer DefiningClosedForm(const Partition& lambda, int r) {
  const Partition tail = truncate(lambda);
  return dimension(tail) *
         BellLikeSum(static_cast<unsigned>(tail.weight()), static_cast<unsigned>(r));
}

Integer StandardClosedForm(const Partition& lambda, int r) {
  const Partition tail = truncate(lambda);
  const unsigned depth = static_cast<unsigned>(tail.weight());
  const unsigned rr = static_cast<unsigned>(r);
  Integer sum = 0;
  for (unsigned s = depth; s <= rr; ++s) {
    Integer term = binomial(rr, s) * BellLikeSum(depth, s);
    if ((rr - s) % 2) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return dimension(tail) * sum;
}

void CheckRange(const Partition& lambda, int r) {
  if (lambda.weight() < 1) throw WeightMismatchError("empty partition");
  if (r < 1 || r > closed_form_max_r(lambda)) {
    throw ValidityRangeError("closed form for " + lambda.ToString() +
                             " needs 1 <= r <= " +
                             std::to_string(closed_form_max_r(lambda)) +
                             ", got r = " + std::to_string(r));
  }
}

}  // namespace

std::string_view to_string(Rep rep) {
  return rep == Rep::kDefining ? "defining" : "standard";
}

std::string_view to_string(Method method) {
  return method == Method::kClosedForm ? "closed_form" : "oracle";
}

Rep parse_rep(std::string_view text) {
  if (text == "defining") return Rep::kDefining;
  if (text == "standard") return Rep::kStandard;
  throw DomainError("unknown representation '" + std::string(text) + "'");
}

int closed_form_max_r(const Partition& lambda) {
  return lambda.weight() - lambda.part(1);
}

Natural defining_multiplicity(const Partition& lambda, int r) {
  CheckRange(lambda, r);
  return DefiningClosedForm(lambda, r);
}

Natural standard_multiplicity(const Partition& lambda, int r) {
  CheckRange(lambda, r);
  Integer value = StandardClosedForm(lambda, r);
  if (value < 0) {
    throw ConsistencyError("negative standard multiplicity for " +
                           lambda.ToString() + ", r = " + std::to_string(r));
  }
  return value;
}

Natural oracle_multiplicity(const Partition& lambda, int r, Rep rep) {
  if (lambda.weight() < 1) throw WeightMismatchError("empty partition");
  if (r < 0) throw DomainError("negative tensor power");
  auto table = character_table(lambda.weight());
  const size_t row = table->index_of(lambda);
  const int shift = rep == Rep::kDefining ? 0 : 1;

  Integer sum = 0;
  for (size_t g = 0; g < table->size(); ++g) {
    const Integer phi = fixed_points(table->partitions()[g]) - shift;
    sum += table->class_size(g) * pow(phi, static_cast<unsigned long>(r)) *
           table->value(row, g);
  }
  Integer m = divide_exact(sum, factorial(static_cast<unsigned long>(table->n())));
  if (m < 0) {
    throw ConsistencyError("negative oracle multiplicity for " +
                           lambda.ToString());
  }
  return m;
}

const DecompositionEntry& DecompositionTable::at(const Partition& lambda) const {
  for (const auto& e : entries) {
    if (e.lambda == lambda) return e;
  }
  throw DomainError(lambda.ToString() + " not in decomposition table");
}

Natural DecompositionTable::dimension_sum() const {
  Natural sum = 0;
  for (const auto& e : entries) sum += e.multiplicity * e.dimension;
  return sum;
}

bool DecompositionTable::used_oracle() const {
  for (const auto& e : entries) {
    if (e.method == Method::kOracle) return true;
  }
  return false;
}

DecompositionTable decompose(int n, int r, Rep rep, int threads) {
  if (n < 3) throw DomainError("decompose needs n >= 3");
  if (r < 1) throw DomainError("decompose needs r >= 1");

  DecompositionTable table{n, r, rep, {}};
  const auto partitions = enumerate_partitions(n);
  table.entries.resize(partitions.size());
  parallel_for(partitions.size(), threads, [&](size_t i) {
    const Partition& lambda = partitions[i];
    DecompositionEntry& e = table.entries[i];
    e.lambda = lambda;
    e.dimension = dimension(lambda);
    if (r <= closed_form_max_r(lambda)) {
      e.method = Method::kClosedForm;
      e.multiplicity = rep == Rep::kDefining ? defining_multiplicity(lambda, r)
                                             : standard_multiplicity(lambda, r);
    } else {
      e.method = Method::kOracle;
      e.multiplicity = oracle_multiplicity(lambda, r, rep);
    }
  });

  const Natural expected =
      pow(Integer(rep == Rep::kDefining ? n : n - 1), static_cast<unsigned long>(r));
  if (table.dimension_sum() != expected) {
    throw ConsistencyError("dimension sum " + table.dimension_sum().get_str() +
                           " != " + expected.get_str());
  }
  return table;
}

std::vector<Divergence> closed_form_divergences(int n, int r, Rep rep) {
  if (n < 1 || r < 1) throw DomainError("divergence scan needs n, r >= 1");
  std::vector<Divergence> out;
  for (const Partition& lambda : enumerate_partitions(n)) {
    if (r <= closed_form_max_r(lambda)) continue;
    Integer closed = rep == Rep::kDefining ? DefiningClosedForm(lambda, r)
                                           : StandardClosedForm(lambda, r);
    Natural oracle = oracle_multiplicity(lambda, r, rep);
    if (closed != oracle) out.push_back({lambda, closed, oracle});
  }
  return out;
}

}  // namespace symmix
