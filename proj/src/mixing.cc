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

#include "symmix/mixing.h"

#include <cmath>
#include <string>

#include "symmix/errors.h"
#include "symmix/tensor.h"

namespace symmix {
namespace {

Ratio FactorialInverse(int n) {
  return make_ratio(1, factorial(static_cast<unsigned long>(n)));
}

void CheckSpectralCeiling(int n) {
  if (n > kSpectralCeiling) {
    throw ResourceLimitError("spectral bound for n = " + std::to_string(n) +
                             " exceeds the ceiling " +
                             std::to_string(kSpectralCeiling));
  }
}

double Sqrt(const Ratio& x) { return std::sqrt(x.get_d()); }

}  // namespace

std::string_view to_string(Parity parity) {
  return parity == Parity::kEven ? "even" : "odd";
}

Parity parity_of(const Partition& gamma) {
  return sign(gamma) == 1 ? Parity::kEven : Parity::kOdd;
}

void ChainSpec::Validate() const {
  if (n < 3) throw DomainError("chain needs n >= 3");
  if (k < 0) throw DomainError("chain needs k >= 0");
}

Parity ChainSpec::parity() const {
  return (n - 1 + k) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

ClassDistribution::ClassDistribution(int n, Parity parity,
                                     std::vector<Ratio> masses)
    : n_(n),
      parity_(parity),
      classes_(enumerate_partitions(n)),
      masses_(std::move(masses)) {
  if (masses_.size() != classes_.size()) {
    throw ConsistencyError("class distribution has the wrong number of masses");
  }
  Ratio total = 0;
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (masses_[i] < 0) {
      throw ConsistencyError("negative mass " + masses_[i].get_str() + " on " +
                             classes_[i].ToString());
    }
    if (masses_[i] != 0 && parity_of(classes_[i]) != parity_) {
      throw ConsistencyError("mass on " + classes_[i].ToString() +
                             " outside the " + std::string(to_string(parity_)) +
                             " coset");
    }
    total += masses_[i];
  }
  if (total != 1) {
    throw ConsistencyError("total mass " + total.get_str() + " != 1");
  }
}

const Ratio& ClassDistribution::mass(const Partition& gamma) const {
  for (size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i] == gamma) return masses_[i];
  }
  throw DomainError(gamma.ToString() + " is not a class of S_" +
                    std::to_string(n_));
}

ClassDistribution chain_distribution(const ChainSpec& spec, int ceiling) {
  spec.Validate();
  auto table = character_table(spec.n, ceiling);
  const Partition ncycle = Partition::Row(spec.n);
  const Partition transposition = Partition::Hook(spec.n, spec.n - 2);
  const size_t tau = table->index_of(transposition);
  const size_t cycle = table->index_of(ncycle);
  const size_t count = table->size();

  // coefficient[lambda] = dim * (Fourier scalar) = chi(ncycle) (chi(tau)/dim)^k.
  // Rows whose n-cycle character vanishes are never built.
  std::vector<Ratio> coefficient(count);
  for (size_t l = 0; l < count; ++l) {
    const Integer at_cycle = mn_character(table->partitions()[l], ncycle);
    if (at_cycle == 0) continue;
    const Ratio normalized = make_ratio(table->value(l, tau), table->dimension(l));
    coefficient[l] = at_cycle * pow(normalized, static_cast<unsigned long>(spec.k));
    if (table->value(l, cycle) != at_cycle) {
      throw ConsistencyError("n-cycle character disagrees with table row");
    }
  }

  const Ratio inv = FactorialInverse(spec.n);
  std::vector<Ratio> masses(count);
  for (size_t g = 0; g < count; ++g) {
    Ratio sum = 0;
    for (size_t l = 0; l < count; ++l) {
      if (coefficient[l] == 0) continue;
      sum += coefficient[l] * table->value(l, g);
    }
    masses[g] = sum * table->class_size(g) * inv;
  }
  return ClassDistribution(spec.n, spec.parity(), std::move(masses));
}

ClassDistribution reference_measure(int n, Parity parity) {
  if (n < 3) throw DomainError("reference measure needs n >= 3");
  const auto classes = enumerate_partitions(n);
  const Ratio weight = 2 * FactorialInverse(n);
  std::vector<Ratio> masses(classes.size());
  for (size_t g = 0; g < classes.size(); ++g) {
    if (parity_of(classes[g]) == parity) masses[g] = weight * class_size(classes[g]);
  }
  return ClassDistribution(n, parity, std::move(masses));
}

Ratio total_variation(const ClassDistribution& p, const ClassDistribution& q) {
  if (p.n() != q.n()) {
    throw WeightMismatchError("total variation between S_" +
                              std::to_string(p.n()) + " and S_" +
                              std::to_string(q.n()));
  }
  if (p.parity() != q.parity()) {
    throw ParityMismatchError("total variation across cosets of A_n");
  }
  Ratio sum = 0;
  for (size_t g = 0; g < p.masses().size(); ++g) {
    sum += abs(p.masses()[g] - q.masses()[g]);
  }
  return sum / 2;
}

Ratio ds_bound_rhs_full(const ChainSpec& spec) {
  spec.Validate();
  CheckSpectralCeiling(spec.n);
  const Partition ncycle = Partition::Row(spec.n);
  const Partition trivial = Partition::Row(spec.n);
  const Partition alternating = Partition::Column(spec.n);
  Ratio sum = 0;
  for (const Partition& lambda : enumerate_partitions(spec.n)) {
    if (lambda == trivial || lambda == alternating) continue;
    const Integer at_cycle = mn_character(lambda, ncycle);
    if (at_cycle == 0) continue;
    const Natural dim = dimension(lambda);
    const Ratio at_tau = normalized_transposition_char(lambda);
    sum += Ratio(dim * dim) *
           pow(at_tau, 2 * static_cast<unsigned long>(spec.k)) *
           pow(make_ratio(at_cycle, dim), 2);
  }
  return sum / 2;
}

Ratio ds_bound_rhs_hooks(const ChainSpec& spec) {
  spec.Validate();
  CheckSpectralCeiling(spec.n);
  Ratio sum = 0;
  for (int j = 1; j <= spec.n - 2; ++j) {
    sum += pow(normalized_transposition_char(Partition::Hook(spec.n, j)),
               2 * static_cast<unsigned long>(spec.k));
  }
  return sum / 2;
}

Ratio ds_bound_rhs(const ChainSpec& spec) {
  Ratio full = ds_bound_rhs_full(spec);
  Ratio hooks = ds_bound_rhs_hooks(spec);
  if (full != hooks) {
    throw ConsistencyError("spectral sum over hooks " + hooks.get_str() +
                           " differs from the full sum " + full.get_str());
  }
  return full;
}

double ds_upper_bound(const ChainSpec& spec) {
  return Sqrt(ds_bound_rhs(spec)) / 2;
}

Ratio classic_rt_rhs(int n, int k) {
  if (n < 3) throw DomainError("random transposition bound needs n >= 3");
  if (k < 0) throw DomainError("negative step count");
  CheckSpectralCeiling(n);
  const Partition trivial = Partition::Row(n);
  const Ratio hold = make_ratio(1, n);
  const Ratio move = make_ratio(n - 1, n);
  Ratio sum = 0;
  for (const Partition& lambda : enumerate_partitions(n)) {
    if (lambda == trivial) continue;
    const Natural dim = dimension(lambda);
    const Ratio eigenvalue = hold + move * normalized_transposition_char(lambda);
    sum += Ratio(dim * dim) * pow(eigenvalue, 2 * static_cast<unsigned long>(k));
  }
  return sum;
}

double classic_rt_upper_bound(int n, int k) {
  return Sqrt(classic_rt_rhs(n, k)) / 2;
}

AsymptoticBounds asymptotic_bounds(double c) {
  if (!(c > 0)) throw DomainError("asymptotic bounds need c > 0");
  const double decay = std::exp(-2 * c);
  return {decay / std::exp(1.0),
          decay / (2 * std::sqrt(1 - std::exp(-4 * c)))};
}

Ratio fixed_point_free_mass(const ClassDistribution& d) {
  Ratio sum = 0;
  for (size_t g = 0; g < d.classes().size(); ++g) {
    if (fixed_points(d.classes()[g]) == 0) sum += d.masses()[g];
  }
  return sum;
}

Ratio finite_lower_bound(const ChainSpec& spec, int ceiling) {
  const ClassDistribution chain = chain_distribution(spec, ceiling);
  const ClassDistribution reference = reference_measure(spec.n, spec.parity());
  Ratio bound = abs(fixed_point_free_mass(chain) - fixed_point_free_mass(reference));
  if (bound > total_variation(chain, reference)) {
    throw ConsistencyError("derangement gap exceeds total variation");
  }
  return bound;
}

Ratio moment_via_decomposition(const ChainSpec& spec, int r) {
  spec.Validate();
  if (r < 1) throw DomainError("moment order must be >= 1");
  Ratio sum = 0;
  for (int j = 0; j < spec.n; ++j) {
    const Partition hook = Partition::Hook(spec.n, j);
    const Natural a = r <= closed_form_max_r(hook)
                          ? defining_multiplicity(hook, r)
                          : oracle_multiplicity(hook, r, Rep::kDefining);
    if (a == 0) continue;
    sum += a * ncycle_character(hook) *
           pow(normalized_transposition_char(hook),
               static_cast<unsigned long>(spec.k));
  }
  return sum;
}

Ratio moment_direct(const ChainSpec& spec, int r, int ceiling) {
  if (r < 0) throw DomainError("moment order must be >= 0");
  const ClassDistribution law = chain_distribution(spec, ceiling);
  Ratio sum = 0;
  for (size_t g = 0; g < law.classes().size(); ++g) {
    sum += law.masses()[g] *
           pow(Integer(fixed_points(law.classes()[g])), static_cast<unsigned long>(r));
  }
  return sum;
}

double poisson_moment(double nu, int r) {
  if (nu < 0) throw DomainError("Poisson mean must be nonnegative");
  if (r < 0) throw DomainError("moment order must be >= 0");
  double sum = 0;
  for (int i = 0; i <= r; ++i) {
    sum += stirling2(static_cast<unsigned>(r), static_cast<unsigned>(i)).get_d() *
           std::pow(nu, i);
  }
  return sum;
}

}  // namespace symmix
