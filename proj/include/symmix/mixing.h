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

#ifndef SYMMIX_MIXING_H_
#define SYMMIX_MIXING_H_

// The chain X_1 = (uniform n-cycle), X_{j+1} = (uniform transposition) X_j,
// analyzed on conjugacy classes. After the n-cycle and k transpositions the
// law mu of X_{k+1} is a class function, so its Fourier transform at S^lambda
// is the scalar (chi^lambda(n-cycle)/dim) (chi^lambda(tau)/dim)^k and the law
// can be inverted exactly onto classes.

#include <string_view>
#include <utility>
#include <vector>

#include "symmix/characters.h"
#include "symmix/exactmath.h"
#include "symmix/partition.h"

namespace symmix {

enum class Parity { kEven, kOdd };

std::string_view to_string(Parity parity);
Parity parity_of(const Partition& gamma);

// One n-cycle followed by k transpositions. Requires n >= 3, k >= 0.
struct ChainSpec {
  int n = 3;
  int k = 0;

  void Validate() const;
  // Coset of A_n carrying X_{k+1}: sign (-1)^((n-1)+k).
  Parity parity() const;
};

// Exact probability measure on the conjugacy classes of S_n, supported on one
// coset of A_n. The constructor verifies nonnegativity, total mass one and the
// parity support, throwing ConsistencyError otherwise.
class ClassDistribution {
 public:
  ClassDistribution(int n, Parity parity, std::vector<Ratio> masses);

  int n() const { return n_; }
  Parity parity() const { return parity_; }
  // enumerate_partitions(n); masses() is aligned with it.
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<Ratio>& masses() const { return masses_; }
  const Ratio& mass(const Partition& gamma) const;

  friend bool operator==(const ClassDistribution&,
                         const ClassDistribution&) = default;

 private:
  int n_;
  Parity parity_;
  std::vector<Partition> classes_;
  std::vector<Ratio> masses_;
};

// Law of X_{k+1} by Fourier inversion over the character table.
ClassDistribution chain_distribution(const ChainSpec& spec,
                                     int ceiling = kCharacterTableCeiling);

// Uniform measure on the even or odd permutations.
ClassDistribution reference_measure(int n, Parity parity);

// Half the l1 distance. Both arguments must share n and parity.
Ratio total_variation(const ClassDistribution& p, const ClassDistribution& q);

// Largest n accepted by the spectral bounds below.
inline constexpr int kSpectralCeiling = 40;

// Right-hand side of the spectral bound on 4 TV^2 for this chain:
//   (1/2) sum_{lambda != (n), (1^n)} dim^2 (chi_tau/dim)^(2k) (chi_ncycle/dim)^2.
// Summed over every partition (n-cycle characters by the Murnaghan-Nakayama
// recursion) and again over the proper hooks only; the two must agree or
// ConsistencyError is thrown.
Ratio ds_bound_rhs(const ChainSpec& spec);
// The two routes separately.
Ratio ds_bound_rhs_full(const ChainSpec& spec);
Ratio ds_bound_rhs_hooks(const ChainSpec& spec);
// TV-scale bound sqrt(rhs) / 2.
double ds_upper_bound(const ChainSpec& spec);

// Spectral bound for the lazy random-transposition walk after k steps:
//   sum_{lambda != (n)} dim^2 (1/n + (n-1) chi_tau / (n dim))^(2k).
Ratio classic_rt_rhs(int n, int k);
double classic_rt_upper_bound(int n, int k);

struct AsymptoticBounds {
  double lower;
  double upper;
};
// (e^{-2c}/e, e^{-2c} / (2 sqrt(1 - e^{-4c}))). Throws DomainError for c <= 0.
AsymptoticBounds asymptotic_bounds(double c);

// Mass of the classes without fixed points.
Ratio fixed_point_free_mass(const ClassDistribution& d);

// |mu(A) - U(A)| for A = derangements. Checked against the exact TV.
Ratio finite_lower_bound(const ChainSpec& spec,
                         int ceiling = kCharacterTableCeiling);

// E[fix^r] as sum_lambda a_{lambda,r} chi^lambda(n-cycle) (chi^lambda(tau)/dim)^k.
// Only hooks have a nonzero n-cycle character, so only hook multiplicities are
// evaluated; the oracle supplies those outside the closed-form range.
Ratio moment_via_decomposition(const ChainSpec& spec, int r);

// E[fix^r] by summing over the exact class distribution.
Ratio moment_direct(const ChainSpec& spec, int r,
                    int ceiling = kCharacterTableCeiling);

// r-th moment of Poisson(nu): sum_i S(r,i) nu^i.
double poisson_moment(double nu, int r);

}  // namespace symmix

#endif  // SYMMIX_MIXING_H_
