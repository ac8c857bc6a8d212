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

#ifndef SYMMIX_EXACTMATH_H_
#define SYMMIX_EXACTMATH_H_

// Exact integer and rational arithmetic plus the counting sequences used by
// the tensor-power multiplicity formulas.
//
// Natural and Integer are GMP integers; Ratio is a GMP rational. Every Ratio
// handed out by this library is in canonical form (lowest terms, positive
// denominator), so operator== is value equality.

#include <gmpxx.h>

#include <string>

namespace symmix {

using Natural = mpz_class;
using Integer = mpz_class;
using Ratio = mpq_class;

// C(n, k); zero when k > n.
Natural binomial(unsigned long n, unsigned long k);

Natural factorial(unsigned long n);

// Stirling numbers of the second kind: the number of ways to split an r-set
// into i nonempty blocks. S(0,0) = 1, S(r,0) = 0 for r >= 1, S(r,i) = 0 for
// i > r. Backed by a process-wide memo table that grows on demand and is
// safe for concurrent readers and writers.
Natural stirling2(unsigned r, unsigned i);

// Bell number B_t = sum_{q=1..t} S(t,q), with B_0 = 1.
Natural bell(unsigned t);

// Builds num/den in lowest terms. Throws DomainError when den == 0.
Ratio make_ratio(const Integer& num, const Integer& den);

Ratio pow(const Ratio& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

// Exact division; throws ConsistencyError when den does not divide num.
Integer divide_exact(const Integer& num, const Integer& den);

// Decimal rendering with `digits` significant digits, rounding half to even
// on the exact value. Uses fixed notation for decimal exponents in [-4, digits)
// and scientific notation otherwise, trailing zeros stripped.
std::string to_decimal(const Ratio& value, int digits = 12);

// Same rendering for a binary floating-point value (rounded from its exact
// binary expansion).
std::string to_decimal(double value, int digits = 12);

}  // namespace symmix

#endif  // SYMMIX_EXACTMATH_H_
