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

#include "gtest/gtest.h"
#include "oracles.h"
#include "symmix/errors.h"

namespace symmix {
namespace {

// (1/n!) sum over every permutation of phi(sigma)^r * chi(sigma) for the
// trivial (chi = 1) or sign character, by enumerating S_n.
Integer BruteForceMultiplicity(int n, int r, Rep rep, bool sign_character) {
  Integer sum = 0;
  for (const auto& p : oracle::AllPermutations(n)) {
    const Integer phi = oracle::FixedPoints(p) - (rep == Rep::kStandard ? 1 : 0);
    Integer term = pow(phi, static_cast<unsigned long>(r));
    if (sign_character) term *= oracle::Sign(p);
    sum += term;
  }
  return divide_exact(sum, factorial(static_cast<unsigned long>(n)));
}

TEST(DefiningMultiplicityTest, Examples) {
  EXPECT_EQ(defining_multiplicity(Partition::Row(5), 3), 5);
  for (int n = 4; n <= 9; ++n) {
    EXPECT_EQ(defining_multiplicity(Partition::Hook(n, 1), 2), 3);
    EXPECT_EQ(oracle_multiplicity(Partition::Hook(n, 1), 2, Rep::kDefining), 3);
  }
  // |lambda-bar| = 3 > r = 2.
  EXPECT_EQ(defining_multiplicity(Partition({3, 3}), 2), 0);
}

TEST(DefiningMultiplicityTest, ValidityRange) {
  EXPECT_THROW(defining_multiplicity(Partition({3, 3}), 4), ValidityRangeError);
  EXPECT_THROW(defining_multiplicity(Partition::Row(4), 5), ValidityRangeError);
  EXPECT_THROW(defining_multiplicity(Partition::Row(4), 0), ValidityRangeError);
  EXPECT_NO_THROW(defining_multiplicity(Partition::Row(4), 4));
}

TEST(StandardMultiplicityTest, Examples) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(standard_multiplicity(Partition::Hook(n, 1), 1), 1);
    EXPECT_EQ(standard_multiplicity(Partition::Row(n), 2), 1);
    EXPECT_EQ(oracle_multiplicity(Partition::Row(n), 2, Rep::kStandard), 1);
  }
  for (int n = 4; n <= 9; ++n) {
    EXPECT_EQ(standard_multiplicity(Partition::Hook(n, 1), 2), 1);
    EXPECT_EQ(oracle_multiplicity(Partition::Hook(n, 1), 2, Rep::kStandard), 1);
  }
  EXPECT_THROW(standard_multiplicity(Partition({2, 2}), 3), ValidityRangeError);
}

TEST(OracleMultiplicityTest, Examples) {
  for (int n = 3; n <= 8; ++n) {
    for (int r = 1; r <= n; ++r) {
      EXPECT_EQ(oracle_multiplicity(Partition::Row(n), r, Rep::kDefining),
                bell(static_cast<unsigned>(r)));
    }
  }
  EXPECT_EQ(oracle_multiplicity(Partition({2, 1}), 1, Rep::kDefining), 1);
  EXPECT_EQ(oracle_multiplicity(Partition::Column(4), 2, Rep::kDefining), 0);
}

TEST(OracleMultiplicityTest, MatchesGroupEnumeration) {
  for (int n = 3; n <= 6; ++n) {
    for (int r = 0; r <= 8; ++r) {
      for (Rep rep : {Rep::kDefining, Rep::kStandard}) {
        EXPECT_EQ(oracle_multiplicity(Partition::Row(n), r, rep),
                  BruteForceMultiplicity(n, r, rep, false));
        EXPECT_EQ(oracle_multiplicity(Partition::Column(n), r, rep),
                  BruteForceMultiplicity(n, r, rep, true));
      }
    }
  }
}

TEST(ClosedFormTest, EqualsOracleOnValidityRange) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (int r = 1; r <= closed_form_max_r(lambda); ++r) {
        EXPECT_EQ(defining_multiplicity(lambda, r),
                  oracle_multiplicity(lambda, r, Rep::kDefining))
            << lambda.ToString() << " r=" << r;
        EXPECT_EQ(standard_multiplicity(lambda, r),
                  oracle_multiplicity(lambda, r, Rep::kStandard))
            << lambda.ToString() << " r=" << r;
      }
    }
  }
}

TEST(ClosedFormTest, TrivialMultiplicityIsBell) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= n; ++r) {
      EXPECT_EQ(defining_multiplicity(Partition::Row(n), r), bell(static_cast<unsigned>(r)));
    }
  }
}

TEST(ClosedFormTest, DepthBound) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const int depth = n - lambda.part(0);
      for (int r = 1; r <= closed_form_max_r(lambda) && r < depth; ++r) {
        EXPECT_EQ(defining_multiplicity(lambda, r), 0);
      }
    }
  }
}

TEST(ClosedFormTest, BinomialTransformLinksBothRepresentations) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (int r = 1; r <= closed_form_max_r(lambda); ++r) {
        Natural sum = 0;
        for (int s = 0; s <= r; ++s) {
          // b_{lambda,0} is the trivial multiplicity in the unit representation.
          Natural b = s == 0 ? Natural(lambda == Partition::Row(n) ? 1 : 0)
                             : standard_multiplicity(lambda, s);
          sum += binomial(static_cast<unsigned>(r), static_cast<unsigned>(s)) * b;
        }
        EXPECT_EQ(sum, defining_multiplicity(lambda, r)) << lambda.ToString();
      }
    }
  }
}

TEST(DecomposeTest, Examples) {
  const auto five = decompose(5, 2, Rep::kDefining);
  EXPECT_EQ(five.entries.size(), 7u);
  EXPECT_EQ(five.dimension_sum(), 25);

  const auto three = decompose(3, 1, Rep::kDefining);
  EXPECT_EQ(three.at(Partition({3})).multiplicity, 1);
  EXPECT_EQ(three.at(Partition({2, 1})).multiplicity, 1);
  EXPECT_EQ(three.at(Partition({1, 1, 1})).multiplicity, 0);

  const auto four = decompose(4, 1, Rep::kStandard);
  for (const auto& e : four.entries) {
    EXPECT_EQ(e.multiplicity, e.lambda == Partition({3, 1}) ? 1 : 0);
  }
  EXPECT_THROW(decompose(2, 1, Rep::kDefining), DomainError);
  EXPECT_THROW(decompose(4, 0, Rep::kDefining), DomainError);
}

TEST(DecomposeTest, MethodRecordedPerEntry) {
  const auto table = decompose(4, 4, Rep::kDefining);
  EXPECT_EQ(table.at(Partition({4})).method, Method::kClosedForm);
  EXPECT_EQ(table.at(Partition({2, 2})).method, Method::kOracle);
  EXPECT_TRUE(table.used_oracle());
  EXPECT_FALSE(decompose(6, 1, Rep::kStandard).used_oracle());
}

TEST(DecomposeTest, DimensionSums) {
  for (int n = 3; n <= 8; ++n) {
    for (int r = 1; r <= 6; ++r) {
      const auto a = decompose(n, r, Rep::kDefining, 1);
      const auto b = decompose(n, r, Rep::kStandard, 1);
      EXPECT_EQ(a.dimension_sum(), pow(Integer(n), static_cast<unsigned long>(r)));
      EXPECT_EQ(b.dimension_sum(), pow(Integer(n - 1), static_cast<unsigned long>(r)));
      for (size_t i = 0; i < a.entries.size(); ++i) {
        EXPECT_EQ(a.entries[i].multiplicity,
                  oracle_multiplicity(a.entries[i].lambda, r, Rep::kDefining));
      }
    }
  }
}

TEST(DecomposeTest, ThreadCountDoesNotMatter) {
  const auto one = decompose(8, 5, Rep::kStandard, 1);
  const auto many = decompose(8, 5, Rep::kStandard, 4);
  ASSERT_EQ(one.entries.size(), many.entries.size());
  for (size_t i = 0; i < one.entries.size(); ++i) {
    EXPECT_EQ(one.entries[i].multiplicity, many.entries[i].multiplicity);
    EXPECT_EQ(one.entries[i].method, many.entries[i].method);
  }
}

TEST(DivergenceTest, ClosedFormFailsBeyondRange) {
  // a_{(3),4} by the formula is B_4 = 15, but S_3 has only
  // S(4,1) + S(4,2) + S(4,3) = 14 orbits on 4-tuples.
  const auto found = closed_form_divergences(3, 4, Rep::kDefining);
  bool saw_trivial = false;
  for (const auto& d : found) {
    if (d.lambda == Partition({3})) {
      saw_trivial = true;
      EXPECT_EQ(d.closed_form, 15);
      EXPECT_EQ(d.oracle, 14);
    }
  }
  EXPECT_TRUE(saw_trivial);
  EXPECT_TRUE(closed_form_divergences(5, 1, Rep::kDefining).empty());
}

TEST(RepTest, Parse) {
  EXPECT_EQ(parse_rep("defining"), Rep::kDefining);
  EXPECT_EQ(parse_rep("standard"), Rep::kStandard);
  EXPECT_THROW(parse_rep("regular"), DomainError);
}

}  // namespace
}  // namespace symmix
