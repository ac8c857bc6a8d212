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

#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "symmix/errors.h"

namespace symmix {
namespace {

Partition Transposition(int n) { return Partition::Hook(n, n - 2); }

TEST(MnCharacterTest, Examples) {
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({1, 1, 1})), 2);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({3})), -1);
  EXPECT_EQ(mn_character(Partition({2, 1}), Partition({2, 1})), 0);
  EXPECT_EQ(mn_character(Partition(), Partition()), 1);
}

TEST(MnCharacterTest, WeightMismatch) {
  EXPECT_THROW(mn_character(Partition({2, 1}), Partition({2, 2})),
               WeightMismatchError);
}

TEST(CharacterTableTest, SymmetricGroupOnThreeLetters) {
  auto table = character_table(3);
  // Rows (3), (2,1), (1^3); columns (3), (2,1), (1^3).
  const std::vector<std::vector<int>> expected = {
      {1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
  ASSERT_EQ(table->size(), 3u);
  for (size_t l = 0; l < 3; ++l) {
    for (size_t g = 0; g < 3; ++g) EXPECT_EQ(table->value(l, g), expected[l][g]);
  }
}

TEST(CharacterTableTest, SymmetricGroupOnFourLetters) {
  auto table = character_table(4);
  // Rows/columns in order (4), (3,1), (2,2), (2,1,1), (1^4).
  const std::vector<std::vector<int>> expected = {{1, 1, 1, 1, 1},
                                                  {-1, 0, -1, 1, 3},
                                                  {0, -1, 2, 0, 2},
                                                  {1, 0, -1, -1, 3},
                                                  {-1, 1, 1, -1, 1}};
  for (size_t l = 0; l < 5; ++l) {
    for (size_t g = 0; g < 5; ++g) EXPECT_EQ(table->value(l, g), expected[l][g]);
  }
}

TEST(CharacterTableTest, TrivialGroupAndHookSign) {
  auto one = character_table(1);
  ASSERT_EQ(one->size(), 1u);
  EXPECT_EQ(one->value(0, 0), 1);
  auto five = character_table(5);
  EXPECT_EQ(five->value(Partition({4, 1}), Partition({5})), -1);
  EXPECT_THROW(five->index_of(Partition({3})), DomainError);
}

TEST(CharacterTableTest, Ceiling) {
  EXPECT_THROW(character_table(21), ResourceLimitError);
  EXPECT_THROW(character_table(9, 8), ResourceLimitError);
  EXPECT_THROW(character_table(0), DomainError);
  EXPECT_EQ(character_table(6), character_table(6));
}

TEST(CharacterTableTest, IdentityColumnIsDimension) {
  for (int n = 1; n <= 9; ++n) {
    auto table = character_table(n);
    const size_t identity = table->index_of(Partition::Column(n));
    for (size_t l = 0; l < table->size(); ++l) {
      EXPECT_EQ(table->value(l, identity), table->dimension(l));
    }
  }
}

TEST(CharacterTableTest, Orthogonality) {
  for (int n = 1; n <= 8; ++n) {
    auto table = character_table(n);
    const Natural order = factorial(static_cast<unsigned long>(n));
    for (size_t a = 0; a < table->size(); ++a) {
      for (size_t b = 0; b < table->size(); ++b) {
        Integer rows = 0, cols = 0;
        for (size_t g = 0; g < table->size(); ++g) {
          rows += table->class_size(g) * table->value(a, g) * table->value(b, g);
          cols += table->value(g, a) * table->value(g, b);
        }
        EXPECT_EQ(rows, a == b ? order : Integer(0)) << n;
        // Column relation: sum_lambda chi(a) chi(b) = delta * n! / |C_a|.
        EXPECT_EQ(cols, a == b ? Integer(order / table->class_size(a)) : Integer(0));
      }
    }
  }
}

TEST(CharacterTableTest, ConjugationSignRule) {
  for (int n = 1; n <= 8; ++n) {
    auto table = character_table(n);
    for (size_t l = 0; l < table->size(); ++l) {
      const size_t lt = table->index_of(conjugate(table->partitions()[l]));
      for (size_t g = 0; g < table->size(); ++g) {
        EXPECT_EQ(table->value(lt, g), sign(table->partitions()[g]) * table->value(l, g));
      }
    }
  }
}

// Young's rule checked against brute-force permutation characters:
// chi of the tabloid module M^mu = sum_lambda K_{lambda,mu} chi^lambda.
TEST(CharacterTableTest, YoungsRuleAgainstTabloidCounts) {
  for (int n = 1; n <= 6; ++n) {
    auto table = character_table(n);
    for (const Partition& mu : table->partitions()) {
      const std::vector<int> content(mu.parts().begin(), mu.parts().end());
      for (size_t g = 0; g < table->size(); ++g) {
        const auto& gamma = table->partitions()[g];
        const std::vector<int> cycles(gamma.parts().begin(), gamma.parts().end());
        Integer via_table = 0;
        for (size_t l = 0; l < table->size(); ++l) {
          const auto& lambda = table->partitions()[l];
          const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
          via_table += oracle::Kostka(shape, content) * table->value(l, g);
        }
        EXPECT_EQ(via_table, oracle::TabloidFixedPoints(cycles, content))
            << mu.ToString() << " at " << gamma.ToString();
      }
    }
  }
}

TEST(NormalizedTranspositionTest, Examples) {
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(normalized_transposition_char(Partition::Row(n)), 1);
    EXPECT_EQ(normalized_transposition_char(Partition::Hook(n, 1)),
              make_ratio(n - 3, n - 1));
    EXPECT_EQ(normalized_transposition_char(Partition::Column(n)), -1);
  }
  EXPECT_THROW(normalized_transposition_char(Partition({1})), DomainError);
}

TEST(NormalizedTranspositionTest, AgreesWithRecursion) {
  for (int n = 2; n <= 10; ++n) {
    const Partition tau = Transposition(n);
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_EQ(Ratio(normalized_transposition_char(lambda) * dimension(lambda)),
                Ratio(mn_character(lambda, tau)))
          << lambda.ToString();
    }
  }
}

TEST(NormalizedTranspositionTest, HookValues) {
  for (int n = 3; n <= 14; ++n) {
    for (int j = 1; j <= (n - 1) / 2; ++j) {
      EXPECT_EQ(normalized_transposition_char(Partition::Hook(n, j)),
                make_ratio(n - 1 - 2 * j, n - 1));
    }
  }
}

TEST(NcycleCharacterTest, Examples) {
  EXPECT_EQ(ncycle_character(Partition::Row(6)), 1);
  EXPECT_EQ(ncycle_character(Partition::Hook(6, 1)), -1);
  EXPECT_EQ(ncycle_character(Partition({2, 2})), 0);
}

TEST(NcycleCharacterTest, AgreesWithRecursion) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_EQ(Integer(ncycle_character(lambda)), mn_character(lambda, Partition::Row(n)));
    }
  }
}

TEST(CharacterTableTest, ConcurrentRowAccess) {
  auto table = std::make_shared<CharacterTable>(9);
  std::vector<std::thread> pool;
  for (int t = 0; t < 6; ++t) {
    pool.emplace_back([&] {
      for (size_t l = 0; l < table->size(); ++l) (void)table->row(l);
    });
  }
  for (auto& th : pool) th.join();
  auto reference = character_table(9);
  for (size_t l = 0; l < table->size(); ++l) EXPECT_EQ(table->row(l), reference->row(l));
}

}  // namespace
}  // namespace symmix
