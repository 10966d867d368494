// Copyright 2026 The aont-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aont/randomized.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "aont/search.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace aont {
namespace {

using fixtures::abc;
using fixtures::aont123;
using fixtures::tup;

RandomizedScheme scheme_x2() {
  return RandomizedScheme(aont123(), ColumnSet::inputs(2, {2}));
}

InputDistribution one_symbol(std::vector<Rational> probs) {
  return InputDistribution(3, 1, std::move(probs));
}

InputDistribution half_quarter_u() {
  return one_symbol({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
}

InputDistribution skewed_u() {
  return one_symbol({Rational(9, 10), Rational(1, 20), Rational(1, 20)});
}

std::uint64_t seed_with_first_draw(Symbol target, std::size_t v) {
  for (std::uint64_t seed = 0;; ++seed) {
    if (draw_random_symbols(seed, 1, v)[0] == target) return seed;
  }
}

TEST(RandomizedSchemeTest, RandomPositionsComplementDesignated) {
  const auto scheme = scheme_x2();
  EXPECT_EQ(scheme.random_positions(), ColumnSet::inputs(2, {1}));
  EXPECT_EQ(scheme.t(), 1u);
  const Tuple x = scheme.assemble(Tuple{2}, Tuple{0});
  EXPECT_EQ(x, (Tuple{0, 2}));
}

TEST(RandomizedSchemeTest, RejectsNonAont) {
  try {
    RandomizedScheme(Transform::identity(Alphabet::numeric(2), 2),
                     ColumnSet::inputs(2, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAnAont);
  }
}

TEST(RandomizedSchemeTest, RejectsBadDesignation) {
  for (const auto& d : {ColumnSet::inputs(2, {1, 2}), ColumnSet::outputs(2, {1}),
                        ColumnSet({}, 2)}) {
    try {
      RandomizedScheme(aont123(), d);
      FAIL() << d.to_string();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidDesignation);
    }
  }
}

TEST(DrawTest, DeterministicAndInRange) {
  EXPECT_EQ(draw_random_symbols(42, 10, 3), draw_random_symbols(42, 10, 3));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    for (Symbol sym : draw_random_symbols(seed, 4, 5)) ASSERT_LT(sym, 5u);
  }
  // Draw order: the first k draws are a prefix of the first k+1.
  const auto three = draw_random_symbols(7, 3, 4);
  const auto two = draw_random_symbols(7, 2, 4);
  EXPECT_TRUE(std::equal(two.begin(), two.end(), three.begin()));
}

TEST(DrawTest, MatchesDocumentedMapping) {
  std::mt19937_64 gen(99);
  const auto drawn = draw_random_symbols(99, 5, 3);
  for (Symbol sym : drawn) {
    const unsigned __int128 w = gen();
    EXPECT_EQ(sym, static_cast<Symbol>((w * 3) >> 64));
  }
}

TEST(RandomizedEncodeTest, ForcedDrawGivesTableRow) {
  const Alphabet a = abc();
  const auto seed = seed_with_first_draw(0, 3);
  EXPECT_EQ(randomized_encode(scheme_x2(), tup(a, "a"), seed), tup(a, "aa"));
}

TEST(RandomizedEncodeTest, DegenerateSchemeIsPlainTransform) {
  const auto phi = Transform::identity(Alphabet::numeric(2), 2).with_t(2);
  const RandomizedScheme scheme(phi, ColumnSet::inputs(2, {1, 2}));
  EXPECT_TRUE(scheme.random_positions().empty());
  for (std::uint64_t seed : {0u, 1u, 12345u}) {
    EXPECT_EQ(randomized_encode(scheme, Tuple{1, 0}, seed), (Tuple{1, 0}));
  }
}

TEST(RandomizedEncodeTest, OutputsCoverTableRowsForU) {
  const Alphabet a = abc();
  std::set<Tuple> seen;
  for (std::uint64_t seed = 0; seen.size() < 3 && seed < 1000; ++seed) {
    seen.insert(randomized_encode(scheme_x2(), tup(a, "c"), seed));
  }
  EXPECT_EQ(seen, (std::set<Tuple>{tup(a, "bc"), tup(a, "ca"), tup(a, "ab")}));
}

TEST(RandomizedEncodeTest, DecodeRecoversDesignatedInput) {
  const auto scheme = scheme_x2();
  for (Symbol u = 0; u < 3; ++u) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Tuple y = randomized_encode(scheme, Tuple{u}, seed);
      EXPECT_EQ(randomized_decode(scheme, y), Tuple{u});
    }
  }
}

TEST(RandomizedEncodeTest, ArityMismatch) {
  try {
    randomized_encode(scheme_x2(), Tuple{0, 1}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
}

TEST(InducedDistributionTest, Examples) {
  const std::vector<Rational> third(3, Rational(1, 3));
  EXPECT_EQ(induced_output_distribution(scheme_x2(), half_quarter_u(),
                                        ColumnSet::outputs(2, {2})),
            third);
  EXPECT_EQ(induced_output_distribution(scheme_x2(), skewed_u(),
                                        ColumnSet::outputs(2, {1})),
            third);
  EXPECT_EQ(induced_output_distribution(
                scheme_x2(), uniform_distribution(abc(), 1),
                ColumnSet::outputs(2, {1})),
            third);
}

TEST(InducedDistributionTest, WrongJSize) {
  try {
    induced_output_distribution(scheme_x2(), half_quarter_u(),
                                ColumnSet::outputs(2, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArityMismatch);
  }
}

TEST(RandomizedSecurityTest, Examples) {
  EXPECT_EQ(verify_randomized_perfect_security(scheme_x2(), half_quarter_u())
                .perfect,
            Verdict::kPass);
  const RandomizedScheme x1(aont123(), ColumnSet::inputs(2, {1}));
  const auto verdict = verify_randomized_perfect_security(x1, skewed_u());
  EXPECT_EQ(verdict.perfect, Verdict::kPass);
  EXPECT_FALSE(verdict.perfect_witness);
}

// Every valid scheme under every positive designated distribution gives
// uniform Y_J and passes the exact independence check.
TEST(RandomizedSecurityTest, HoldsForEveryAontAndDistribution) {
  std::mt19937_64 rng(41);
  struct Case { std::size_t t, s, v; };
  for (Case c : {Case{1, 2, 3}, Case{1, 3, 2}, Case{2, 3, 2}}) {
    SearchSpec spec;
    spec.t = c.t;
    spec.s = c.s;
    spec.v = c.v;
    spec.mode = SearchMode::kCollect;
    spec.limit = 12;
    const auto found = enumerate_aonts(spec);
    for (const auto& phi : found.solutions) {
      for (const auto& d : column_subsets(1, c.s, c.t, c.s)) {
        const RandomizedScheme scheme(phi, d);
        for (int k = 0; k < 4; ++k) {
          const auto dist = fixtures::random_distribution(rng, c.v, c.t);
          const Rational cell = make_ratio(1, checked_pow(c.v, c.s - c.t));
          for (const auto& j :
               column_subsets(c.s + 1, 2 * c.s, c.s - c.t, c.s)) {
            for (const auto& p : induced_output_distribution(scheme, dist, j)) {
              ASSERT_EQ(p, cell);
            }
          }
          ASSERT_EQ(verify_randomized_perfect_security(scheme, dist).perfect,
                    Verdict::kPass);
        }
      }
    }
  }
}

// Smoke test: empirical output frequencies for fixed u stay within 3σ of
// the exact law (each of the v^(s-t) reachable outputs has probability
// 1/v^(s-t)).
TEST(RandomizedSecurityTest, SampledFrequenciesMatchExactLaw) {
  const auto scheme = scheme_x2();
  const Alphabet a = abc();
  constexpr int kDraws = 100000;
  std::map<Tuple, int> freq;
  for (std::uint64_t seed = 0; seed < kDraws; ++seed) {
    ++freq[randomized_encode(scheme, tup(a, "b"), seed)];
  }
  ASSERT_EQ(freq.size(), 3u);
  const double p = 1.0 / 3.0;
  const double sigma = std::sqrt(kDraws * p * (1 - p));
  for (const auto& [y, n] : freq) {
    EXPECT_NEAR(n, kDraws * p, 3 * sigma);
  }
}

}  // namespace
}  // namespace aont
