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

// Shared fixtures: the (1,2,3)-AONT over {a,b,c}, its distributions, and
// small conversion helpers between oracle strings and library tuples.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "aont/core.hpp"
#include "oracle.hpp"

namespace fixtures {

inline aont::Alphabet abc() { return aont::Alphabet({"a", "b", "c"}); }

/// "ab" -> indices of 'a', 'b' in the alphabet.
inline aont::Tuple tup(const aont::Alphabet& alphabet, const std::string& word) {
  aont::Tuple out;
  for (char c : word) out.push_back(alphabet.index_of(std::string(1, c)));
  return out;
}

inline aont::Transform from_map(const aont::Alphabet& alphabet,
                                const oracle::Map& rows, std::size_t s,
                                std::size_t t) {
  std::vector<aont::Rank> table(rows.size());
  for (const auto& [x, y] : rows) {
    table[aont::rank_of(tup(alphabet, x), alphabet.size())] =
        aont::rank_of(tup(alphabet, y), alphabet.size());
  }
  return aont::Transform(alphabet, s, t, std::move(table));
}

inline oracle::Map to_map(const aont::Transform& phi, const std::string& chars) {
  oracle::Map rows;
  for (aont::Rank x = 0; x < phi.size(); ++x) {
    std::string in, out;
    for (auto sym : aont::unrank(x, phi.s(), phi.v())) in += chars[sym];
    for (auto sym : aont::unrank(phi(x), phi.s(), phi.v())) out += chars[sym];
    rows.emplace_back(in, out);
  }
  return rows;
}

inline aont::Transform aont123() { return from_map(abc(), oracle::aont123(), 2, 1); }

inline aont::InputDistribution from_oracle(const aont::Alphabet& alphabet,
                                           const oracle::Dist& dist,
                                           std::size_t arity) {
  std::vector<aont::Rational> probs(dist.size());
  for (const auto& [word, p] : dist) {
    probs[aont::rank_of(tup(alphabet, word), alphabet.size())] = p;
  }
  return aont::InputDistribution(alphabet.size(), arity, std::move(probs));
}

inline oracle::Dist to_oracle(const aont::InputDistribution& dist,
                              const std::string& chars) {
  oracle::Dist out;
  for (aont::Rank r = 0; r < dist.size(); ++r) {
    std::string w;
    for (auto sym : aont::unrank(r, dist.arity(), dist.v())) w += chars[sym];
    out[w] = dist[r];
  }
  return out;
}

/// x_1 uniform, x_2 with (1/2, 1/4, 1/4), independent.
inline aont::InputDistribution half_quarter() {
  using aont::Rational;
  return aont::product_distribution(
      abc(), 2,
      {{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
       {Rational(1, 2), Rational(1, 4), Rational(1, 4)}});
}

/// Distribution over v^arity tuples with integer weights drawn from
/// [1, max_weight], normalised exactly.
inline aont::InputDistribution random_distribution(std::mt19937_64& rng,
                                                   std::size_t v,
                                                   std::size_t arity,
                                                   unsigned max_weight = 20) {
  const auto n = aont::checked_pow(v, arity);
  std::uniform_int_distribution<unsigned> pick(1, max_weight);
  std::vector<unsigned> w(n);
  unsigned long total = 0;
  for (auto& x : w) {
    x = pick(rng);
    total += x;
  }
  std::vector<aont::Rational> probs;
  for (auto x : w) probs.push_back(aont::make_ratio(x, total));
  return aont::InputDistribution(v, arity, std::move(probs));
}

inline aont::Transform random_bijection(std::mt19937_64& rng,
                                        const aont::Alphabet& alphabet,
                                        std::size_t s, std::size_t t) {
  std::vector<aont::Rank> table(aont::checked_pow(alphabet.size(), s));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  std::shuffle(table.begin(), table.end(), rng);
  return aont::Transform(alphabet, s, t, std::move(table));
}

}  // namespace fixtures
