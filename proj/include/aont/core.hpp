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

// Alphabets, tuple ranking, transforms and their array representation, and
// exact rational input distributions.
//
// Tuples are stored as symbol indices. A tuple over an alphabet of size v is
// ranked in mixed radix with the leftmost coordinate most significant, so
// ascending rank order is lexicographic order on the index tuples.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aont/error.hpp"

namespace aont {

using Symbol = std::uint32_t;
using Tuple = std::vector<Symbol>;
using Rank = std::uint64_t;
using Rational = mpq_class;

/// num/den in lowest terms.
inline Rational make_ratio(std::uint64_t num, std::uint64_t den) {
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

/// Largest v^s any operation accepts unless the caller passes its own bound.
inline constexpr std::uint64_t kDefaultSizeBound = std::uint64_t{1} << 24;

/// base^exp, refusing anything larger than `bound`.
inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp,
                                 std::uint64_t bound = kDefaultSizeBound) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > bound / base) {
      throw Error(ErrorCode::kSizeBoundExceeded,
                  std::to_string(base) + "^" + std::to_string(exp) +
                      " exceeds the size bound " + std::to_string(bound));
    }
    result *= base;
  }
  if (result > bound) {
    throw Error(ErrorCode::kSizeBoundExceeded,
                std::to_string(base) + "^" + std::to_string(exp) +
                    " exceeds the size bound " + std::to_string(bound));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Alphabet

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols)
      : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2) {
      throw Error(ErrorCode::kInvalidAlphabet,
                  "an alphabet needs at least two symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i].empty()) {
        throw Error(ErrorCode::kInvalidAlphabet, "empty symbol token");
      }
      auto [it, inserted] =
          index_.emplace(symbols_[i], static_cast<Symbol>(i));
      if (!inserted) {
        throw Error(ErrorCode::kInvalidAlphabet,
                    "duplicate symbol '" + symbols_[i] + "'");
      }
    }
  }

  /// The alphabet {"0", "1", ..., "v-1"}.
  static Alphabet numeric(std::size_t v) {
    std::vector<std::string> symbols;
    symbols.reserve(v);
    for (std::size_t i = 0; i < v; ++i) symbols.push_back(std::to_string(i));
    return Alphabet(std::move(symbols));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol(Symbol index) const { return symbols_.at(index); }

  bool contains(std::string_view token) const {
    return index_.find(token) != index_.end();
  }

  Symbol index_of(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) {
      throw Error(ErrorCode::kUnknownSymbol,
                  "symbol '" + std::string(token) + "' is not in the alphabet");
    }
    return it->second;
  }

  Tuple indices_of(std::span<const std::string> tokens) const {
    Tuple out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back(index_of(token));
    return out;
  }

  std::vector<std::string> names_of(std::span<const Symbol> tuple) const {
    std::vector<std::string> out;
    out.reserve(tuple.size());
    for (Symbol s : tuple) out.push_back(symbol(s));
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, Symbol, std::less<>> index_;
};

// ---------------------------------------------------------------------------
// Tuple ranking

struct TupleRank {
  Rank value = 0;
  std::size_t arity = 0;
  std::size_t base = 0;

  friend bool operator==(const TupleRank&, const TupleRank&) = default;
};

inline Rank rank_of(std::span<const Symbol> tuple, std::size_t v) {
  Rank r = 0;
  for (Symbol s : tuple) r = r * v + s;
  return r;
}

inline Tuple unrank(Rank rank, std::size_t arity, std::size_t v) {
  Tuple out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = static_cast<Symbol>(rank % v);
    rank /= v;
  }
  return out;
}

inline TupleRank rank_tuple(const Alphabet& alphabet,
                            std::span<const std::string> tuple) {
  Tuple indices = alphabet.indices_of(tuple);
  return {rank_of(indices, alphabet.size()), tuple.size(), alphabet.size()};
}

inline std::vector<std::string> unrank_tuple(const Alphabet& alphabet,
                                             TupleRank rank) {
  return alphabet.names_of(unrank(rank.value, rank.arity, alphabet.size()));
}

/// Rank of `tuple` restricted to the given zero-based coordinates.
inline Rank project_rank(std::span<const Symbol> tuple,
                         std::span<const std::size_t> coordinates,
                         std::size_t v) {
  Rank r = 0;
  for (std::size_t c : coordinates) r = r * v + tuple[c];
  return r;
}

// ---------------------------------------------------------------------------
// Column sets
//
// Columns are numbered 1..2s: 1..s are the inputs x_1..x_s and s+1..2s are the
// outputs y_1..y_s.

class ColumnSet {
 public:
  ColumnSet() = default;

  ColumnSet(std::vector<std::size_t> indices, std::size_t s)
      : indices_(std::move(indices)), s_(s) {
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (indices_[i] < 1 || indices_[i] > 2 * s) {
        throw Error(ErrorCode::kInvalidColumnSet,
                    "column " + std::to_string(indices_[i]) +
                        " is outside 1.." + std::to_string(2 * s));
      }
      if (i > 0 && indices_[i] == indices_[i - 1]) {
        throw Error(ErrorCode::kInvalidColumnSet,
                    "column " + std::to_string(indices_[i]) + " repeated");
      }
    }
  }

  /// Input positions 1..s, i.e. the x coordinates.
  static ColumnSet inputs(std::size_t s, std::vector<std::size_t> positions) {
    for (std::size_t p : positions) {
      if (p < 1 || p > s) {
        throw Error(ErrorCode::kInvalidColumnSet,
                    "input position " + std::to_string(p) + " is outside 1.." +
                        std::to_string(s));
      }
    }
    return ColumnSet(std::move(positions), s);
  }

  /// Output positions 1..s (y_1..y_s), stored as columns s+1..2s.
  static ColumnSet outputs(std::size_t s, std::vector<std::size_t> positions) {
    for (auto& p : positions) {
      if (p < 1 || p > s) {
        throw Error(ErrorCode::kInvalidColumnSet,
                    "output position " + std::to_string(p) +
                        " is outside 1.." + std::to_string(s));
      }
      p += s;
    }
    return ColumnSet(std::move(positions), s);
  }

  static ColumnSet all_inputs(std::size_t s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i + 1;
    return ColumnSet(std::move(idx), s);
  }

  static ColumnSet all_outputs(std::size_t s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = s + i + 1;
    return ColumnSet(std::move(idx), s);
  }

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  std::size_t s() const noexcept { return s_; }

  bool is_input_subset() const {
    return std::all_of(indices_.begin(), indices_.end(),
                       [&](std::size_t c) { return c <= s_; });
  }
  bool is_output_subset() const {
    return std::all_of(indices_.begin(), indices_.end(),
                       [&](std::size_t c) { return c > s_; });
  }

  /// Zero-based coordinates within the input or output s-tuple.
  std::vector<std::size_t> coordinates() const {
    std::vector<std::size_t> out;
    out.reserve(indices_.size());
    for (std::size_t c : indices_) out.push_back(c <= s_ ? c - 1 : c - s_ - 1);
    return out;
  }

  ColumnSet united_with(const ColumnSet& other) const {
    std::vector<std::size_t> merged = indices_;
    merged.insert(merged.end(), other.indices_.begin(), other.indices_.end());
    return ColumnSet(std::move(merged), s_);
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(indices_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;
  friend auto operator<=>(const ColumnSet& a, const ColumnSet& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
  std::size_t s_ = 0;
};

/// All k-subsets of the columns first..last, in ascending lexicographic order.
inline std::vector<ColumnSet> column_subsets(std::size_t first,
                                             std::size_t last, std::size_t k,
                                             std::size_t s) {
  std::vector<ColumnSet> out;
  if (last + 1 < first + k) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = first + i;
  while (true) {
    out.emplace_back(pick, s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == last - (k - i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transform: a bijection on Γ^s stored as a rank table.

class Transform {
 public:
  Transform(Alphabet alphabet, std::size_t s, std::size_t t,
            std::vector<Rank> table, std::uint64_t size_bound = kDefaultSizeBound)
      : alphabet_(std::move(alphabet)), s_(s), t_(t), table_(std::move(table)) {
    if (s == 0) throw Error(ErrorCode::kInvalidT, "s must be positive");
    if (t < 1 || t > s) {
      throw Error(ErrorCode::kInvalidT, "t=" + std::to_string(t) +
                                            " is outside 1.." +
                                            std::to_string(s));
    }
    const std::uint64_t n = checked_pow(alphabet_.size(), s, size_bound);
    if (table_.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "transform table has " + std::to_string(table_.size()) +
                      " entries, expected " + std::to_string(n));
    }
    inverse_.assign(n, n);
    for (Rank x = 0; x < n; ++x) {
      const Rank y = table_[x];
      if (y >= n || inverse_[y] != n) {
        throw Error(ErrorCode::kNotABijection,
                    "output rank " + std::to_string(y) +
                        (y >= n ? " is out of range" : " is hit twice"));
      }
      inverse_[y] = x;
    }
  }

  static Transform identity(Alphabet alphabet, std::size_t s,
                            std::size_t t = 1) {
    const std::uint64_t n = checked_pow(alphabet.size(), s);
    std::vector<Rank> table(n);
    for (Rank x = 0; x < n; ++x) table[x] = x;
    return Transform(std::move(alphabet), s, t, std::move(table));
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t v() const noexcept { return alphabet_.size(); }
  std::size_t s() const noexcept { return s_; }
  std::size_t t() const noexcept { return t_; }
  std::uint64_t size() const noexcept { return table_.size(); }
  const std::vector<Rank>& table() const noexcept { return table_; }

  Rank operator()(Rank input) const { return table_.at(input); }
  Rank inverse(Rank output) const { return inverse_.at(output); }

  Tuple apply(std::span<const Symbol> input) const {
    if (input.size() != s_) {
      throw Error(ErrorCode::kArityMismatch, "expected an s-tuple");
    }
    return unrank(table_.at(rank_of(input, v())), s_, v());
  }

  Transform with_t(std::size_t t) const {
    return Transform(alphabet_, s_, t, table_);
  }

  friend bool operator==(const Transform& a, const Transform& b) {
    return a.alphabet_ == b.alphabet_ && a.s_ == b.s_ && a.t_ == b.t_ &&
           a.table_ == b.table_;
  }

 private:
  Alphabet alphabet_;
  std::size_t s_;
  std::size_t t_;
  std::vector<Rank> table_;
  std::vector<Rank> inverse_;
};

// ---------------------------------------------------------------------------
// AontArray: the (v^s, 2s, v) array representation.
//
// Row order is free but the input half must enumerate Γ^s exactly once. The
// output half is unconstrained so that non-bijective arrays can be examined.

class AontArray {
 public:
  AontArray(Alphabet alphabet, std::size_t s, std::vector<Symbol> cells,
            std::uint64_t size_bound = kDefaultSizeBound)
      : alphabet_(std::move(alphabet)), s_(s), cells_(std::move(cells)) {
    if (s == 0) throw Error(ErrorCode::kInvalidArray, "s must be positive");
    const std::uint64_t n = checked_pow(alphabet_.size(), s, size_bound);
    if (cells_.size() != n * 2 * s) {
      throw Error(ErrorCode::kInvalidArray,
                  "expected " + std::to_string(n) + " rows of width " +
                      std::to_string(2 * s));
    }
    std::vector<bool> seen(n, false);
    for (std::uint64_t i = 0; i < n; ++i) {
      auto r = row(i);
      for (Symbol c : r) {
        if (c >= alphabet_.size()) {
          throw Error(ErrorCode::kInvalidArray, "symbol index out of range");
        }
      }
      const Rank x = rank_of(r.first(s), alphabet_.size());
      if (seen[x]) {
        throw Error(ErrorCode::kInvalidArray,
                    "input tuple of row " + std::to_string(i + 1) +
                        " appears more than once");
      }
      seen[x] = true;
    }
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t v() const noexcept { return alphabet_.size(); }
  std::size_t s() const noexcept { return s_; }
  std::size_t width() const noexcept { return 2 * s_; }
  std::uint64_t row_count() const noexcept { return cells_.size() / (2 * s_); }

  std::span<const Symbol> row(std::uint64_t i) const {
    return std::span<const Symbol>(cells_).subspan(i * 2 * s_, 2 * s_);
  }
  std::span<const Symbol> inputs(std::uint64_t i) const {
    return row(i).first(s_);
  }
  std::span<const Symbol> outputs(std::uint64_t i) const {
    return row(i).last(s_);
  }
  /// Entry of row i in the 1-based column c.
  Symbol at(std::uint64_t i, std::size_t c) const { return row(i)[c - 1]; }

  const std::vector<Symbol>& cells() const noexcept { return cells_; }

  friend bool operator==(const AontArray&, const AontArray&) = default;

 private:
  Alphabet alphabet_;
  std::size_t s_;
  std::vector<Symbol> cells_;
};

/// Rows are emitted in ascending input rank.
inline AontArray array_from_transform(const Transform& phi) {
  const std::size_t s = phi.s();
  const std::size_t v = phi.v();
  std::vector<Symbol> cells;
  cells.reserve(phi.size() * 2 * s);
  for (Rank x = 0; x < phi.size(); ++x) {
    Tuple in = unrank(x, s, v);
    Tuple out = unrank(phi(x), s, v);
    cells.insert(cells.end(), in.begin(), in.end());
    cells.insert(cells.end(), out.begin(), out.end());
  }
  return AontArray(phi.alphabet(), s, std::move(cells));
}

/// φ(x_1..x_s) = (x_{s+1}..x_{2s}) per row. Throws NotABijection when two
/// rows share an output tuple.
inline Transform transform_from_array(const AontArray& arr, std::size_t t = 1) {
  const std::size_t s = arr.s();
  const std::size_t v = arr.v();
  std::vector<Rank> table(arr.row_count());
  std::vector<std::uint64_t> owner(arr.row_count(), arr.row_count());
  for (std::uint64_t i = 0; i < arr.row_count(); ++i) {
    const Rank x = rank_of(arr.inputs(i), v);
    const Rank y = rank_of(arr.outputs(i), v);
    if (owner[y] != arr.row_count()) {
      throw Error(ErrorCode::kNotABijection,
                  "rows " + std::to_string(owner[y] + 1) + " and " +
                      std::to_string(i + 1) + " share an output tuple");
    }
    owner[y] = i;
    table[x] = y;
  }
  return Transform(arr.alphabet(), s, t, std::move(table));
}

// ---------------------------------------------------------------------------
// InputDistribution: exact probabilities over all k-tuples, indexed by rank.

class InputDistribution {
 public:
  InputDistribution(std::size_t v, std::size_t arity, std::vector<Rational> probs,
                    std::uint64_t size_bound = kDefaultSizeBound)
      : v_(v), arity_(arity), probs_(std::move(probs)) {
    const std::uint64_t n = checked_pow(v, arity, size_bound);
    if (probs_.size() != n) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "expected " + std::to_string(n) + " probabilities, got " +
                      std::to_string(probs_.size()));
    }
    Rational total = 0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      probs_[i].canonicalize();
      if (sgn(probs_[i]) <= 0) {
        throw Error(ErrorCode::kInvalidDistribution,
                    "probability of tuple rank " + std::to_string(i) +
                        " is not positive");
      }
      total += probs_[i];
    }
    if (total != 1) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "probabilities sum to " + total.get_str() + ", not 1");
    }
  }

  std::size_t v() const noexcept { return v_; }
  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return probs_.size(); }
  const Rational& operator[](Rank r) const { return probs_[r]; }
  const Rational& probability(Rank r) const { return probs_.at(r); }
  const std::vector<Rational>& probs() const noexcept { return probs_; }

  bool is_uniform() const {
    return std::all_of(probs_.begin(), probs_.end(),
                       [&](const Rational& p) { return p == probs_.front(); });
  }

  friend bool operator==(const InputDistribution&,
                         const InputDistribution&) = default;

 private:
  std::size_t v_;
  std::size_t arity_;
  std::vector<Rational> probs_;
};

inline InputDistribution uniform_distribution(
    const Alphabet& alphabet, std::size_t s,
    std::uint64_t size_bound = kDefaultSizeBound) {
  const std::uint64_t n = checked_pow(alphabet.size(), s, size_bound);
  Rational p(1, static_cast<unsigned long>(n));
  return InputDistribution(alphabet.size(), s, std::vector<Rational>(n, p),
                           size_bound);
}

/// Independent coordinates: Pr[x] = Π_i marginals[i][x_i].
inline InputDistribution product_distribution(
    const Alphabet& alphabet, std::size_t s,
    const std::vector<std::vector<Rational>>& marginals,
    std::uint64_t size_bound = kDefaultSizeBound) {
  const std::size_t v = alphabet.size();
  if (marginals.size() != s) {
    throw Error(ErrorCode::kInvalidMarginal,
                "expected " + std::to_string(s) + " marginals");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (marginals[i].size() != v) {
      throw Error(ErrorCode::kInvalidMarginal,
                  "marginal " + std::to_string(i + 1) + " has the wrong length");
    }
    Rational total = 0;
    for (const auto& p : marginals[i]) {
      if (sgn(p) <= 0) {
        throw Error(ErrorCode::kInvalidMarginal,
                    "marginal " + std::to_string(i + 1) +
                        " has a non-positive entry");
      }
      total += p;
    }
    if (total != 1) {
      throw Error(ErrorCode::kInvalidMarginal,
                  "marginal " + std::to_string(i + 1) + " sums to " +
                      total.get_str());
    }
  }
  const std::uint64_t n = checked_pow(v, s, size_bound);
  std::vector<Rational> probs(n);
  for (Rank x = 0; x < n; ++x) {
    Tuple tuple = unrank(x, s, v);
    Rational p = 1;
    for (std::size_t i = 0; i < s; ++i) p *= marginals[i][tuple[i]];
    probs[x] = p;
  }
  return InputDistribution(v, s, std::move(probs), size_bound);
}

}  // namespace aont
