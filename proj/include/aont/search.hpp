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

// Enumeration of all (t,s,v)-AONTs for small parameters, and linear AONTs
// over prime-order alphabets.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aont/core.hpp"

namespace aont {

enum class SearchMode { kCountOnly, kCollect };

struct SearchSpec {
  std::size_t t = 1;
  std::size_t s = 2;
  std::size_t v = 2;
  SearchMode mode = SearchMode::kCountOnly;
  /// Cap on collected transforms. Counting always runs to completion.
  std::optional<std::uint64_t> limit;
  /// Fix φ(first input) = first output. Every solution count is then divided
  /// by exactly v^s, since per-coordinate relabeling of outputs preserves the
  /// AONT property and acts transitively on output tuples.
  bool canonical_only = false;
  std::uint64_t size_bound = kDefaultSizeBound;
};

struct SearchResult {
  std::uint64_t count = 0;
  bool canonical_only = false;
  /// Present in collect mode, in enumeration order.
  std::vector<Transform> solutions;
};

namespace detail {

// Depth-first assignment of φ(0), φ(1), ... with one occupancy table per
// mixed column family I ∪ J. The output family is the `used` mask. Every
// |I ∪ J| = s, so each quota is N / v^s = 1 and a complete assignment that
// never exceeded a quota is unbiased on every family.
class AontSearcher {
 public:
  explicit AontSearcher(const SearchSpec& spec)
      : spec_(spec),
        alphabet_(Alphabet::numeric(spec.v)),
        n_(checked_pow(spec.v, spec.s, spec.size_bound)) {
    const std::size_t s = spec.s;
    const std::size_t v = spec.v;
    if (spec.v < 2) throw Error(ErrorCode::kInvalidAlphabet, "v must be >= 2");
    if (spec.t < 1 || spec.t > s) {
      throw Error(ErrorCode::kInvalidT, "t=" + std::to_string(spec.t) +
                                            " is outside 1.." +
                                            std::to_string(s));
    }
    if (spec.t < s) {
      for (const auto& in : column_subsets(1, s, spec.t, s)) {
        for (const auto& out : column_subsets(s + 1, 2 * s, s - spec.t, s)) {
          Family fam;
          fam.out_cells = checked_pow(v, out.size());
          const std::uint64_t cells = checked_pow(v, in.size()) * fam.out_cells;
          fam.quota = n_ / cells;
          fam.counts.assign(cells, 0);
          fam.in_key.resize(n_);
          fam.out_key.resize(n_);
          const auto ic = in.coordinates();
          const auto oc = out.coordinates();
          for (Rank r = 0; r < n_; ++r) {
            const Tuple tup = unrank(r, s, v);
            fam.in_key[r] = project_rank(tup, ic, v);
            fam.out_key[r] = project_rank(tup, oc, v);
          }
          families_.push_back(std::move(fam));
        }
      }
    }
    used_.assign(n_, false);
    table_.assign(n_, 0);
  }

  SearchResult run() {
    result_ = SearchResult{};
    result_.canonical_only = spec_.canonical_only;
    if (spec_.canonical_only) {
      if (place(0, 0)) {
        extend(1);
        unplace(0, 0);
      }
    } else {
      extend(0);
    }
    return std::move(result_);
  }

 private:
  struct Family {
    std::uint64_t quota = 1;
    std::uint64_t out_cells = 1;
    std::vector<std::uint64_t> counts;
    std::vector<Rank> in_key;
    std::vector<Rank> out_key;
  };

  bool place(Rank x, Rank y) {
    std::size_t k = 0;
    for (; k < families_.size(); ++k) {
      auto& f = families_[k];
      auto& c = f.counts[f.in_key[x] * f.out_cells + f.out_key[y]];
      if (c == f.quota) break;
      ++c;
    }
    if (k < families_.size()) {
      for (std::size_t j = 0; j < k; ++j) {
        auto& f = families_[j];
        --f.counts[f.in_key[x] * f.out_cells + f.out_key[y]];
      }
      return false;
    }
    used_[y] = true;
    table_[x] = y;
    return true;
  }

  void unplace(Rank x, Rank y) {
    for (auto& f : families_) {
      --f.counts[f.in_key[x] * f.out_cells + f.out_key[y]];
    }
    used_[y] = false;
  }

  void extend(Rank x) {
    if (x == n_) {
      if (spec_.mode == SearchMode::kCollect &&
          (!spec_.limit || result_.solutions.size() < *spec_.limit)) {
        result_.solutions.emplace_back(alphabet_, spec_.s, spec_.t, table_,
                                       spec_.size_bound);
      }
      ++result_.count;
      return;
    }
    for (Rank y = 0; y < n_; ++y) {
      if (used_[y] || !place(x, y)) continue;
      extend(x + 1);
      unplace(x, y);
    }
  }

  SearchSpec spec_;
  Alphabet alphabet_;
  std::uint64_t n_;
  std::vector<Family> families_;
  std::vector<bool> used_;
  std::vector<Rank> table_;
  SearchResult result_;
};

}  // namespace detail

/// Every bijection on {0..v-1}^s whose array passes the combinatorial test at
/// t, in order of input rank then candidate output rank.
inline SearchResult enumerate_aonts(const SearchSpec& spec) {
  return detail::AontSearcher(spec).run();
}

// ---------------------------------------------------------------------------
// Linear AONTs: φ(x) = M·x over the integers mod p.

struct LinearSpec {
  std::uint32_t p = 2;
  std::size_t s = 0;
  /// s rows of s entries, row-major.
  std::vector<std::vector<std::uint32_t>> matrix;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Rank of an s×s matrix over GF(p), by Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> m,
                              std::uint64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = inverse(m[rank][c]);
    for (auto& e : m[rank]) e = e * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const std::uint64_t f = m[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline Transform linear_aont(const LinearSpec& spec, std::size_t t = 1) {
  const std::size_t s = spec.s;
  const std::uint64_t p = spec.p;
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidModulus,
                std::to_string(p) + " is not prime");
  }
  if (s == 0 || spec.matrix.size() != s) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix must be s x s");
  }
  std::vector<std::vector<std::uint64_t>> m(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (spec.matrix[i].size() != s) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix must be s x s");
    }
    for (auto e : spec.matrix[i]) m[i].push_back(e % p);
  }
  if (rank_mod_p(m, p) != s) {
    throw Error(ErrorCode::kSingularMatrix,
                "matrix is not invertible mod " + std::to_string(p));
  }
  const std::uint64_t n = checked_pow(p, s);
  std::vector<Rank> table(n);
  Tuple y(s);
  for (Rank x = 0; x < n; ++x) {
    const Tuple in = unrank(x, s, p);
    for (std::size_t i = 0; i < s; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < s; ++j) acc = (acc + m[i][j] * in[j]) % p;
      y[i] = static_cast<Symbol>(acc);
    }
    table[x] = rank_of(y, p);
  }
  return Transform(Alphabet::numeric(p), s, t, std::move(table));
}

}  // namespace aont
