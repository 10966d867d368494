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

// Unbiasedness of an array with respect to a column subset, and the
// combinatorial AONT test built from it.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aont/core.hpp"

namespace aont {

enum class CheckMode {
  kFirstFailure,  // stop at the first violation
  kExhaustive,    // record every violation
};

struct UnbiasedViolation {
  Tuple tuple;
  std::uint64_t observed = 0;

  friend bool operator==(const UnbiasedViolation&,
                         const UnbiasedViolation&) = default;
};

struct UnbiasednessReport {
  ColumnSet subset;
  std::uint64_t expected_count = 0;
  bool pass = false;
  /// Lexicographically least tuple whose count is wrong.
  std::optional<UnbiasedViolation> first_violation;
  /// Every violation, in lexicographic order. Filled in exhaustive mode only.
  std::vector<UnbiasedViolation> violations;
};

/// Counts every |D|-tuple of A_D and compares with N / v^|D|.
inline UnbiasednessReport is_unbiased(const AontArray& arr, const ColumnSet& d,
                                      CheckMode mode = CheckMode::kFirstFailure) {
  if (d.s() != arr.s()) {
    throw Error(ErrorCode::kInvalidColumnSet,
                "column set built for s=" + std::to_string(d.s()) +
                    ", array has s=" + std::to_string(arr.s()));
  }
  if (d.empty()) {
    throw Error(ErrorCode::kInvalidColumnSet, "column set is empty");
  }
  if (d.size() > arr.s()) {
    throw Error(ErrorCode::kSubsetTooLarge,
                "|D|=" + std::to_string(d.size()) + " exceeds s=" +
                    std::to_string(arr.s()));
  }
  const std::size_t v = arr.v();
  const std::uint64_t cells = checked_pow(v, d.size());
  UnbiasednessReport report;
  report.subset = d;
  report.expected_count = arr.row_count() / cells;

  // Row entries are addressed by zero-based column index within the row.
  std::vector<std::size_t> columns;
  columns.reserve(d.size());
  for (std::size_t c : d.indices()) columns.push_back(c - 1);

  std::vector<std::uint64_t> counts(cells, 0);
  for (std::uint64_t i = 0; i < arr.row_count(); ++i) {
    ++counts[project_rank(arr.row(i), columns, v)];
  }

  report.pass = true;
  for (Rank r = 0; r < cells; ++r) {
    if (counts[r] == report.expected_count) continue;
    UnbiasedViolation violation{unrank(r, d.size(), v), counts[r]};
    if (report.pass) {
      report.pass = false;
      report.first_violation = violation;
      if (mode == CheckMode::kFirstFailure) break;
    }
    report.violations.push_back(std::move(violation));
  }
  return report;
}

/// One member I ∪ J of the mixed family.
struct MixedSubsetCheck {
  ColumnSet inputs;
  ColumnSet outputs;
  UnbiasednessReport report;
};

struct CombinatorialReport {
  std::size_t t = 0;
  bool pass = false;
  UnbiasednessReport input_family;   // {1..s}
  UnbiasednessReport output_family;  // {s+1..2s}
  /// t = s: the only mixed subset is {1..s}, already covered by input_family.
  bool mixed_family_vacuous = false;
  /// False when an earlier family failed in first-failure mode.
  bool mixed_family_checked = false;
  std::size_t mixed_subsets_checked = 0;
  /// Failing I ∪ J in (I, J) lexicographic order; at most one entry unless
  /// the check ran exhaustively.
  std::vector<MixedSubsetCheck> mixed_failures;

  /// 0 on pass, otherwise the lowest failing family (1, 2 or 3).
  int failed_family() const {
    if (!input_family.pass) return 1;
    if (!output_family.pass) return 2;
    if (!mixed_failures.empty()) return 3;
    return 0;
  }
};

inline CombinatorialReport verify_aont(const AontArray& arr, std::size_t t,
                                       CheckMode mode = CheckMode::kFirstFailure) {
  const std::size_t s = arr.s();
  if (t < 1 || t > s) {
    throw Error(ErrorCode::kInvalidT, "t=" + std::to_string(t) +
                                          " is outside 1.." + std::to_string(s));
  }
  CombinatorialReport report;
  report.t = t;
  report.input_family = is_unbiased(arr, ColumnSet::all_inputs(s), mode);
  report.output_family = is_unbiased(arr, ColumnSet::all_outputs(s), mode);
  report.mixed_family_vacuous = (t == s);

  const bool early_ok = report.input_family.pass && report.output_family.pass;
  if (!report.mixed_family_vacuous &&
      (early_ok || mode == CheckMode::kExhaustive)) {
    report.mixed_family_checked = true;
    const auto input_sets = column_subsets(1, s, t, s);
    const auto output_sets = column_subsets(s + 1, 2 * s, s - t, s);
    bool stop = false;
    for (std::size_t a = 0; a < input_sets.size() && !stop; ++a) {
      for (std::size_t b = 0; b < output_sets.size() && !stop; ++b) {
        ++report.mixed_subsets_checked;
        auto sub = is_unbiased(arr, input_sets[a].united_with(output_sets[b]),
                               mode);
        if (!sub.pass) {
          report.mixed_failures.push_back(
              {input_sets[a], output_sets[b], std::move(sub)});
          stop = mode == CheckMode::kFirstFailure;
        }
      }
    }
  }
  report.pass = report.failed_family() == 0;
  return report;
}

inline CombinatorialReport verify_aont(const Transform& phi, std::size_t t,
                                       CheckMode mode = CheckMode::kFirstFailure) {
  return verify_aont(array_from_transform(phi), t, mode);
}

}  // namespace aont
