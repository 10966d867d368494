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

// Exact probability analysis of a transform under an input distribution.
//
// Verdicts are decided on rationals. Entropies and mutual information are
// reported in bits as doubles.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "aont/core.hpp"

namespace aont {

/// Values compared as floating-point reports are equal within this distance.
inline constexpr double kEntropyTolerance = 1e-12;

namespace detail {

inline void require_compatible(const InputDistribution& dist,
                               const Transform& phi) {
  if (dist.v() != phi.v() || dist.arity() != phi.s()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distribution is over " + std::to_string(dist.v()) + "^" +
                    std::to_string(dist.arity()) + " tuples, transform over " +
                    std::to_string(phi.v()) + "^" + std::to_string(phi.s()));
  }
}

inline void require_inputs(const ColumnSet& cols, std::size_t s) {
  if (cols.s() != s || !cols.is_input_subset()) {
    throw Error(ErrorCode::kInvalidColumnSet,
                cols.to_string() + " is not a set of input columns 1.." +
                    std::to_string(s));
  }
}

inline void require_outputs(const ColumnSet& cols, std::size_t s) {
  if (cols.s() != s || !cols.is_output_subset()) {
    throw Error(ErrorCode::kInvalidColumnSet,
                cols.to_string() + " is not a set of output columns " +
                    std::to_string(s + 1) + ".." + std::to_string(2 * s));
  }
}

inline void require_arity(std::span<const Symbol> tuple, const ColumnSet& cols,
                          std::size_t v) {
  if (tuple.size() != cols.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "tuple of length " + std::to_string(tuple.size()) +
                    " for column set " + cols.to_string());
  }
  for (Symbol sym : tuple) {
    if (sym >= v) throw Error(ErrorCode::kUnknownSymbol, "symbol out of range");
  }
}

}  // namespace detail

/// Joint law of (X_I, Y_J) with its two marginals, all exact.
///
/// joint is indexed by u_rank * v^|J| + v_rank.
struct JointTable {
  ColumnSet inputs;
  ColumnSet outputs;
  std::uint64_t input_cells = 0;
  std::uint64_t output_cells = 0;
  std::vector<Rational> joint;
  std::vector<Rational> input_marginal;
  std::vector<Rational> output_marginal;

  const Rational& at(Rank u, Rank v) const {
    return joint[u * output_cells + v];
  }
};

inline JointTable joint_table(const InputDistribution& dist,
                              const Transform& phi, const ColumnSet& inputs,
                              const ColumnSet& outputs) {
  detail::require_compatible(dist, phi);
  detail::require_inputs(inputs, phi.s());
  detail::require_outputs(outputs, phi.s());
  const std::size_t s = phi.s();
  const std::size_t v = phi.v();
  JointTable table;
  table.inputs = inputs;
  table.outputs = outputs;
  table.input_cells = checked_pow(v, inputs.size());
  table.output_cells = checked_pow(v, outputs.size());
  table.joint.assign(table.input_cells * table.output_cells, Rational(0));
  table.input_marginal.assign(table.input_cells, Rational(0));
  table.output_marginal.assign(table.output_cells, Rational(0));

  const auto in_coords = inputs.coordinates();
  const auto out_coords = outputs.coordinates();
  for (Rank x = 0; x < phi.size(); ++x) {
    const Tuple in = unrank(x, s, v);
    const Tuple out = unrank(phi(x), s, v);
    const Rank u = project_rank(in, in_coords, v);
    const Rank w = project_rank(out, out_coords, v);
    table.joint[u * table.output_cells + w] += dist[x];
    table.input_marginal[u] += dist[x];
    table.output_marginal[w] += dist[x];
  }
  return table;
}

/// Pr[X_I = u].
inline Rational marginal_input(const InputDistribution& dist,
                               const ColumnSet& inputs,
                               std::span<const Symbol> u) {
  detail::require_inputs(inputs, dist.arity());
  detail::require_arity(u, inputs, dist.v());
  const auto coords = inputs.coordinates();
  const Rank target = rank_of(u, dist.v());
  Rational total = 0;
  for (Rank x = 0; x < dist.size(); ++x) {
    if (project_rank(unrank(x, dist.arity(), dist.v()), coords, dist.v()) ==
        target) {
      total += dist[x];
    }
  }
  return total;
}

/// Pr[Y_J = w].
inline Rational marginal_output(const InputDistribution& dist,
                                const Transform& phi, const ColumnSet& outputs,
                                std::span<const Symbol> w) {
  detail::require_compatible(dist, phi);
  detail::require_outputs(outputs, phi.s());
  detail::require_arity(w, outputs, phi.v());
  const auto coords = outputs.coordinates();
  const Rank target = rank_of(w, phi.v());
  Rational total = 0;
  for (Rank x = 0; x < phi.size(); ++x) {
    if (project_rank(unrank(phi(x), phi.s(), phi.v()), coords, phi.v()) ==
        target) {
      total += dist[x];
    }
  }
  return total;
}

/// Pr[X_I = u, Y_J = w].
inline Rational joint(const InputDistribution& dist, const Transform& phi,
                      const ColumnSet& inputs, const ColumnSet& outputs,
                      std::span<const Symbol> u, std::span<const Symbol> w) {
  detail::require_compatible(dist, phi);
  detail::require_inputs(inputs, phi.s());
  detail::require_outputs(outputs, phi.s());
  detail::require_arity(u, inputs, phi.v());
  detail::require_arity(w, outputs, phi.v());
  const auto in_coords = inputs.coordinates();
  const auto out_coords = outputs.coordinates();
  const Rank u_rank = rank_of(u, phi.v());
  const Rank w_rank = rank_of(w, phi.v());
  Rational total = 0;
  for (Rank x = 0; x < phi.size(); ++x) {
    if (project_rank(unrank(x, phi.s(), phi.v()), in_coords, phi.v()) ==
            u_rank &&
        project_rank(unrank(phi(x), phi.s(), phi.v()), out_coords, phi.v()) ==
            w_rank) {
      total += dist[x];
    }
  }
  return total;
}

struct ConditionalTable {
  ColumnSet inputs;
  ColumnSet outputs;
  Tuple given;
  /// Pr[X_I = u | Y_J = given], indexed by the rank of u.
  std::vector<Rational> entries;
};

inline ConditionalTable conditional_input_given_output(
    const InputDistribution& dist, const Transform& phi,
    const ColumnSet& inputs, const ColumnSet& outputs,
    std::span<const Symbol> given) {
  detail::require_arity(given, outputs, phi.v());
  const JointTable table = joint_table(dist, phi, inputs, outputs);
  const Rank w = rank_of(given, phi.v());
  const Rational& denom = table.output_marginal[w];
  if (sgn(denom) == 0) {
    throw Error(ErrorCode::kZeroConditioningEvent,
                "Pr[Y_J = given] is zero for J=" + outputs.to_string());
  }
  ConditionalTable out{inputs, outputs, Tuple(given.begin(), given.end()), {}};
  out.entries.reserve(table.input_cells);
  for (Rank u = 0; u < table.input_cells; ++u) {
    out.entries.push_back(table.at(u, w) / denom);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Verdict { kNotChecked, kPass, kFail };

/// For a perfect-security failure lhs = Pr[X_I=u, Y_J=v] and
/// rhs = Pr[X_I=u]·Pr[Y_J=v]. For a weak-security failure lhs is the zero
/// conditional Pr[X_I=u | Y_J=v] and rhs the prior Pr[X_I=u].
struct SecurityWitness {
  ColumnSet inputs;
  ColumnSet outputs;
  Tuple u;
  Tuple v;
  Rational lhs;
  Rational rhs;
};

struct SecurityVerdict {
  Verdict perfect = Verdict::kNotChecked;
  Verdict weak = Verdict::kNotChecked;
  std::optional<SecurityWitness> perfect_witness;
  std::optional<SecurityWitness> weak_witness;
};

namespace detail {

inline void require_positive(const InputDistribution& dist) {
  for (const auto& p : dist.probs()) {
    if (sgn(p) <= 0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "distribution has a non-positive entry");
    }
  }
}

// Walks every |I| = t, |J| = s-t pair in lexicographic (I, J, u, v) order and
// records the first failure of each requested condition.
inline SecurityVerdict check_security(const InputDistribution& dist,
                                      const Transform& phi, std::size_t t,
                                      bool check_perfect) {
  require_compatible(dist, phi);
  require_positive(dist);
  const std::size_t s = phi.s();
  const std::size_t v = phi.v();
  SecurityVerdict verdict;
  verdict.weak = Verdict::kPass;
  if (check_perfect) verdict.perfect = Verdict::kPass;

  const auto input_sets = column_subsets(1, s, t, s);
  const auto output_sets = column_subsets(s + 1, 2 * s, s - t, s);
  for (const auto& in : input_sets) {
    for (const auto& out : output_sets) {
      const JointTable table = joint_table(dist, phi, in, out);
      for (Rank u = 0; u < table.input_cells; ++u) {
        for (Rank w = 0; w < table.output_cells; ++w) {
          const Rational& lhs = table.at(u, w);
          if (verdict.weak == Verdict::kPass && sgn(lhs) == 0) {
            verdict.weak = Verdict::kFail;
            verdict.weak_witness = SecurityWitness{
                in, out, unrank(u, t, v), unrank(w, s - t, v), Rational(0),
                table.input_marginal[u]};
          }
          if (verdict.perfect == Verdict::kPass) {
            Rational rhs = table.input_marginal[u] * table.output_marginal[w];
            if (lhs != rhs) {
              verdict.perfect = Verdict::kFail;
              verdict.perfect_witness =
                  SecurityWitness{in,  out, unrank(u, t, v), unrank(w, s - t, v),
                                  lhs, rhs};
            }
          }
        }
      }
    }
  }
  return verdict;
}

}  // namespace detail

/// Independence of every t inputs from every s-t outputs, decided exactly.
/// Requires 1 <= t <= s-1. The weak verdict is filled in as well.
inline SecurityVerdict is_perfectly_secure(const InputDistribution& dist,
                                           const Transform& phi, std::size_t t) {
  if (t < 1 || t + 1 > phi.s()) {
    throw Error(ErrorCode::kInvalidT,
                "perfect security is analysed for 1 <= t <= s-1, got t=" +
                    std::to_string(t) + " with s=" + std::to_string(phi.s()));
  }
  return detail::check_security(dist, phi, t, true);
}

/// Every joint Pr[X_I = u, Y_J = v] is positive. Requires 1 <= t <= s.
inline SecurityVerdict is_weakly_secure(const InputDistribution& dist,
                                        const Transform& phi, std::size_t t) {
  if (t < 1 || t > phi.s()) {
    throw Error(ErrorCode::kInvalidT, "t=" + std::to_string(t) +
                                          " is outside 1.." +
                                          std::to_string(phi.s()));
  }
  return detail::check_security(dist, phi, t, false);
}

// ---------------------------------------------------------------------------
// Entropy and mutual information, in bits.

inline double entropy(std::span<const Rational> p) {
  Rational total = 0;
  for (const auto& q : p) {
    if (sgn(q) < 0) {
      throw Error(ErrorCode::kNotADistribution, "negative probability");
    }
    total += q;
  }
  if (total != 1) {
    throw Error(ErrorCode::kNotADistribution,
                "probabilities sum to " + total.get_str());
  }
  double h = 0.0;
  for (const auto& q : p) {
    if (sgn(q) == 0) continue;
    const double x = q.get_d();
    h -= x * std::log2(x);
  }
  return h;
}

/// H(X_I) for the input marginal over I.
inline double input_entropy(const InputDistribution& dist,
                            const ColumnSet& inputs) {
  detail::require_inputs(inputs, dist.arity());
  const auto coords = inputs.coordinates();
  std::vector<Rational> marginal(checked_pow(dist.v(), inputs.size()),
                                 Rational(0));
  for (Rank x = 0; x < dist.size(); ++x) {
    marginal[project_rank(unrank(x, dist.arity(), dist.v()), coords,
                          dist.v())] += dist[x];
  }
  return entropy(marginal);
}

/// H(X_I | Y_J) = Σ_v Pr[Y_J = v] · H(X_I | Y_J = v).
inline double conditional_entropy(const InputDistribution& dist,
                                  const Transform& phi, const ColumnSet& inputs,
                                  const ColumnSet& outputs) {
  const JointTable table = joint_table(dist, phi, inputs, outputs);
  double h = 0.0;
  std::vector<Rational> column(table.input_cells);
  for (Rank w = 0; w < table.output_cells; ++w) {
    const Rational& pw = table.output_marginal[w];
    if (sgn(pw) == 0) continue;
    for (Rank u = 0; u < table.input_cells; ++u) {
      column[u] = table.at(u, w) / pw;
    }
    h += pw.get_d() * entropy(column);
  }
  return h;
}

/// I(X_I; Y_J) = H(X_I) - H(X_I | Y_J), with values in (-1e-12, 0) reported
/// as 0.
inline double mutual_information(const InputDistribution& dist,
                                 const Transform& phi, const ColumnSet& inputs,
                                 const ColumnSet& outputs) {
  const double mi = input_entropy(dist, inputs) -
                    conditional_entropy(dist, phi, inputs, outputs);
  if (mi < 0.0 && mi > -kEntropyTolerance) return 0.0;
  return mi;
}

}  // namespace aont
