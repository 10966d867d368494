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

// Walks through a (1,2,3)-AONT under a non-uniform input distribution: the
// transform passes the combinatorial test and is weakly secure, but a
// biased second input makes it fail perfect security.

#include <iomanip>
#include <iostream>

#include "aont/core.hpp"
#include "aont/security.hpp"
#include "aont/unbiased.hpp"

int main() {
  using namespace aont;
  const Alphabet abc({"a", "b", "c"});
  // Outputs for inputs aa, ab, ac, ba, bb, bc, ca, cb, cc.
  const char* outputs[] = {"aa", "cb", "bc", "bb", "ac", "ca", "cc", "ba", "ab"};
  std::vector<Rank> table;
  for (const char* y : outputs) {
    table.push_back(rank_tuple(abc, std::vector<std::string>{
                                        std::string(1, y[0]),
                                        std::string(1, y[1])})
                        .value);
  }
  const Transform phi(abc, 2, 1, table);

  const auto combinatorial = verify_aont(phi, 1);
  std::cout << "combinatorial test at t=1: "
            << (combinatorial.pass ? "PASS" : "FAIL") << "\n";

  const auto dist = product_distribution(
      abc, 2,
      {{Rational(1, 3), Rational(1, 3), Rational(1, 3)},
       {Rational(1, 2), Rational(1, 4), Rational(1, 4)}});
  const auto verdict = is_perfectly_secure(dist, phi, 1);
  std::cout << "perfect security: "
            << (verdict.perfect == Verdict::kPass ? "PASS" : "FAIL") << "\n";
  std::cout << "weak security:    "
            << (verdict.weak == Verdict::kPass ? "PASS" : "FAIL") << "\n";
  if (verdict.perfect_witness) {
    const auto& w = *verdict.perfect_witness;
    std::cout << "  I=" << w.inputs.to_string() << " J=" << w.outputs.to_string()
              << " x=" << abc.symbol(w.u[0]) << " y=" << abc.symbol(w.v[0])
              << "  joint " << w.lhs << " vs product " << w.rhs << "\n";
  }

  std::cout << std::fixed << std::setprecision(6);
  for (const auto& in : column_subsets(1, 2, 1, 2)) {
    for (const auto& out : column_subsets(3, 4, 1, 2)) {
      std::cout << "I=" << in.to_string() << " J=" << out.to_string()
                << "  H(X_I)=" << input_entropy(dist, in)
                << "  I(X_I;Y_J)=" << mutual_information(dist, phi, in, out)
                << "\n";
    }
  }

  const ColumnSet x2 = ColumnSet::inputs(2, {2});
  const ColumnSet y2 = ColumnSet::outputs(2, {2});
  for (Symbol w = 0; w < abc.size(); ++w) {
    const Tuple given{w};
    const auto cond = conditional_input_given_output(dist, phi, x2, y2, given);
    std::cout << "Pr[x_2 | y_2=" << abc.symbol(w) << "] =";
    for (const auto& p : cond.entries) std::cout << ' ' << p;
    std::cout << "\n";
  }
  return 0;
}
