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

// Subcommands of the `aont` tool. Each command writes its report to `out`,
// diagnostics to `err`, and returns the process exit code:
//   0 pass, 1 fail, 2 usage or input error.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aont/core.hpp"
#include "aont/io.hpp"
#include "aont/randomized.hpp"
#include "aont/search.hpp"
#include "aont/security.hpp"
#include "aont/unbiased.hpp"
#include "json.hpp"

namespace aont::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::filesystem::path array_file;
  std::optional<std::size_t> t;
  bool json = false;
  bool exhaustive = false;
};

struct AnalyzeOptions {
  std::filesystem::path array_file;
  std::filesystem::path dist_file;
  std::optional<std::size_t> t;
  bool json = false;
};

struct RandomizeOptions {
  std::filesystem::path array_file;
  std::vector<std::size_t> designate;
  std::vector<std::string> input;
  std::uint64_t seed = 0;
  bool verify = false;
  std::optional<std::filesystem::path> dist_file;
  bool json = false;
};

struct SearchOptions {
  std::size_t t = 1;
  std::size_t s = 2;
  std::size_t v = 2;
  bool count_only = false;
  std::optional<std::uint64_t> limit;
  std::optional<std::filesystem::path> out_dir;
  bool canonical = false;
  bool json = false;
};

// ---------------------------------------------------------------------------
// Formatting helpers

inline std::string pass_fail(bool pass) { return pass ? "PASS" : "FAIL"; }

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNotChecked: return "N/A";
  }
  return "N/A";
}

inline std::string tuple_text(const Alphabet& alphabet,
                              std::span<const Symbol> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.symbol(tuple[i]);
  }
  return out + ")";
}

inline json tuple_json(const Alphabet& alphabet, std::span<const Symbol> tuple) {
  return alphabet.names_of(tuple);
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline std::string rational_text(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// verify

struct VerifyWitness {
  int family = 0;
  std::optional<ColumnSet> inputs;
  std::optional<ColumnSet> outputs;
  const UnbiasednessReport* report = nullptr;
};

inline std::optional<VerifyWitness> verify_witness(
    const CombinatorialReport& report) {
  switch (report.failed_family()) {
    case 1: return VerifyWitness{1, {}, {}, &report.input_family};
    case 2: return VerifyWitness{2, {}, {}, &report.output_family};
    case 3: {
      const auto& f = report.mixed_failures.front();
      return VerifyWitness{3, f.inputs, f.outputs, &f.report};
    }
    default: return std::nullopt;
  }
}

inline json verify_json(const CombinatorialReport& report, const AontArray& arr) {
  json j;
  j["command"] = "verify";
  j["t"] = report.t;
  j["s"] = arr.s();
  j["v"] = arr.v();
  j["pass"] = report.pass;
  j["failed_family"] = report.failed_family();
  json families = json::array();
  families.push_back({{"family", 1},
                      {"columns", report.input_family.subset.indices()},
                      {"pass", report.input_family.pass}});
  families.push_back({{"family", 2},
                      {"columns", report.output_family.subset.indices()},
                      {"pass", report.output_family.pass}});
  families.push_back({{"family", 3},
                      {"vacuous", report.mixed_family_vacuous},
                      {"checked", report.mixed_family_checked},
                      {"subsets_checked", report.mixed_subsets_checked},
                      {"pass", report.mixed_failures.empty()}});
  j["families"] = families;

  if (auto w = verify_witness(report)) {
    json witness;
    witness["family"] = w->family;
    if (w->inputs) {
      witness["I"] = w->inputs->indices();
      witness["J"] = w->outputs->indices();
    }
    witness["columns"] = w->report->subset.indices();
    witness["tuple"] =
        tuple_json(arr.alphabet(), w->report->first_violation->tuple);
    witness["observed"] = w->report->first_violation->observed;
    witness["expected"] = w->report->expected_count;
    j["witness"] = witness;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline void verify_text(std::ostream& out, const CombinatorialReport& report,
                        const AontArray& arr) {
  out << "verify: t=" << report.t << " s=" << arr.s() << " v=" << arr.v()
      << "\n";
  out << "family 1 " << report.input_family.subset.to_string() << ": "
      << pass_fail(report.input_family.pass) << "\n";
  out << "family 2 " << report.output_family.subset.to_string() << ": "
      << pass_fail(report.output_family.pass) << "\n";
  out << "family 3: ";
  if (report.mixed_family_vacuous) {
    out << "vacuous (t = s)\n";
  } else if (!report.mixed_family_checked) {
    out << "not checked\n";
  } else {
    out << report.mixed_subsets_checked << " subsets checked, "
        << pass_fail(report.mixed_failures.empty()) << "\n";
  }
  if (auto w = verify_witness(report)) {
    out << "witness: family=" << w->family;
    if (w->inputs) {
      out << " I=" << w->inputs->to_string() << " J=" << w->outputs->to_string();
    }
    out << " tuple=" << tuple_text(arr.alphabet(), w->report->first_violation->tuple)
        << " observed=" << w->report->first_violation->observed
        << " expected=" << w->report->expected_count << "\n";
  }
  for (std::size_t i = 1; i < report.mixed_failures.size(); ++i) {
    const auto& f = report.mixed_failures[i];
    out << "also failing: I=" << f.inputs.to_string()
        << " J=" << f.outputs.to_string() << "\n";
  }
  out << "result: " << pass_fail(report.pass) << "\n";
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

inline int run_verify(const VerifyOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const ArrayFile file = read_array_file(opts.array_file);
    const std::size_t t = opts.t.value_or(file.t);
    const auto report = verify_aont(
        file.array, t,
        opts.exhaustive ? CheckMode::kExhaustive : CheckMode::kFirstFailure);
    if (opts.json) {
      out << verify_json(report, file.array).dump(2) << "\n";
    } else {
      verify_text(out, report, file.array);
    }
    return report.pass ? kExitPass : kExitFail;
  });
}

// ---------------------------------------------------------------------------
// analyze

struct EntropyRow {
  ColumnSet inputs;
  ColumnSet outputs;
  double h_input = 0;
  double h_conditional = 0;
  double mutual_information = 0;
};

inline std::vector<EntropyRow> entropy_rows(const InputDistribution& dist,
                                            const Transform& phi, std::size_t t) {
  const std::size_t s = phi.s();
  std::vector<EntropyRow> rows;
  for (const auto& in : column_subsets(1, s, t, s)) {
    for (const auto& out : column_subsets(s + 1, 2 * s, s - t, s)) {
      rows.push_back({in, out, input_entropy(dist, in),
                      conditional_entropy(dist, phi, in, out),
                      mutual_information(dist, phi, in, out)});
    }
  }
  return rows;
}

inline json witness_json(const SecurityWitness& w, const Alphabet& alphabet) {
  return {{"I", w.inputs.indices()},
          {"J", w.outputs.indices()},
          {"u", tuple_json(alphabet, w.u)},
          {"v", tuple_json(alphabet, w.v)},
          {"lhs", rational_text(w.lhs)},
          {"rhs", rational_text(w.rhs)}};
}

inline std::string witness_text(const SecurityWitness& w,
                                const Alphabet& alphabet) {
  return "I=" + w.inputs.to_string() + " J=" + w.outputs.to_string() +
         " u=" + tuple_text(alphabet, w.u) + " v=" + tuple_text(alphabet, w.v) +
         " lhs=" + rational_text(w.lhs) + " rhs=" + rational_text(w.rhs);
}

inline int run_analyze(const AnalyzeOptions& opts, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    const ArrayFile file = read_array_file(opts.array_file);
    const std::size_t t = opts.t.value_or(file.t);
    const Transform phi = transform_from_array(file.array, t);
    const InputDistribution dist =
        read_dist_file(opts.dist_file, phi.alphabet(), phi.s());
    const bool combinatorial = verify_aont(file.array, t).pass;

    const SecurityVerdict verdict = t < phi.s()
                                        ? is_perfectly_secure(dist, phi, t)
                                        : is_weakly_secure(dist, phi, t);
    const auto rows = entropy_rows(dist, phi, t);
    const bool pass = verdict.perfect == Verdict::kNotChecked
                          ? verdict.weak == Verdict::kPass
                          : verdict.perfect == Verdict::kPass;
    const Alphabet& alphabet = phi.alphabet();

    if (opts.json) {
      json j;
      j["command"] = "analyze";
      j["t"] = t;
      j["s"] = phi.s();
      j["v"] = phi.v();
      j["combinatorial"] = pass_fail(combinatorial);
      j["perfect"] = verdict_name(verdict.perfect);
      j["weak"] = verdict_name(verdict.weak);
      j["perfect_witness"] = verdict.perfect_witness
                                 ? witness_json(*verdict.perfect_witness, alphabet)
                                 : json(nullptr);
      j["weak_witness"] = verdict.weak_witness
                              ? witness_json(*verdict.weak_witness, alphabet)
                              : json(nullptr);
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back({{"I", r.inputs.indices()},
                         {"J", r.outputs.indices()},
                         {"H_X", r.h_input},
                         {"H_X_given_Y", r.h_conditional},
                         {"MI", r.mutual_information}});
      }
      j["entropy"] = table;
      out << j.dump(2) << "\n";
    } else {
      out << "analyze: t=" << t << " s=" << phi.s() << " v=" << phi.v() << "\n";
      out << "combinatorial: " << pass_fail(combinatorial) << "\n";
      out << "perfect: " << verdict_name(verdict.perfect);
      if (verdict.perfect == Verdict::kNotChecked) out << " (requires t < s)";
      out << "\n";
      out << "weak: " << verdict_name(verdict.weak) << "\n";
      if (verdict.perfect_witness) {
        out << "perfect witness: "
            << witness_text(*verdict.perfect_witness, alphabet) << "\n";
      }
      if (verdict.weak_witness) {
        out << "weak witness: " << witness_text(*verdict.weak_witness, alphabet)
            << "\n";
      }
      out << "I\tJ\tH(X_I)\tH(X_I|Y_J)\tI(X_I;Y_J)\n";
      for (const auto& r : rows) {
        out << r.inputs.to_string() << '\t' << r.outputs.to_string() << '\t'
            << fixed6(r.h_input) << '\t' << fixed6(r.h_conditional) << '\t'
            << fixed6(r.mutual_information) << "\n";
      }
    }
    return pass ? kExitPass : kExitFail;
  });
}

// ---------------------------------------------------------------------------
// randomize

inline int run_randomize(const RandomizeOptions& opts, std::ostream& out,
                         std::ostream& err) {
  return guarded(err, [&] {
    const ArrayFile file = read_array_file(opts.array_file);
    const std::size_t s = file.array.s();
    if (opts.designate.size() != file.t) {
      throw Error(ErrorCode::kInvalidDesignation,
                  "designation-arity error: " +
                      std::to_string(opts.designate.size()) +
                      " positions given, the file has t=" +
                      std::to_string(file.t));
    }
    const RandomizedScheme scheme(transform_from_array(file.array, file.t),
                                  ColumnSet::inputs(s, opts.designate));
    const Alphabet& alphabet = scheme.phi().alphabet();

    if (opts.verify) {
      if (!opts.dist_file) {
        throw Error(ErrorCode::kUsage, "--verify needs --dist <file>");
      }
      const auto dist_u = read_dist_file(*opts.dist_file, alphabet, scheme.t());
      const SecurityVerdict verdict =
          verify_randomized_perfect_security(scheme, dist_u);
      const bool pass = verdict.perfect == Verdict::kPass;
      json induced = json::array();
      std::vector<std::string> lines;
      for (const auto& j_set : column_subsets(s + 1, 2 * s, s - scheme.t(), s)) {
        std::vector<std::string> probs;
        std::string line = "J=" + j_set.to_string() + ":";
        for (const auto& p : induced_output_distribution(scheme, dist_u, j_set)) {
          probs.push_back(rational_text(p));
          line += " " + rational_text(p);
        }
        induced.push_back({{"J", j_set.indices()}, {"distribution", probs}});
        lines.push_back(std::move(line));
      }
      if (opts.json) {
        json j;
        j["command"] = "randomize";
        j["mode"] = "verify";
        j["designated"] = scheme.designated().indices();
        j["perfect"] = verdict_name(verdict.perfect);
        j["witness"] = verdict.perfect_witness
                           ? witness_json(*verdict.perfect_witness, alphabet)
                           : json(nullptr);
        j["induced_output"] = induced;
        out << j.dump(2) << "\n";
      } else {
        out << "designated: " << scheme.designated().to_string() << "\n";
        for (const auto& line : lines) out << "induced " << line << "\n";
        if (verdict.perfect_witness) {
          out << "witness: "
              << witness_text(*verdict.perfect_witness, alphabet) << "\n";
        }
        out << "randomized perfect security: " << verdict_name(verdict.perfect)
            << "\n";
      }
      return pass ? kExitPass : kExitFail;
    }

    if (opts.input.size() != scheme.t()) {
      throw Error(ErrorCode::kArityMismatch,
                  "--input needs " + std::to_string(scheme.t()) + " symbols");
    }
    const Tuple u = alphabet.indices_of(opts.input);
    const Tuple r = draw_random_symbols(opts.seed, s - scheme.t(), scheme.v());
    const Tuple y = randomized_encode(scheme, u, opts.seed);
    if (opts.json) {
      json j;
      j["command"] = "randomize";
      j["mode"] = "encode";
      j["designated"] = scheme.designated().indices();
      j["input"] = opts.input;
      j["seed"] = opts.seed;
      j["random"] = tuple_json(alphabet, r);
      j["output"] = tuple_json(alphabet, y);
      out << j.dump(2) << "\n";
    } else {
      const auto names = alphabet.names_of(y);
      for (std::size_t i = 0; i < names.size(); ++i) {
        out << (i ? " " : "") << names[i];
      }
      out << "\n";
    }
    return kExitPass;
  });
}

// ---------------------------------------------------------------------------
// search

inline std::string solution_file_name(std::uint64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "aont-%06llu.txt",
                static_cast<unsigned long long>(index));
  return buf;
}

inline int run_search(const SearchOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    if (opts.count_only && opts.out_dir) {
      throw Error(ErrorCode::kUsage, "--count-only and --out are exclusive");
    }
    SearchSpec spec;
    spec.t = opts.t;
    spec.s = opts.s;
    spec.v = opts.v;
    spec.mode = opts.out_dir ? SearchMode::kCollect : SearchMode::kCountOnly;
    spec.limit = opts.limit;
    spec.canonical_only = opts.canonical;
    const SearchResult result = enumerate_aonts(spec);

    std::vector<std::string> files;
    if (opts.out_dir) {
      std::filesystem::create_directories(*opts.out_dir);
      for (std::size_t i = 0; i < result.solutions.size(); ++i) {
        const auto path = *opts.out_dir / solution_file_name(i);
        std::ofstream f(path);
        if (!f) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
        write_array_file(f, result.solutions[i]);
        files.push_back(path.string());
      }
    }
    if (opts.json) {
      json j;
      j["command"] = "search";
      j["t"] = opts.t;
      j["s"] = opts.s;
      j["v"] = opts.v;
      j["canonical_only"] = opts.canonical;
      j["count"] = result.count;
      j["files"] = files;
      out << j.dump(2) << "\n";
    } else {
      out << "count: " << result.count << "\n";
      if (opts.canonical) out << "canonical: phi(first input) fixed\n";
      for (const auto& f : files) out << "wrote " << f << "\n";
    }
    return kExitPass;
  });
}

}  // namespace aont::cli
