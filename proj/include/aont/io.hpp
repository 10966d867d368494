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

// Text formats.
//
// Array file:
//
//   aont t=<t> s=<s> v=<v>
//   alphabet: <sym_1> ... <sym_v>
//   <x_1> ... <x_s> -> <y_1> ... <y_s>        (v^s lines)
//
// Distribution file, one line per k-tuple:
//
//   <x_1> ... <x_k> : <num>/<den>
//
// Tokens are whitespace separated. '#' starts a comment that runs to the end
// of the line; blank lines are ignored.

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aont/core.hpp"

namespace aont {

struct ArrayFile {
  std::size_t t = 1;
  AontArray array;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::uint64_t parse_uint(std::string_view text, std::size_t line,
                                std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(line, "invalid " + std::string(what) + " '" +
                               std::string(text) + "'");
  }
  return value;
}

inline std::uint64_t parse_param(const std::string& token, std::string_view key,
                                 std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    throw ParseError(line, "expected '" + prefix + "<n>', got '" + token + "'");
  }
  return parse_uint(std::string_view(token).substr(prefix.size()), line, key);
}

inline Symbol parse_symbol(const Alphabet& alphabet, const std::string& token,
                           std::size_t line) {
  if (!alphabet.contains(token)) {
    throw ParseError(line, "undeclared symbol '" + token + "'");
  }
  return alphabet.index_of(token);
}

}  // namespace detail

inline ArrayFile parse_array_file(std::istream& in) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty array file");

  const auto& header = lines[0];
  if (header.tokens.size() != 4 || header.tokens[0] != "aont") {
    throw ParseError(header.number, "expected 'aont t=<t> s=<s> v=<v>'");
  }
  const std::uint64_t t = detail::parse_param(header.tokens[1], "t", header.number);
  const std::uint64_t s = detail::parse_param(header.tokens[2], "s", header.number);
  const std::uint64_t v = detail::parse_param(header.tokens[3], "v", header.number);
  if (s < 1 || t < 1 || t > s) {
    throw ParseError(header.number, "need 1 <= t <= s");
  }
  if (v < 2) throw ParseError(header.number, "need v >= 2");
  std::uint64_t n = 0;
  try {
    n = checked_pow(v, s);
  } catch (const Error& e) {
    throw ParseError(header.number, e.what());
  }

  if (lines.size() < 2 || lines[1].tokens[0] != "alphabet:") {
    throw ParseError(lines.size() < 2 ? 0 : lines[1].number,
                     "expected 'alphabet: <symbols>'");
  }
  const auto& alpha_line = lines[1];
  std::vector<std::string> symbols(alpha_line.tokens.begin() + 1,
                                   alpha_line.tokens.end());
  if (symbols.size() != v) {
    throw ParseError(alpha_line.number,
                     "alphabet lists " + std::to_string(symbols.size()) +
                         " symbols, header says v=" + std::to_string(v));
  }
  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(std::move(symbols));
  } catch (const Error& e) {
    throw ParseError(alpha_line.number, e.what());
  }

  if (lines.size() - 2 != n) {
    throw ParseError(0, "expected " + std::to_string(n) + " data lines, found " +
                            std::to_string(lines.size() - 2));
  }
  std::vector<Symbol> cells;
  cells.reserve(n * 2 * s);
  std::vector<std::size_t> seen_at(n, 0);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2 * s + 1 || line.tokens[s] != "->") {
      throw ParseError(line.number, "expected " + std::to_string(s) +
                                        " symbols, '->', " + std::to_string(s) +
                                        " symbols");
    }
    Tuple row;
    for (std::size_t k = 0; k < line.tokens.size(); ++k) {
      if (k == s) continue;
      row.push_back(detail::parse_symbol(*alphabet, line.tokens[k], line.number));
    }
    const Rank x = rank_of(std::span<const Symbol>(row).first(s), v);
    if (seen_at[x] != 0) {
      throw ParseError(line.number, "input tuple already given on line " +
                                        std::to_string(seen_at[x]));
    }
    seen_at[x] = line.number;
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return ArrayFile{static_cast<std::size_t>(t),
                   AontArray(std::move(*alphabet), s, std::move(cells))};
}

inline void write_array_file(std::ostream& out, const AontArray& arr,
                             std::size_t t) {
  out << "aont t=" << t << " s=" << arr.s() << " v=" << arr.v() << "\n";
  out << "alphabet:";
  for (const auto& sym : arr.alphabet().symbols()) out << ' ' << sym;
  out << "\n";
  for (std::uint64_t i = 0; i < arr.row_count(); ++i) {
    const auto row = arr.row(i);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == arr.s()) out << " ->";
      if (c) out << ' ';
      out << arr.alphabet().symbol(row[c]);
    }
    out << "\n";
  }
}

inline void write_array_file(std::ostream& out, const Transform& phi) {
  write_array_file(out, array_from_transform(phi), phi.t());
}

/// Reads a distribution over `arity`-tuples of `alphabet`. Every tuple must
/// appear once and the values must sum to exactly 1.
inline InputDistribution parse_dist_file(std::istream& in,
                                         const Alphabet& alphabet,
                                         std::size_t arity) {
  const std::size_t v = alphabet.size();
  std::uint64_t n = 0;
  try {
    n = checked_pow(v, arity);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
  std::vector<Rational> probs(n);
  std::vector<std::size_t> seen_at(n, 0);
  for (const auto& line : detail::tokenize(in)) {
    if (line.tokens.size() != arity + 2 || line.tokens[arity] != ":") {
      throw ParseError(line.number, "expected " + std::to_string(arity) +
                                        " symbols, ':', <num>/<den>");
    }
    Tuple tuple;
    for (std::size_t k = 0; k < arity; ++k) {
      tuple.push_back(detail::parse_symbol(alphabet, line.tokens[k], line.number));
    }
    const std::string& value = line.tokens.back();
    const auto slash = value.find('/');
    if (slash == std::string::npos) {
      throw ParseError(line.number, "probability must be written <num>/<den>");
    }
    const std::uint64_t num = detail::parse_uint(
        std::string_view(value).substr(0, slash), line.number, "numerator");
    const std::uint64_t den = detail::parse_uint(
        std::string_view(value).substr(slash + 1), line.number, "denominator");
    if (num == 0 || den == 0) {
      throw ParseError(line.number, "numerator and denominator must be positive");
    }
    const Rank r = rank_of(tuple, v);
    if (seen_at[r] != 0) {
      throw ParseError(line.number, "tuple already given on line " +
                                        std::to_string(seen_at[r]));
    }
    seen_at[r] = line.number;
    probs[r] = make_ratio(num, den);
  }
  for (Rank r = 0; r < n; ++r) {
    if (seen_at[r] == 0) {
      std::string name;
      for (const auto& sym : alphabet.names_of(unrank(r, arity, v))) {
        name += (name.empty() ? "" : " ") + sym;
      }
      throw ParseError(0, "no probability given for tuple (" + name + ")");
    }
  }
  try {
    return InputDistribution(v, arity, std::move(probs));
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

inline void write_dist_file(std::ostream& out, const InputDistribution& dist,
                            const Alphabet& alphabet) {
  for (Rank r = 0; r < dist.size(); ++r) {
    for (const auto& sym : alphabet.names_of(unrank(r, dist.arity(), dist.v()))) {
      out << sym << ' ';
    }
    out << ": " << dist[r].get_num().get_str() << '/'
        << dist[r].get_den().get_str() << "\n";
  }
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return in;
}

inline ArrayFile read_array_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_array_file(in);
}

inline InputDistribution read_dist_file(const std::filesystem::path& path,
                                        const Alphabet& alphabet,
                                        std::size_t arity) {
  auto in = open_input(path);
  return parse_dist_file(in, alphabet, arity);
}

}  // namespace aont
