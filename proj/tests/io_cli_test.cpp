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

#include <filesystem>
#include <random>
#include <sstream>

#include "aont/cli.hpp"
#include "aont/io.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace aont {
namespace {

namespace fs = std::filesystem;

fs::path data(const std::string& name) { return fs::path(TEST_DATA_DIR) / name; }

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_array_file(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

TEST(ArrayFileTest, ParsesAont123) {
  const ArrayFile file = read_array_file(data("aont123.aont"));
  EXPECT_EQ(file.t, 1u);
  EXPECT_EQ(file.array, array_from_transform(fixtures::aont123()));
}

TEST(ArrayFileTest, ToleratesCommentsAndSpacing) {
  std::istringstream in(
      "# leading comment\n"
      "aont   t=2 s=2   v=2\n"
      "\n"
      "alphabet: x y   # symbols\n"
      "x x -> x x\n"
      "  x y -> x y\n"
      "y x -> y x\n"
      "y y ->   y y\n");
  const ArrayFile file = parse_array_file(in);
  EXPECT_EQ(file.t, 2u);
  EXPECT_EQ(file.array.alphabet().symbols(),
            (std::vector<std::string>{"x", "y"}));
}

TEST(ArrayFileTest, ParseErrorsCarryLineNumbers) {
  const std::string header = "aont t=1 s=2 v=2\nalphabet: 0 1\n";
  EXPECT_EQ(parse_error_line("aont t=1 s=2\n"), 1u);
  EXPECT_EQ(parse_error_line("aont t=3 s=2 v=2\n"), 1u);
  EXPECT_EQ(parse_error_line("aont t=1 s=2 v=2\nalphabet: 0 1 2\n"), 2u);
  EXPECT_EQ(parse_error_line("aont t=1 s=2 v=2\nalphabet: 0 0\n"), 2u);
  EXPECT_EQ(parse_error_line(header +
                             "0 0 -> 0 0\n"
                             "0 1 -> 0 1\n"
                             "0 1 -> 1 0\n"
                             "1 1 -> 1 1\n"),
            5u);
  EXPECT_EQ(parse_error_line(header +
                             "0 0 -> 0 0\n"
                             "0 1 => 0 1\n"
                             "1 0 -> 1 0\n"
                             "1 1 -> 1 1\n"),
            4u);
  EXPECT_EQ(parse_error_line(header +
                             "0 0 -> 0 0\n"
                             "0 1 -> 0 1\n"
                             "1 0 -> 1 2\n"
                             "1 1 -> 1 1\n"),
            5u);
  // Wrong number of data lines refers to the whole document.
  EXPECT_EQ(parse_error_line(header + "0 0 -> 0 0\n"), 0u);
}

TEST(ArrayFileTest, DuplicateInputFileRejected) {
  try {
    read_array_file(data("duplicate_input.aont"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0u);
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(ArrayFileTest, RoundTripRandomTransforms) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t v = 2 + trial % 3;
    const std::size_t s = 1 + trial % 3;
    const std::size_t t = 1 + trial % s;
    const auto phi = fixtures::random_bijection(rng, Alphabet::numeric(v), s, t);
    std::stringstream buf;
    write_array_file(buf, phi);
    const ArrayFile back = parse_array_file(buf);
    EXPECT_EQ(back.t, t);
    EXPECT_EQ(transform_from_array(back.array, back.t), phi);
  }
}

TEST(DistFileTest, ParsesAndRoundTrips) {
  const auto dist =
      read_dist_file(data("independent_half_quarter.dist"), fixtures::abc(), 2);
  EXPECT_EQ(dist, fixtures::half_quarter());
  std::stringstream buf;
  write_dist_file(buf, dist, fixtures::abc());
  EXPECT_EQ(parse_dist_file(buf, fixtures::abc(), 2), dist);
}

TEST(DistFileTest, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_dist_file(in, Alphabet::numeric(2), 1);
    } catch (const ParseError& e) {
      return e.line();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return 99;
  };
  EXPECT_EQ(line_of("0 : 1/2\n1 : 0.5\n"), 2u);
  EXPECT_EQ(line_of("0 : 1/2\n0 : 1/2\n"), 2u);
  EXPECT_EQ(line_of("0 : 0/2\n1 : 1/1\n"), 1u);
  EXPECT_EQ(line_of("0 : 1/2\n2 : 1/2\n"), 2u);
  EXPECT_EQ(line_of("0 : 1/2\n"), 0u);
  EXPECT_EQ(line_of("0 : 1/2\n1 : 1/3\n"), 0u);
}

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <typename Opts, typename Fn>
Captured capture(Fn fn, const Opts& opts) {
  std::ostringstream out, err;
  const int code = fn(opts, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliVerifyTest, ExitCodes) {
  cli::VerifyOptions opts;
  opts.array_file = data("aont123.aont");
  opts.t = 1;
  auto r = capture(cli::run_verify, opts);
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);

  opts.array_file = data("identity22.aont");
  r = capture(cli::run_verify, opts);
  EXPECT_EQ(r.code, cli::kExitFail);
  EXPECT_NE(r.out.find("I={1} J={3}"), std::string::npos);

  opts.array_file = data("duplicate_output.aont");
  r = capture(cli::run_verify, opts);
  EXPECT_EQ(r.code, cli::kExitFail);
  EXPECT_NE(r.out.find("witness: family=2"), std::string::npos);

  opts.array_file = data("duplicate_input.aont");
  r = capture(cli::run_verify, opts);
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line"), std::string::npos);

  opts.array_file = data("no_such_file.aont");
  EXPECT_EQ(capture(cli::run_verify, opts).code, cli::kExitUsage);
}

// Exit code agrees with the library verdict for every array in the corpus.
TEST(CliVerifyTest, ExitCodeMatchesLibraryOnCorpus) {
  for (const auto& entry : fs::directory_iterator(TEST_DATA_DIR)) {
    if (entry.path().extension() != ".aont") continue;
    cli::VerifyOptions opts;
    opts.array_file = entry.path();
    const int code = capture(cli::run_verify, opts).code;
    int expected = cli::kExitUsage;
    try {
      const ArrayFile file = read_array_file(entry.path());
      expected = verify_aont(file.array, file.t).pass ? cli::kExitPass
                                                       : cli::kExitFail;
    } catch (const Error&) {
    }
    EXPECT_EQ(code, expected) << entry.path();
  }
}

TEST(CliVerifyTest, JsonAgreesWithText) {
  for (const char* name : {"aont123.aont", "identity22.aont",
                           "duplicate_output.aont"}) {
    cli::VerifyOptions opts;
    opts.array_file = data(name);
    const auto text = capture(cli::run_verify, opts);
    opts.json = true;
    const auto js = capture(cli::run_verify, opts);
    ASSERT_EQ(text.code, js.code);
    const auto j = nlohmann::json::parse(js.out);
    const bool pass = j["pass"];
    EXPECT_EQ(text.out.find(pass ? "result: PASS" : "result: FAIL") !=
                  std::string::npos,
              true)
        << name;
    if (!pass) {
      const auto& w = j["witness"];
      std::string expected = "witness: family=" + std::to_string(int(w["family"]));
      if (w.contains("I")) {
        expected += " I={" + std::to_string(int(w["I"][0])) + "} J={" +
                    std::to_string(int(w["J"][0])) + "}";
      }
      expected += " tuple=(";
      for (std::size_t i = 0; i < w["tuple"].size(); ++i) {
        expected += (i ? " " : "") + w["tuple"][i].get<std::string>();
      }
      expected += ") observed=" + std::to_string(int(w["observed"])) +
                  " expected=" + std::to_string(int(w["expected"]));
      EXPECT_NE(text.out.find(expected), std::string::npos)
          << name << "\n" << text.out;
    } else {
      EXPECT_TRUE(j["witness"].is_null());
    }
  }
}

TEST(CliAnalyzeTest, UniformIsPerfect) {
  cli::AnalyzeOptions opts;
  opts.array_file = data("aont123.aont");
  opts.dist_file = data("uniform9.dist");
  const auto r = capture(cli::run_analyze, opts);
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("perfect: PASS"), std::string::npos);
  std::istringstream lines(r.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("{", 0) != 0) continue;
    ++rows;
    EXPECT_EQ(line.substr(line.rfind('\t') + 1), "0.000000") << line;
  }
  EXPECT_EQ(rows, 4);
}

TEST(CliAnalyzeTest, NonUniformFailsPerfectPassesWeak) {
  cli::AnalyzeOptions opts;
  opts.array_file = data("aont123.aont");
  opts.dist_file = data("independent_half_quarter.dist");
  const auto r = capture(cli::run_analyze, opts);
  EXPECT_EQ(r.code, cli::kExitFail);
  EXPECT_NE(r.out.find("perfect: FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("weak: PASS"), std::string::npos);
  EXPECT_NE(r.out.find("{1}\t{4}\t1.584963\t1.500000\t0.084963"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("{2}\t{4}\t1.500000\t1.500000\t0.000000"),
            std::string::npos)
      << r.out;

  opts.json = true;
  const auto js = capture(cli::run_analyze, opts);
  EXPECT_EQ(js.code, r.code);
  const auto j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j["perfect"], "FAIL");
  EXPECT_EQ(j["weak"], "PASS");
  const auto& w = j["perfect_witness"];
  EXPECT_NE(r.out.find("perfect witness: I={" + std::to_string(int(w["I"][0])) +
                       "} J={" + std::to_string(int(w["J"][0])) + "}"),
            std::string::npos);
  for (const auto& row : j["entropy"]) {
    if (row["I"][0] == 1 && row["J"][0] == 4) {
      EXPECT_NEAR(double(row["MI"]), std::log2(3.0) - 1.5, 1e-9);
    }
  }
}

TEST(CliAnalyzeTest, DimensionMismatchIsInputError) {
  cli::AnalyzeOptions opts;
  opts.array_file = data("identity22.aont");
  opts.dist_file = data("uniform9.dist");
  EXPECT_EQ(capture(cli::run_analyze, opts).code, cli::kExitUsage);
}

TEST(CliRandomizeTest, VerifyMode) {
  cli::RandomizeOptions opts;
  opts.array_file = data("aont123.aont");
  opts.designate = {2};
  opts.verify = true;
  opts.dist_file = data("designated_half_quarter.dist");
  const auto r = capture(cli::run_randomize, opts);
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("induced J={3}: 1/3 1/3 1/3"), std::string::npos);
  EXPECT_NE(r.out.find("randomized perfect security: PASS"), std::string::npos);
}

TEST(CliRandomizeTest, EncodeMode) {
  cli::RandomizeOptions opts;
  opts.array_file = data("aont123.aont");
  opts.designate = {2};
  opts.input = {"c"};
  for (std::uint64_t seed : {0u, 1u, 2u, 77u}) {
    opts.seed = seed;
    const auto r = capture(cli::run_randomize, opts);
    EXPECT_EQ(r.code, cli::kExitPass);
    EXPECT_TRUE(r.out == "b c\n" || r.out == "c a\n" || r.out == "a b\n")
        << r.out;
  }
}

TEST(CliRandomizeTest, DesignationArityError) {
  cli::RandomizeOptions opts;
  opts.array_file = data("aont123.aont");
  opts.designate = {1, 2};
  opts.input = {"a", "b"};
  const auto r = capture(cli::run_randomize, opts);
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("designation-arity"), std::string::npos);
}

TEST(CliSearchTest, CountsAndFiles) {
  cli::SearchOptions opts;
  opts.t = 1;
  opts.s = 2;
  opts.v = 2;
  opts.count_only = true;
  auto r = capture(cli::run_search, opts);
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(r.out, "count: 0\n");

  opts.t = 2;
  EXPECT_EQ(capture(cli::run_search, opts).out, "count: 24\n");

  const fs::path dir = fs::temp_directory_path() / "aont_cli_search_test";
  fs::remove_all(dir);
  opts.t = 1;
  opts.v = 3;
  opts.count_only = false;
  opts.limit = 1;
  opts.out_dir = dir;
  r = capture(cli::run_search, opts);
  EXPECT_EQ(r.code, cli::kExitPass);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  ASSERT_EQ(files.size(), 1u);
  cli::VerifyOptions verify;
  verify.array_file = files[0];
  EXPECT_EQ(capture(cli::run_verify, verify).code, cli::kExitPass);
  fs::remove_all(dir);
}

TEST(CliSearchTest, CountOnlyWithOutIsUsageError) {
  cli::SearchOptions opts;
  opts.count_only = true;
  opts.out_dir = fs::temp_directory_path() / "unused";
  EXPECT_EQ(capture(cli::run_search, opts).code, cli::kExitUsage);
}

}  // namespace
}  // namespace aont
