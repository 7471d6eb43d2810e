// Copyright 2026 The starclean Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "corpus.hpp"

namespace starclean {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Captured {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Captured capture(F&& f) {
  std::ostringstream out, err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("starclean_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string modular_spec(int n) {
  return R"({"name": "m", "construct": {"type": "modular", "n": )" +
         std::to_string(n) + R"(}, "involution": "identity"})";
}

TEST(SpecParsing, RejectsUnknownKeys) {
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "construct": {"type": "modular",
      "n": 2, "m": 3}, "involution": "identity"})"),
               SpecError);
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "extra": 1, "construct":
      {"type": "modular", "n": 2}, "involution": "identity"})"),
               SpecError);
}

TEST(SpecParsing, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_spec_text("{"), SpecError);
  EXPECT_THROW(parse_spec_text("[]"), SpecError);
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "construct": {"type": "modular",
      "n": 2}})"),
               SpecError);
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "construct": {"type": "torus"},
      "involution": "identity"})"),
               SpecError);
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "construct": {"type": "modular",
      "n": -2}, "involution": "identity"})"),
               SpecError);
  EXPECT_THROW(parse_spec_text(R"({"name": "x", "construct": {"type": "modular",
      "n": 2}, "involution": {"kind": "mirror"}})"),
               SpecError);
}

TEST(SpecParsing, NestingDepthIsBounded) {
  auto nested = [](int depth) {
    json node = {{"type", "modular"}, {"n", 2}};
    for (int i = 1; i < depth; ++i)
      node = {{"type", "truncated_series"}, {"base", node}, {"n", 1}};
    return json{{"name", "deep"}, {"construct", node}, {"involution", "natural"}}
        .dump();
  };
  EXPECT_NO_THROW(parse_spec_text(nested(8)));
  EXPECT_THROW(parse_spec_text(nested(9)), SpecError);
  auto entry = load_entry(parse_spec_text(nested(8)));
  EXPECT_EQ(entry.ring.order(), 2u);
}

TEST(SpecParsing, AuxiliaryData) {
  SpecFile f = parse_spec_text(R"({"name": "z8", "construct": {"type": "modular",
      "n": 8}, "involution": "identity", "aux": {"ideals": [{"generators": ["4"]}],
      "groups": [{"type": "direct_product", "factors": [{"type": "cyclic", "n": 2},
      {"type": "cyclic", "n": 2}]}], "truncation_orders": [2]}})");
  CorpusEntry e = load_entry(f);
  ASSERT_EQ(e.aux.ideals.size(), 1u);
  EXPECT_EQ(e.aux.ideals[0], (ElementSet{0, 4}));
  ASSERT_EQ(e.aux.groups.size(), 1u);
  EXPECT_EQ(e.aux.groups[0].order(), 4u);
  EXPECT_EQ(e.aux.truncation_orders, (std::vector<std::size_t>{2}));
  EXPECT_THROW(parse_spec_text(R"({"name": "z8", "construct": {"type": "modular",
      "n": 8}, "involution": "identity", "aux": {"truncation_orders": [1]}})"),
               SpecError);
}

TEST(SpecParsing, DescriptorsMustMatchConstructor) {
  EXPECT_THROW(load_entry(parse_spec_text(R"({"name": "x", "construct":
      {"type": "modular", "n": 4}, "involution": "swap"})")),
               Error);
  EXPECT_THROW(load_entry(parse_spec_text(R"({"name": "x", "construct":
      {"type": "modular", "n": 4}, "involution": {"kind": "explicit",
      "map": {"0": "0", "1": "3", "2": "2", "3": "1"}}})")),
               NotInvolution);
}

TEST(SpecParsing, EveryCorpusFileRoundTrips) {
  for (const auto& item : fs::directory_iterator(STARCLEAN_CORPUS_DIR)) {
    SpecFile f = load_spec_file(item.path().string());
    EXPECT_EQ(f.name, item.path().stem().string());
    std::string first = analysis_json(load_entry(f), false).dump();
    std::string second =
        analysis_json(load_entry(load_spec_file(item.path().string())), false)
            .dump();
    EXPECT_EQ(first, second) << f.name;
  }
}

TEST(Analyze, Z4Report) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_analyze(testing_corpus::path("z4"), false, false, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["ring"]["jacobson_radical"], json({"0", "2"}));
  EXPECT_EQ(doc["ring"]["radical_size"], 2);
  EXPECT_TRUE(doc["decisions"]["STRONGLY_J_STAR_CLEAN"]["holds"].get<bool>());
  EXPECT_EQ(doc["statements"].size(), 20u);
  EXPECT_EQ(doc["tool"]["version"], std::string(kToolVersion));
}

TEST(Analyze, TrivialExtensionDecisions) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_analyze(testing_corpus::path("t2_example"), false, true, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_TRUE(doc["decisions"]["J_STAR_CLEAN"]["holds"].get<bool>());
  const json& sjs = doc["decisions"]["STRONGLY_J_STAR_CLEAN"];
  EXPECT_FALSE(sjs["holds"].get<bool>());
  EXPECT_FALSE(sjs["failing_element"].is_null());
  EXPECT_FALSE(sjs["failures"].empty());
}

TEST(Analyze, TextReport) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_analyze(testing_corpus::path("z6"), true, false, o, e);
  });
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("UNIQUELY_CLEAN = false (fails at 2 with 2 witnesses)"),
            std::string::npos)
      << r.out;
}

TEST(Analyze, ExitCodes) {
  TempDir dir;
  std::string bad = dir.write("bad.json", "{\"name\": ");
  Captured r = capture([&](auto& o, auto& e) {
    return cli::cmd_analyze(bad, false, false, o, e);
  });
  EXPECT_EQ(r.code, cli::kSpecError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cli::cmd_analyze(dir.str() + "/missing.json", false,
                                      false, o, e);
            }).code,
            cli::kSpecError);
  std::string big = dir.write(
      "big.json", R"({"name": "big", "construct": {"type": "matrix", "base":
      {"type": "modular", "n": 4}, "k": 3}, "involution": "natural"})");
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cli::cmd_analyze(big, false, false, o, e);
            }).code,
            cli::kOrderBound);
}

TEST(Analyze, EnvironmentOverridesOrderGuard) {
  ::setenv("STARCLEAN_MAX_ORDER", "8", 1);
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_analyze(testing_corpus::path("z9"), false, false, o, e);
  });
  ::unsetenv("STARCLEAN_MAX_ORDER");
  EXPECT_EQ(r.code, cli::kOrderBound);
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cli::cmd_analyze(testing_corpus::path("z9"), false, false,
                                      o, e);
            }).code,
            0);
}

TEST(Verify, SingleStatementOverCorpus) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_verify(STARCLEAN_CORPUS_DIR, {"T3.2"}, o, e);
  });
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["results"].size(), 17u);
  EXPECT_EQ(doc["summary"]["inconsistent"], 0);
}

TEST(Verify, InconsistencyExitsFour) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_verify(STARCLEAN_CORPUS_DIR, {}, o, e);
  });
  EXPECT_EQ(r.code, cli::kInconsistent);
  EXPECT_NE(r.err.find("gr_z2_c3"), std::string::npos);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["results"].size(), 17u * 20u);
  EXPECT_EQ(doc["summary"]["inconsistent"], 1);
}

TEST(Verify, InputErrors) {
  TempDir dir;
  dir.write("z2.json", modular_spec(2));
  dir.write("broken.json", "not json");
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cli::cmd_verify(dir.str(), {}, o, e);
            }).code,
            cli::kSpecError);
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cli::cmd_verify(dir.str() + "/nowhere", {}, o, e);
            }).code,
            cli::kSpecError);
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cli::cmd_verify(STARCLEAN_CORPUS_DIR, {"X1"}, o, e);
            }).code,
            cli::kSpecError);
  TempDir empty;
  Captured r = capture([&](auto& o, auto& e) {
    return cli::cmd_verify(empty.str(), {}, o, e);
  });
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out)["results"].empty());
}

TEST(Witness, ListsDecompositions) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_witness(testing_corpus::path("z6"), "2", "CLEAN", o, e);
  });
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e=1 u=1 commutes=true\ne=3 u=5 commutes=true\n");
  r = capture([](auto& o, auto& e) {
    return cli::cmd_witness(testing_corpus::path("z4"), "3",
                            "STRONGLY_J_STAR_CLEAN", o, e);
  });
  EXPECT_EQ(r.out, "e=1 u=2 commutes=true\n");
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cli::cmd_witness(testing_corpus::path("z4"), "9", "CLEAN",
                                      o, e);
            }).code,
            cli::kSpecError);
  EXPECT_EQ(capture([](auto& o, auto& e) {
              return cli::cmd_witness(testing_corpus::path("z4"), "1", "SHINY",
                                      o, e);
            }).code,
            cli::kSpecError);
}

TEST(Involutions, ListsEveryInvolution) {
  Captured r = capture([](auto& o, auto& e) {
    return cli::cmd_involutions(testing_corpus::path("z2"), o, e);
  });
  EXPECT_EQ(r.out, "[0,1] strongly_J_star_clean=true\n");
  r = capture([](auto& o, auto& e) {
    return cli::cmd_involutions(testing_corpus::path("z2xz2_id"), o, e);
  });
  // Under the swap only 0 and 1 are projections, so (1,0) has no radical
  // decomposition.
  EXPECT_EQ(r.out,
            "[0,1,2,3] strongly_J_star_clean=true\n"
            "[0,2,1,3] strongly_J_star_clean=false\n");
  r = capture([](auto& o, auto& e) {
    return cli::cmd_involutions(testing_corpus::path("t2z2_triangular"), o, e);
  });
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find('\n'), std::string::npos);
  EXPECT_EQ(r.out.find("=true"), std::string::npos);
  TempDir dir;
  std::string big = dir.write("z17.json", modular_spec(17));
  EXPECT_EQ(capture([&](auto& o, auto& e) {
              return cli::cmd_involutions(big, o, e);
            }).code,
            cli::kOrderBound);
}

}  // namespace
}  // namespace starclean
