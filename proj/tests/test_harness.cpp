/*
 * Copyright 2026 The localscott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "localscott/error.hpp"
#include "localscott/harness.hpp"

using namespace localscott;

namespace {

const char* kZ4Self = R"({
  "group": {"order": 4, "mul": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
  "space": "self-left-multiplication",
  "basisU": {"seeds": [[0,1]]},
  "basisV": {"seeds": [[1]]},
  "mode": "exploratory",
  "name": "z4 by hand"
})";

std::string message_of(const std::string& text) {
  try {
    parse_instance_text(text, "doc.json");
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

void expect_same(const ActionInstance& a, const ActionInstance& b) {
  EXPECT_EQ(a.group(), b.group());
  EXPECT_EQ(a.action_table(), b.action_table());
  EXPECT_EQ(a.basisU(), b.basisU());
  EXPECT_EQ(a.basisV(), b.basisV());
  EXPECT_EQ(a.mode(), b.mode());
  EXPECT_EQ(a.name(), b.name());
  EXPECT_EQ(a.seed(), b.seed());
}

}  // namespace

TEST(Parse, Z4SelfDocument) {
  auto i = parse_instance_text(kZ4Self);
  EXPECT_EQ(i.basisU().size(), 5U);
  EXPECT_EQ(i.basisV().size(), 2U);
  EXPECT_EQ(i.name(), "z4 by hand");
  EXPECT_EQ(i.basisU(), z4_self().basisU());
  EXPECT_EQ(i.basisV(), z4_self().basisV());
}

TEST(Parse, GeneratorForm) {
  auto i = parse_instance_text(R"({
    "group": {"degree": 3, "generators": [[1,0,2],[1,2,0]]},
    "space": "self-left-multiplication",
    "basisU": {"seeds": [[0],[1],[2],[3],[4],[5]]},
    "basisV": {"seeds": [[0]]},
    "mode": "strict"})");
  EXPECT_EQ(i.group().order(), 6U);
  EXPECT_TRUE(i.strict());
}

TEST(Parse, FlatMultiplicationTable) {
  auto i = parse_instance_text(R"({"group": {"order": 2, "mul": [0,1,1,0]},
    "space": {"size": 1, "action": [[0],[0]]},
    "basisU": {"seeds": []}, "basisV": {"seeds": []}, "mode": "exploratory", "seed": 9})");
  EXPECT_EQ(i.group().order(), 2U);
  EXPECT_EQ(i.seed(), 9U);
}

TEST(Parse, NonPermutationRowNamed) {
  auto msg = message_of(R"({"group": {"order": 2, "mul": [[0,1],[1,0]]},
    "space": {"size": 3, "action": [[0,1,2],[1,1,2]]},
    "basisU": {"seeds": []}, "basisV": {"seeds": []}, "mode": "exploratory"})");
  EXPECT_NE(msg.find("/space/action/1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("not a permutation"), std::string::npos) << msg;
  EXPECT_NE(msg.find("doc.json"), std::string::npos) << msg;
}

TEST(Parse, SyntaxErrorHasLineAndColumn) {
  try {
    parse_instance_text("{\n  \"group\": {\n    oops\n}", "doc.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("doc.json: line 3"), std::string::npos) << e.what();
  }
}

TEST(Parse, StructuralErrors) {
  EXPECT_NE(message_of(R"({"space": "self-left-multiplication"})").find("missing field \"group\""), std::string::npos);
  EXPECT_NE(message_of(R"({"group": {"order": 2, "mul": [[0,1],[1,0]]}, "space": "self-left-multiplication",
      "basisU": {"seeds": [[0, 7]]}, "basisV": {"seeds": []}, "mode": "exploratory"})")
                .find("/basisU/seeds/0/1"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"group": {"order": 2, "mul": [[0,1],[1,0]]}, "space": "self-left-multiplication",
      "basisU": {"seeds": []}, "basisV": {"seeds": []}, "mode": "lenient"})")
                .find("/mode"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"group": {"order": 2, "mul": [[0,1],[0,1]]}, "space": "self-left-multiplication",
      "basisU": {"seeds": []}, "basisV": {"seeds": []}, "mode": "exploratory"})")
                .find("/group"),
            std::string::npos);
  EXPECT_NE(message_of(R"({"group": {"order": 2, "mul": [[0,1],[1,0]]}, "space": "circle",
      "basisU": {"seeds": []}, "basisV": {"seeds": []}, "mode": "exploratory"})")
                .find("/space"),
            std::string::npos);
}

TEST(Parse, StrictErrorKeepsType) {
  EXPECT_THROW(parse_instance_text(R"({"group": {"order": 2, "mul": [[0,1],[1,0]]},
      "space": "self-left-multiplication", "basisU": {"seeds": [[0,1]]}, "basisV": {"seeds": [[0]]},
      "mode": "strict"})"),
               StrictModeError);
}

TEST(Serialize, RoundTripNamed) {
  for (const auto& n : instance_names()) {
    auto a = *named_instance(n);
    auto text = serialize_instance(a);
    auto b = parse_instance_text(text);
    expect_same(a, b);
    EXPECT_EQ(serialize_instance(b), text);
  }
}

TEST(Serialize, RoundTripRandom) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    RandomBounds bounds;
    bounds.mode = s % 2 ? Mode::strict : Mode::exploratory;
    auto a = random_instance(s, bounds);
    auto b = parse_instance_text(serialize_instance(a));
    expect_same(a, b);
  }
}

TEST(Serialize, CanonicalIsFixpoint) {
  auto i = parse_instance_text(kZ4Self);
  auto once = serialize_instance(i);
  EXPECT_EQ(serialize_instance(parse_instance_text(once)), once);
  auto j = Json::parse(once);
  EXPECT_EQ(j["group"]["order"], 4);
  EXPECT_EQ(j["basisU"]["seeds"].size(), 4U);  // translates of {0,1}
  EXPECT_EQ(j["basisV"]["seeds"], Json::parse("[[0,1,3]]"));
}

TEST(Load, NamesAndFiles) {
  EXPECT_EQ(load_instance("z4self").name(), "z4self");
  EXPECT_THROW(load_instance("/nonexistent/file.json"), ValidationError);
}

TEST(FormatJson, InlineScalarArrays) {
  auto s = format_json(Json::parse(R"({"a": [1, 2], "b": {"c": [[1], [2, 3]]}, "d": []})"));
  EXPECT_EQ(s, "{\n  \"a\": [1, 2],\n  \"b\": {\n    \"c\": [\n      [1],\n      [2, 3]\n    ]\n  },\n  \"d\": []\n}\n");
  EXPECT_EQ(Json::parse(s), Json::parse(R"({"a": [1, 2], "b": {"c": [[1], [2, 3]]}, "d": []})"));
}

TEST(Analysis, ContentsAndDeterminism) {
  auto t = analyze(z4_self());
  AnalysisOptions o;
  o.suites = {"locsat", "vb"};
  auto a = serialize_analysis(t, o);
  auto j = Json::parse(a);
  EXPECT_EQ(j["stabilization"], 1);
  EXPECT_EQ(j["levels"].size(), 2U);
  EXPECT_EQ(j["ranks"], Json::parse("[1,1,1,1]"));
  EXPECT_EQ(j["stable_partition"], Json::parse("[[0,1,2,3]]"));
  EXPECT_TRUE(j.contains("claschar"));
  EXPECT_TRUE(j.contains("oracles"));
  EXPECT_FALSE(j["oracles"]["failed"].get<bool>());
  EXPECT_EQ(j["dictionary"].size(), t.dictionary().size());

  AnalyzeOptions many;
  many.workers = 4;
  AnalysisOptions o4 = o;
  o4.oracle.workers = 4;
  EXPECT_EQ(serialize_analysis(analyze(z4_self(), many), o4), a);
}

TEST(Analysis, LabelsMatchPieces) {
  auto t = analyze(swap_fix());
  auto j = analysis_to_json(t, {});
  for (std::size_t l = 1; l <= t.top_level(); ++l)
    for (std::size_t c = 0; c < t.cell_count(); ++c) {
      const auto& labels = j["levels"][l - 1]["cells"][c]["labels"];
      for (Point x = 0; x < t.instance().size(); ++x)
        for (Point y = 0; y < t.instance().size(); ++y) {
          if (labels[x].is_null() || labels[y].is_null()) continue;
          EXPECT_EQ(labels[x] == labels[y], t.piece_at(l, c, x).contains(y));
        }
    }
}

TEST(Analysis, OracleLogSerialization) {
  OracleLog log;
  log.mode = Mode::strict;
  log.entries.push_back({"vb", "vb", 1, 2, 3, {4, 5}, "x", true});
  log.stats["vb"] = {10, 1};
  auto j = to_json(log);
  EXPECT_TRUE(j["failed"].get<bool>());
  EXPECT_EQ(j["entries"][0]["witness"], Json::parse("[4,5]"));
  EXPECT_EQ(j["entries"][0]["tier"], "theorem");
  EXPECT_EQ(j["stats"]["vb"]["checked"], 10);
}
