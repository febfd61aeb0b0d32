#include "coincidence/scenario.hpp"

#include <doctest.h>

using namespace coincidence;
using namespace coincidence::scenario;
using nlohmann::json;

namespace {

json torus(std::vector<std::vector<std::vector<int64_t>>> matrices, int m, int n) {
  json maps = json::array();
  for (const auto &a : matrices)
    maps.push_back({{"matrix", a}});
  return {{"model", "torus-affine"}, {"m", m}, {"n", n}, {"maps", maps}};
}

json decider_block(int k, int n, int dim) {
  return {{"k", k},
          {"n", n},
          {"dim_M", dim},
          {"M", {{"closed", true}, {"connected", true}, {"oriented", true}}},
          {"N",
           {{"closed", true},
            {"connected", true},
            {"orientable", true},
            {"simply_connected", false},
            {"jiang_type", "Jiang"},
            {"aspherical", true}}}};
}

json report_of(Command cmd, const json &doc) {
  const auto out = run_document(cmd, doc.dump());
  REQUIRE_MESSAGE(out.exit_code == 0, out.message);
  return json::parse(out.report);
}

int exit_of(Command cmd, const json &doc) {
  return run_document(cmd, doc.dump()).exit_code;
}

} // namespace

TEST_CASE("class on a torus system cross-checks the solver") {
  const auto doc = torus({{{0, 0}}, {{2, 1}}, {{1, 1}}}, 2, 1);
  const auto r = report_of(Command::Class, doc);
  CHECK(r["class"]["kind"] == "Integer");
  CHECK(r["class"]["value"] == 1);
  CHECK(r["stacked_determinant"] == 1);
  CHECK(r["index_sum"] == 1);
  CHECK(r["oracle_agrees"] == true);
  CHECK(r["pair_classes"][0]["class"] == "2*e1 + e2");
  CHECK(r["inputs_echo"] == doc);
}

TEST_CASE("class on a non-transverse torus system still reports the class") {
  const auto r = report_of(Command::Class, torus({{{1, 2}}, {{1, 2}}, {{5, 3}}}, 2, 1));
  CHECK(r["class"]["value"] == 0);
  CHECK(r["transverse"] == false);
  CHECK_FALSE(r.contains("index_sum"));
}

TEST_CASE("solve lists points with rational strings") {
  auto doc = torus({{{0, 0}}, {{2, 0}}, {{0, 3}}}, 2, 1);
  doc["maps"][1]["translation"] = {"1/2"};
  const auto r = report_of(Command::Solve, doc);
  CHECK(r["point_count"] == 6);
  CHECK(r["index_sum"] == 6);
  // 2 x1 + 1/2 == 0 mod 1.
  CHECK(r["coincidence_points"][0]["coordinates"] == json{"1/4", "0"});
}

TEST_CASE("sphere class") {
  const json doc{{"model", "sphere-degrees"}, {"n", 2}, {"k", 2}, {"degrees", {3, 5}}};
  CHECK(report_of(Command::Class, doc)["class"]["value"] == 8);
  CHECK(exit_of(Command::Solve, doc) == 2);
}

TEST_CASE("decide with facts") {
  json doc{{"model", "facts"},
           {"n", 2},
           {"source", "X"},
           {"target", "T2"},
           {"maps", {{{"id", "p"}}, {{"id", "c"}, {"constant", true}}, {{"id", "f"}}}},
           {"facts",
            {{{"kind", "PullbackOfFundamentalClassVanishes"},
              {"map", "p"},
              {"justification", "p^*([T^2])=0"}}}}};
  doc["decider"] = decider_block(3, 2, 4);
  const auto r = report_of(Command::Decide, doc);
  CHECK(r["class"]["kind"] == "Zero");
  CHECK(r["verdict"]["decision"] == "DeformableFree");
  CHECK(r["verdict"]["rule"] == decider::rule::kConverseJiang);
  CHECK(r["hypotheses"].size() == 7);
}

TEST_CASE("exit codes") {
  SUBCASE("schema: invalid JSON, unknown model, unknown field, bad types") {
    CHECK(run_document(Command::Class, "{").exit_code == 2);
    CHECK(exit_of(Command::Class, json{{"model", "klein"}}) == 2);
    auto doc = torus({{{0}}, {{1}}}, 1, 1);
    doc["extra"] = 1;
    CHECK(exit_of(Command::Class, doc) == 2);
    doc = torus({{{0}}, {{1}}}, 1, 1);
    doc["maps"][0]["translation"] = {"1/0"};
    CHECK(exit_of(Command::Class, doc) == 2);
    doc["maps"][0]["translation"] = {1.5};
    CHECK(exit_of(Command::Class, doc) == 2);
    CHECK(exit_of(Command::Decide, torus({{{0}}, {{1}}}, 1, 1)) == 2);
  }
  SUBCASE("unknown fact identifier") {
    json doc{{"model", "facts"}, {"n", 2}, {"source", "X"}, {"target", "S2"},
             {"maps", {{{"id", "a"}}, {{"id", "b"}}}},
             {"facts", {{{"kind", "PullbackOfFundamentalClassVanishes"},
                         {"map", "zz"}, {"justification", "?"}}}}};
    CHECK(exit_of(Command::Class, doc) == 2);
  }
  SUBCASE("dimension") {
    CHECK(exit_of(Command::Class, torus({{{0, 0, 0}}, {{1, 0, 0}}}, 3, 1)) == 3);
    CHECK(exit_of(Command::Class, torus({{{0, 0}}, {{1}}}, 2, 1)) == 3);
    auto doc = torus({{{0, 0}}, {{2, 1}}, {{1, 1}}}, 2, 1);
    doc["decider"] = decider_block(2, 1, 2);
    CHECK(exit_of(Command::Decide, doc) == 3);
    const json sphere{{"model", "sphere-degrees"}, {"n", 2}, {"k", 3}, {"degrees", {1, 2}}};
    CHECK(exit_of(Command::Class, sphere) == 3);
  }
  SUBCASE("transversality") {
    CHECK(exit_of(Command::Solve, torus({{{1, 2}}, {{1, 2}}, {{5, 3}}}, 2, 1)) == 4);
  }
  SUBCASE("overflow") {
    const int64_t big = int64_t{1} << 62;
    CHECK(exit_of(Command::Class, torus({{{-big, 0}, {0, 0}}, {{big, 0}, {0, 1}}}, 2, 2)) == 5);
    CHECK(exit_of(Command::Class, torus({{{big, 0}, {0, big}}, {{0, 0}, {0, 0}}}, 2, 2)) == 5);
    const json sphere{{"model", "sphere-degrees"}, {"n", 2}, {"k", 2},
                      {"degrees", {INT64_MAX, INT64_MAX}}};
    CHECK(exit_of(Command::Class, sphere) == 5);
  }
}

TEST_CASE("reports are deterministic") {
  auto doc = torus({{{0, 0, 0, 0}, {0, 0, 0, 0}}, {{3, 1, 0, 0}, {0, 2, 0, 0}},
                    {{0, 0, 2, 1}, {0, 0, 1, 3}}}, 4, 2);
  doc["maps"][2]["translation"] = {"1/3", "2/5"};
  for (auto cmd : {Command::Class, Command::Solve}) {
    const auto a = run_document(cmd, doc.dump());
    const auto b = run_document(cmd, doc.dump());
    REQUIRE(a.exit_code == 0);
    CHECK(a.report == b.report);
    CHECK(a.report.back() == '\n');
  }
}
