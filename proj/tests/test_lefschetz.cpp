#include "oracles.hpp"

#include "coincidence/lefschetz.hpp"

#include <doctest.h>

using namespace coincidence;
using namespace coincidence::lefschetz;
using exterior::ExteriorElement;

namespace {

IntegerMatrix stacked(const TorusMapModel &model) {
  IntegerMatrix out = model.matrices[1] - model.matrices[0];
  for (int i = 2; i < model.k(); ++i)
    out = IntegerMatrix::vstack(
        out, model.matrices[static_cast<std::size_t>(i)] - model.matrices[0]);
  return out;
}

TorusMapModel random_model(std::mt19937_64 &rng, int n, int k) {
  TorusMapModel model{(k - 1) * n, n, {}};
  for (int i = 0; i < k; ++i)
    model.matrices.push_back(oracle::random_matrix(rng, n, model.m, -3, 3));
  return model;
}

} // namespace

TEST_CASE("pair_class_torus") {
  SUBCASE("equal matrices give zero") {
    const TorusMapModel model{2, 1, {IntegerMatrix{{1, 4}}, IntegerMatrix{{1, 4}}}};
    CHECK(pair_class_torus(model, 2).is_zero());
  }
  SUBCASE("pullback of e1 along [2 1]") {
    const TorusMapModel model{2, 1, {IntegerMatrix{{0, 0}}, IntegerMatrix{{2, 1}}}};
    CHECK(pair_class_torus(model, 2) ==
          ExteriorElement(2, {{{1}, 2}, {{2}, 1}}));
  }
  SUBCASE("m = n, k = 2: top coefficient is det(A2 - A1)") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const auto model = random_model(rng, 3, 2);
      CHECK(exterior::top_coefficient(pair_class_torus(model, 2)) ==
            oracle::cofactor_det(model.matrices[1] - model.matrices[0]));
    }
  }
  SUBCASE("index range") {
    const TorusMapModel model{2, 1, {IntegerMatrix{{0, 0}}, IntegerMatrix{{2, 1}}}};
    CHECK_THROWS_WITH_AS(pair_class_torus(model, 1),
                         doctest::Contains("IndexOutOfRange"), Error);
    CHECK_THROWS_WITH_AS(pair_class_torus(model, 3),
                         doctest::Contains("IndexOutOfRange"), Error);
  }
}

TEST_CASE("multi_class_torus examples") {
  const IntegerMatrix zero{{0, 0}};
  CHECK(multi_class_torus({2, 1, {zero, IntegerMatrix{{2, 1}}, IntegerMatrix{{1, 1}}}}) ==
        ClassValue::integer(1, "torus model: cup product of difference-map pair classes"));
  CHECK(multi_class_torus({2, 1, {zero, IntegerMatrix{{2, 0}}, IntegerMatrix{{0, 3}}}}).value() == 6);
  const auto c = multi_class_torus({2, 1, {IntegerMatrix{{1, 2}}, IntegerMatrix{{1, 2}}, IntegerMatrix{{5, 3}}}});
  CHECK(c.kind() == ClassValue::Kind::Integer);
  CHECK(c.value() == 0);
}

TEST_CASE("multi_class_torus: dimension gate") {
  const TorusMapModel model{3, 1, {IntegerMatrix{{0, 0, 0}}, IntegerMatrix{{1, 0, 0}},
                                  IntegerMatrix{{0, 1, 0}}}};
  CHECK_THROWS_WITH_AS(multi_class_torus(model),
                       doctest::Contains("DimensionMismatch"), Error);
  const TorusMapModel ragged{2, 1, {IntegerMatrix{{0, 0}}, IntegerMatrix{{1, 0, 0}}}};
  CHECK_THROWS_WITH_AS(multi_class_torus(ragged),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("stacked-determinant law and factor vanishing") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 2;
    const int k = 2 + (trial / 2) % 2;
    auto model = random_model(rng, n, k);
    const auto value = multi_class_torus(model);
    CHECK(value.value() == oracle::cofactor_det(stacked(model)));

    bool some_zero = false;
    for (int i = 2; i <= k; ++i)
      some_zero = some_zero || pair_class_torus(model, i).is_zero();
    if (some_zero)
      CHECK(value.value() == 0);
  }
}

TEST_CASE("sphere_class") {
  CHECK(sphere_class(2, 2, {3, 5}).value() == 8);
  CHECK(sphere_class(4, 3, {2, -7, 11}).value() == 6);
  CHECK(sphere_class(3, 3, {0, 0, 0}).value() == 0);
  // k = 2 consistency: d2 + (-1)^n d1.
  for (int n = 1; n <= 3; ++n)
    for (int64_t d1 = -5; d1 <= 5; ++d1)
      for (int64_t d2 = -5; d2 <= 5; ++d2)
        CHECK(sphere_class(n, 2, {d1, d2}).value() == d2 + (n % 2 ? -d1 : d1));
  // odd n, k = 3: d3 - d2 + d1.
  CHECK(sphere_class(1, 3, {1, 10, 100}).value() == 91);
  CHECK_THROWS_WITH_AS(sphere_class(2, 3, {1, 2}),
                       doctest::Contains("ArityMismatch"), Error);
  CHECK_THROWS_AS(sphere_class(0, 2, {1, 2}), Error);
}

namespace {

FactModel hopf_model(int k) {
  FactModel model{2, "X", "S2", {{"f1", false}, {"f2", true}}, {}};
  for (int i = 3; i <= k; ++i)
    model.maps.push_back({"f" + std::to_string(i), false});
  return model;
}

} // namespace

TEST_CASE("class_from_facts: vanishing H^n of the source") {
  auto model = hopf_model(3);
  model.facts.push_back({CohomologyGroupVanishes{"X", 2}, "H^2(X)=0"});
  const auto c = class_from_facts(model);
  CHECK(c.kind() == ClassValue::Kind::Zero);
  CHECK(c.reason() == "H^2(X)=0 forces all pair classes to vanish");
  CHECK(c.provenance() == "H^2(X)=0");
}

TEST_CASE("class_from_facts: p^*[N] = 0 with a constant partner") {
  FactModel model{2, "X", "T2", {{"p", false}, {"c", true}, {"f", false}}, {}};
  model.facts.push_back({PullbackOfFundamentalClassVanishes{"p"}, "p^*([T^2])=0"});
  const auto c = class_from_facts(model);
  CHECK(c.kind() == ClassValue::Kind::Zero);
  CHECK(c.provenance() == "p^*([T^2])=0");

  // Without a constant partner nothing follows.
  model.maps[1].constant = false;
  CHECK(class_from_facts(model).kind() == ClassValue::Kind::Unknown);

  // Constant base map, vanishing pullback elsewhere.
  FactModel flipped{2, "X", "T2", {{"c", true}, {"f", false}, {"p", false}}, {}};
  flipped.facts.push_back({PullbackOfFundamentalClassVanishes{"p"}, "p^*([T^2])=0"});
  CHECK(class_from_facts(flipped).kind() == ClassValue::Kind::Zero);
}

TEST_CASE("class_from_facts: pair classes") {
  auto model = hopf_model(3);
  model.facts.push_back({PairClassZero{2, 3}, "pair (2,3) does not enter the base-1 product"});
  CHECK(class_from_facts(model).kind() == ClassValue::Kind::Unknown);
  model.facts.push_back({PairClassZero{3, 1}, "declared"});
  CHECK(class_from_facts(model).kind() == ClassValue::Kind::Zero);
}

TEST_CASE("class_from_facts: conservative outcomes and errors") {
  auto model = hopf_model(3);
  CHECK(class_from_facts(model) == ClassValue::unknown("insufficient facts"));

  model.facts = {{CohomologyGroupVanishes{"X", 3}, "H^3(X)=0"}};
  CHECK(class_from_facts(model).kind() == ClassValue::Kind::Unknown);
  model.facts = {{CohomologyGroupVanishes{"X", 4}, "H^4(X)=0"}};
  CHECK(class_from_facts(model).kind() == ClassValue::Kind::Zero);

  model.facts = {{PullbackOfFundamentalClassVanishes{"g"}, "?"}};
  CHECK_THROWS_WITH_AS(class_from_facts(model),
                       doctest::Contains("UnknownIdentifier"), Error);
  model.facts = {{CohomologyGroupVanishes{"Y", 2}, "?"}};
  CHECK_THROWS_WITH_AS(class_from_facts(model),
                       doctest::Contains("UnknownIdentifier"), Error);
  model.facts = {{PairClassZero{1, 4}, "?"}};
  CHECK_THROWS_WITH_AS(class_from_facts(model),
                       doctest::Contains("UnknownIdentifier"), Error);
}
