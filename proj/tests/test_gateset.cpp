#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slowmode/errors.hpp"
#include "slowmode/gateset.hpp"

using namespace slowmode;

TEST_CASE("u1 layer structure and equal move weights") {
  // two bond layers plus the impurity move, each with weight 1/3
  const auto gs = build_gate_set(Model::U1Half, 4, ImpuritySpec::site_flip(1));
  CHECK(gs.bulk_layers.size() == 2);
  CHECK(gs.impurity_rules.size() == 1);
  REQUIRE(gs.layer_weights.size() == 3);
  for (double w : gs.layer_weights) CHECK(w == doctest::Approx(1.0 / 3.0));

  const auto gs0 = build_gate_set(Model::U1Half, 4);
  CHECK(gs0.bulk_layers.size() == 2);
  CHECK(gs0.layer_weights[0] == doctest::Approx(0.5));
  // odd bonds: (1,2), (3,4); even bonds: (2,3)
  CHECK(gs0.bulk_layers[0].size() == 2);
  CHECK(gs0.bulk_layers[1].size() == 1);
}

TEST_CASE("h3 at minimal size is a single layer with the four listed pairs") {
  const auto gs = build_gate_set(Model::DipOneH3, 3);
  REQUIRE(gs.bulk_layers.size() == 1);
  REQUIRE(gs.bulk_layers[0].size() == 1);
  CHECK(gs.bulk_layers[0][0].pairs.size() == 4);
  CHECK(gs.layer_weights[0] == doctest::Approx(1.0));
}

TEST_CASE("w4w5 gates carry the staggered patterns") {
  const auto gs = build_gate_set(Model::DipHalfW4W5, 10);
  // 4 offsets of W4 plus 5 of W5
  CHECK(gs.bulk_layers.size() == 9);
  const auto& w4 = gs.bulk_layers[0][0];
  CHECK(w4.pairs.size() == 1);
  CHECK(w4.pairs[0].first == std::vector<std::uint8_t>{1, 0, 0, 1});
  CHECK(w4.pairs[0].second == std::vector<std::uint8_t>{0, 1, 1, 0});
  const auto& w5 = gs.bulk_layers[4][0];
  CHECK(w5.support.size() == 5);
  CHECK(w5.pairs.size() == 2);  // untouched middle site in both states
}

TEST_CASE("h3h4 uses shift gates for the 4-local family") {
  const auto gs = build_gate_set(Model::DipOneH3H4, 8);
  CHECK(gs.bulk_layers.size() == 3 + 4);
  bool found_shift = false;
  for (const auto& layer : gs.bulk_layers)
    for (const auto& rule : layer)
      if (rule.kind == GateRule::Kind::Shift) {
        found_shift = true;
        CHECK(rule.shift == std::vector<std::int8_t>{1, -1, -1, 1});
      }
  CHECK(found_shift);
}

TEST_CASE("errors: span, unsupported impurity, bad sites") {
  CHECK_THROWS_AS(build_gate_set(Model::DipHalfW4W5, 4), SpanError);
  CHECK_THROWS_AS(build_gate_set(Model::DipOneH3, 2), SpanError);
  CHECK_THROWS_AS(build_gate_set(Model::U1Half, 6, ImpuritySpec::state_flip({1})),
                  UnsupportedImpurity);
  CHECK_THROWS_AS(build_gate_set(Model::TJz, 6, ImpuritySpec::site_flip(1)),
                  UnsupportedImpurity);
  CHECK_THROWS_AS(build_gate_set(Model::U1Half, 6, ImpuritySpec::site_flip(7)),
                  ValidationError);
}

TEST_CASE("charge encodings") {
  CHECK(state_charge(Model::U1Half, 0) == -1);
  CHECK(state_charge(Model::U1Half, 1) == 1);
  CHECK(state_charge(Model::DipOneH3, 0) == -1);
  CHECK(state_charge(Model::DipOneH3, 1) == 0);
  CHECK(state_charge(Model::DipOneH3, 2) == 1);
  CHECK(state_charge(Model::TJz, 0) == 0);
  CHECK(state_charge(Model::TJz, 1) == 1);
  CHECK(state_charge(Model::TJz, 2) == -1);
}

TEST_CASE("spin-1 swap impurity becomes a charge hop") {
  const auto gs = build_gate_set(Model::DipOneH3, 8, ImpuritySpec::swap_at(1));
  REQUIRE(gs.impurity_rules.size() == 1);
  CHECK(gs.impurity_rules[0].kind == GateRule::Kind::Shift);
}
