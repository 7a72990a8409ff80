#include "doctest.h"

#include <random>

#include <cayleyfn/transformation.hpp>

#include "support/support.hpp"

using namespace cayleyfn;

TEST_SUITE_BEGIN("transformation");

TEST_CASE("constructor validates images") {
  CHECK_THROWS_AS(Transformation({}), Error);
  CHECK_THROWS_AS(Transformation({0, 2}), Error);
  CHECK_THROWS_AS(Transformation({-1}), Error);
  CHECK_NOTHROW(Transformation({0}));
  CHECK_NOTHROW(Transformation({1, 0}));
}

TEST_CASE("constructor validates labels") {
  CHECK_THROWS_AS(Transformation({0, 0}, {{"x"}}), Error);
  CHECK_THROWS_AS(Transformation({0, 0}, {{"x", "x"}}), Error);
  CHECK_THROWS_AS(Transformation({0, 0}, {{"x", ""}}), Error);
  CHECK_THROWS_AS(Transformation({0, 0}, {{"x", "a b"}}), Error);
  CHECK_THROWS_AS(Transformation({0, 0}, {{"x", "a/b"}}), Error);
  CHECK_NOTHROW(Transformation({0, 0}, {{"x", "y"}}));
}

TEST_CASE("canonical labels normalise away") {
  Transformation f({1, 0}, {{"0", "1"}});
  CHECK_FALSE(f.has_labels());
  Transformation g({1, 0}, {{"1", "0"}});
  CHECK(g.has_labels());
}

TEST_CASE("identity") {
  Transformation id = Transformation::identity(4);
  CHECK(id.size() == 4);
  for (int x = 0; x < 4; ++x) {
    CHECK(id(x) == x);
  }
  CHECK_THROWS_AS(Transformation::identity(0), Error);
}

TEST_CASE("labels are presentation only") {
  Transformation f({1, 0}, {{"p", "q"}});
  Transformation g({1, 0});
  CHECK(f == g);
  CHECK(f.label(0) == "p");
  CHECK(g.label(0) == "0");
  CHECK(f.index_of("q") == 1);
  CHECK_FALSE(f.index_of("r").has_value());
  CHECK_FALSE(g.index_of("0").has_value());
  CHECK(f.without_labels().label(1) == "1");
}

TEST_CASE("compose applies the left map last") {
  // f sends 0,1,2 to 1,2,0; g fixes 0 and swaps 1,2.
  Transformation f({1, 2, 0});
  Transformation g({0, 2, 1});
  Transformation fg = compose(f, g);
  CHECK(fg.images() == std::vector<int>{1, 0, 2});
  Transformation gf = compose(g, f);
  CHECK(gf.images() == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(compose(f, Transformation({0, 1})), SizeMismatchError);
}

TEST_CASE("thirteen point rotation squares as expected") {
  Transformation alpha = support::thirteen_point_rotation();
  Transformation sq = compose(alpha, alpha);
  CHECK(sq.images() ==
        std::vector<int>{7, 7, 7, 10, 10, 10, 10, 11, 11, 11, 3, 7, 7});
  CHECK(power(alpha, 2) == sq);
}

TEST_CASE("power") {
  Transformation f({1, 2, 0});
  CHECK(power(f, 0) == Transformation::identity(3));
  CHECK(power(f, 1) == f);
  CHECK(power(f, 3) == Transformation::identity(3));
  CHECK(power(f, 7) == f);
  CHECK_THROWS_AS(power(f, -1), Error);
}

TEST_CASE("image chain shrinks to the stable image") {
  // 2 -> 1 -> 0 -> 0.
  Transformation chain({0, 0, 1});
  auto steps = image_chain(chain);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0] == std::vector<int>{0, 1, 2});
  CHECK(steps[1] == std::vector<int>{0, 1});
  CHECK(steps[2] == std::vector<int>{0});

  auto perm_steps = image_chain(Transformation({1, 2, 0}));
  REQUIRE(perm_steps.size() == 1);
  CHECK(perm_steps[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("idempotent and commuting checks") {
  Transformation eps = support::thirteen_point_idempotent();
  Transformation alpha = support::thirteen_point_rotation();
  CHECK(is_idempotent(eps));
  CHECK_FALSE(is_idempotent(alpha));
  CHECK(commutes(alpha, eps));
  CHECK(commutes(eps, alpha));
  // Redirecting one satellite breaks commutation.
  auto images = alpha.images();
  images[1] = 7;
  CHECK_FALSE(commutes(Transformation(images), eps));
}

TEST_CASE("parse two-row tables") {
  Transformation f = parse_transformation("a b c / b c a");
  CHECK(f.size() == 3);
  CHECK(f.images() == std::vector<int>{1, 2, 0});
  CHECK(f.label(0) == "a");

  Transformation g = parse_transformation("  a   b /\n b\tb ");
  CHECK(g.images() == std::vector<int>{1, 1});

  Transformation canonical = parse_transformation("0 1 2 / 1 2 0");
  CHECK_FALSE(canonical.has_labels());
}

TEST_CASE("parse rejects malformed tables") {
  CHECK_THROWS_AS(parse_transformation(""), ParseError);
  CHECK_THROWS_AS(parse_transformation("a b"), ParseError);
  CHECK_THROWS_AS(parse_transformation("a b / a"), ParseError);
  CHECK_THROWS_AS(parse_transformation("a a / a a"), ParseError);
  CHECK_THROWS_AS(parse_transformation("a b / a c"), ParseError);
  CHECK_THROWS_AS(parse_transformation("a / b / c"), ParseError);
}

TEST_CASE("parse json records") {
  Transformation f = parse_transformation(R"({"labels": ["x", "y"], "map": [1, 1]})");
  CHECK(f.images() == std::vector<int>{1, 1});
  CHECK(f.label(1) == "y");
  Transformation g = parse_transformation(R"({"map": [0, 0, 1]})");
  CHECK_FALSE(g.has_labels());
  CHECK_THROWS_AS(parse_transformation(R"({"map": [2, 0]})"), ParseError);
  CHECK_THROWS_AS(parse_transformation(R"({"map": "x"})"), ParseError);
}

TEST_CASE("format round trips") {
  Transformation eps = support::thirteen_point_idempotent();
  CHECK(format_transformation(eps) ==
        "a a1 a2 b b1 b2 b3 c c1 c2 d e e1 / a a a b b b b c c c d e e");
  CHECK(parse_transformation(format_transformation(eps)) == eps);

  Transformation plain({2, 2, 0});
  CHECK(format_transformation(plain) == "0 1 2 / 2 2 0");
  CHECK(parse_transformation(format_transformation(plain)) == plain);
}

TEST_CASE("json round trips") {
  Transformation eps = support::thirteen_point_idempotent();
  json j = transformation_to_json(eps);
  CHECK(j["map"].size() == 13);
  CHECK(j["labels"][3] == "b");
  Transformation back = transformation_from_json(j);
  CHECK(back == eps);
  CHECK(back.labels() == eps.labels());

  Transformation plain({1, 0});
  json jp = transformation_to_json(plain);
  CHECK_FALSE(jp.contains("labels"));
  CHECK(transformation_from_json(jp) == plain);
}

TEST_CASE("format round trips on random maps") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 20);
    Transformation f = support::random_map(n, gen);
    CHECK(parse_transformation(format_transformation(f)) == f);
    CHECK(transformation_from_json(transformation_to_json(f)) == f);
  }
}

TEST_SUITE_END();
