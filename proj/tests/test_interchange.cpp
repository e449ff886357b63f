#include <gramface/interchange.hpp>
#include <gramface/random.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

using namespace gramface;

TEST(Interchange, RoundTripIsExact) {
  Rng rng(71);
  for (int t = 0; t < 10; ++t) {
    const FormSpace U = random_space(3, 3, static_cast<std::size_t>(rng.uniform(0, 10)), 30, rng, t % 2 ? 3 : 0);
    const std::string text = serialize_space(U);
    const FormSpace V = parse_space(text);
    EXPECT_EQ(V, U);
    EXPECT_EQ(V.rows(), U.rows());
    EXPECT_EQ(serialize_space(V), text);
  }
}

TEST(Interchange, OrderIsKept) {
  Rng rng(72);
  const FormSpace U = random_space(3, 2, 2, 9, rng).with_order(MonomialOrder::grlex(3));
  const FormSpace V = parse_space(serialize_space(U));
  EXPECT_EQ(V.order(), U.order());
  EXPECT_EQ(V.rows(), U.rows());
}

TEST(Interchange, GeneratorsAndComplements) {
  const FormSpace U = parse_space(R"({"n": 3, "d": 2, "generators": [{"x1^2": "1", "x2^2": "1"}]})");
  EXPECT_EQ(U.dim(), 1u);
  const FormSpace C = parse_space(R"({"n": 3, "d": 2, "complement_monomials": ["x1^2"]})");
  EXPECT_EQ(C.dim(), 5u);
  EXPECT_FALSE(C.contains(Form::monomial(Monomial{2, 0, 0})));
  const FormSpace Z = parse_space(R"({"n": 2, "d": 2, "generators": []})");
  EXPECT_EQ(Z.dim(), 0u);
  EXPECT_EQ(Z.codim(), 3u);
  const FormSpace R = parse_space(R"({"n": 2, "d": 1, "generators": [{"x1": "-3/4", "x2": "2"}]})");
  EXPECT_TRUE(R.contains(Form::linear({-3, 8})));
}

TEST(Interchange, ErrorsCarryPositions) {
  try {
    parse_space("{\n  \"n\": 3,\n  \"d\": 2,\n  \"generators\": [ {\"x1^2\": 1 ]\n}");
    FAIL();
  } catch (const SpaceFileError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_GT(e.column(), 0u);
  }
  EXPECT_THROW(parse_space(R"({"n": 3, "d": 2, "generators": [{"x1^3": "1"}]})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2, "generators": [{"x3^2": "1"}]})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2, "generators": [{"x1^2": "1/0"}]})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2, "generators": [{"x1^2": 1}]})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2, "generators": [], "complement_monomials": []})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"d": 2, "generators": []})"), SpaceFileError);
  EXPECT_THROW(parse_space(R"({"n": 2, "d": 2, "order": "revlex", "generators": []})"), SpaceFileError);
  EXPECT_THROW(load_space("/nonexistent/file.json"), SpaceFileError);
}

TEST(Interchange, SaveAndLoad) {
  Rng rng(73);
  const FormSpace U = random_space(4, 2, 3, 9, rng);
  const auto path = std::filesystem::temp_directory_path() / "gramface_interchange_test.json";
  save_space(U, path.string());
  EXPECT_EQ(load_space(path.string()), U);
  std::filesystem::remove(path);
}
