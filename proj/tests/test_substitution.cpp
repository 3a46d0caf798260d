#include <gtest/gtest.h>

#include <sstream>

#include "rsentropy/catalogue.hpp"
#include "rsentropy/errors.hpp"
#include "rsentropy/substitution.hpp"
#include "support.hpp"

using namespace rsentropy;
using support::w;
using support::ws;

TEST(ParseSpec, RandomFibonacci) {
  const auto sub = parse_spec("alphabet = a b\na -> ab | ba\nb -> a");
  EXPECT_EQ(sub, support::rf());
  EXPECT_FALSE(sub.is_deterministic());
}

TEST(ParseSpec, SingleLetter) {
  const auto sub = parse_spec("alphabet = a\na -> aa");
  EXPECT_EQ(sub.size(), 1u);
  EXPECT_TRUE(sub.is_deterministic());
}

TEST(ParseSpec, CommentsAndBlankLines) {
  const auto sub = parse_spec("# header\n\nalphabet = a b  # two letters\na -> ab|ba\n\nb -> a\n");
  EXPECT_EQ(sub, support::rf());
}

TEST(ParseSpec, StreamOverload) {
  std::istringstream in("alphabet = a b\na -> ab | ba\nb -> a\n");
  EXPECT_EQ(parse_spec(in), support::rf());
}

TEST(ParseSpec, MissingRule) {
  try {
    parse_spec("alphabet = a b\na -> ab");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("no image for letter b"), std::string::npos);
  }
}

TEST(ParseSpec, ErrorsCarryLineNumbers) {
  try {
    parse_spec("alphabet = a b\na -> ab | ba\nb a");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_spec("alphabet = a b\na -> ac\nb -> a"), ParseError);
  EXPECT_THROW(parse_spec("alphabet = a b\na -> ab | \nb -> a"), ParseError);
  EXPECT_THROW(parse_spec("alphabet = a b\na -> ab\na -> ba\nb -> a"), ParseError);
  EXPECT_THROW(parse_spec("a -> ab\nb -> a"), ParseError);
  EXPECT_THROW(parse_spec("alphabet = a |\na -> a"), ParseError);
}

TEST(ParseSpec, RoundTripsThroughCanonicalText) {
  for (const auto& name : example_names()) {
    const auto sub = get_example(name).substitution;
    EXPECT_EQ(parse_spec(sub.to_spec()), sub) << name;
  }
}

TEST(Validate, SemiCompatibleExamples) {
  EXPECT_TRUE(validate(support::rf()).ok);
  EXPECT_TRUE(validate(support::rf_squared()).ok);
}

TEST(Validate, ReportsWitnessPair) {
  const auto sub = make_substitution({{'a', {"ab", "a"}}, {'b', {"a"}}});
  const auto report = validate(sub);
  ASSERT_FALSE(report.ok);
  ASSERT_EQ(report.violations.size(), 1u);
  const auto& v = report.violations[0];
  EXPECT_EQ(v.letter, 0u);
  ASSERT_TRUE(v.first && v.second);
  EXPECT_EQ(std::set<Word>({*v.first, *v.second}), std::set<Word>({w("ab"), w("a")}));
  EXPECT_THROW(substitution_matrix(sub), ValidationError);
}

TEST(Matrix, CatalogueMatrices) {
  EXPECT_EQ(substitution_matrix(support::rf()), SubstitutionMatrix(2, {1, 1, 1, 0}));
  EXPECT_EQ(substitution_matrix(support::rpd()), SubstitutionMatrix(2, {1, 2, 1, 0}));
  EXPECT_EQ(substitution_matrix(support::rtm()), SubstitutionMatrix(2, {1, 1, 1, 1}));
}

TEST(Matrix, ColumnSumsAreImageLengths) {
  for (const auto& name : example_names()) {
    const auto sub = get_example(name).substitution;
    const auto m = substitution_matrix(sub);
    for (std::size_t j = 0; j < sub.size(); ++j) {
      for (const auto& u : sub.image(j)) {
        EXPECT_EQ(m.column_sum(j), u.size()) << name;
      }
    }
  }
}

TEST(Matrix, IndependentOfRepresentative) {
  // Reordering the words of each image must not change M.
  const auto a = make_substitution({{'a', {"abbabba", "ababbba"}}, {'b', {"a"}}});
  const auto b = make_substitution({{'a', {"ababbba", "abbabba"}}, {'b', {"a"}}});
  EXPECT_EQ(substitution_matrix(a), substitution_matrix(b));
  EXPECT_EQ(substitution_matrix(a), SubstitutionMatrix(2, {3, 1, 4, 0}));
}

TEST(Primitivity, Exponents) {
  EXPECT_EQ(primitivity_exponent(substitution_matrix(support::rtm())), 1);
  EXPECT_EQ(primitivity_exponent(substitution_matrix(support::rf())), 2);
  EXPECT_FALSE(primitivity_exponent(SubstitutionMatrix(2, {1, 0, 0, 1})).has_value());
  EXPECT_FALSE(primitivity_exponent(SubstitutionMatrix(2, {0, 1, 1, 0})).has_value());
}

TEST(Primitivity, RequireValidPrimitive) {
  EXPECT_NO_THROW(require_valid_primitive(support::rf()));
  const auto reducible = make_substitution({{'a', {"a"}}, {'b', {"b"}}});
  EXPECT_THROW(require_valid_primitive(reducible), ValidationError);
}

TEST(ConstantLength, Examples) {
  EXPECT_EQ(constant_length(support::rpd()), std::optional<std::size_t>(2));
  EXPECT_FALSE(constant_length(support::rf()).has_value());
  EXPECT_EQ(constant_length(get_example("random-paper-folding").substitution),
            std::optional<std::size_t>(2));
}
