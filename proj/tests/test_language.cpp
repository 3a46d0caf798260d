#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rsentropy/catalogue.hpp"
#include "rsentropy/language.hpp"
#include "support.hpp"

using namespace rsentropy;
using support::glyphs;
using support::w;

namespace {

std::set<std::string> legal(const RandomSubstitution& sub, std::size_t length) {
  const auto slice = legal_words(sub, length);
  EXPECT_TRUE(slice.converged);
  return glyphs(slice.words, sub.alphabet());
}

}  // namespace

TEST(LegalWords, Examples) {
  EXPECT_EQ(legal(support::rf(), 1), (std::set<std::string>{"a", "b"}));
  EXPECT_EQ(legal(support::rf(), 2), (std::set<std::string>{"aa", "ab", "ba", "bb"}));
  EXPECT_EQ(legal(support::rtm(), 2), (std::set<std::string>{"aa", "ab", "ba", "bb"}));
}

TEST(LegalWords, MatchesOracleOnSmallLengths) {
  // The oracle materialises whole level sets, so it only reaches a few levels;
  // those suffice for these short lengths on two-letter examples.
  for (const auto& name :
       {"random-fibonacci", "random-thue-morse", "random-period-doubling", "equal-images"}) {
    const auto sub = get_example(name).substitution;
    const auto rules = support::rules_of(sub);
    const int depth = name == std::string("random-fibonacci") ? 6 : 4;
    for (std::size_t len = 1; len <= 5; ++len) {
      EXPECT_EQ(legal(sub, len), oracle::legal_words(rules, len, depth)) << name << " ell=" << len;
    }
  }
  const auto fib = support::fibonacci();
  for (std::size_t len = 1; len <= 8; ++len) {
    EXPECT_EQ(legal(fib, len), oracle::legal_words(support::rules_of(fib), len, 12));
  }
}

TEST(LegalWords, ContainsEveryInflationSubword) {
  for (const auto& name : example_names()) {
    const auto sub = get_example(name).substitution;
    const int top = name == std::string("rust-ex19") ? 2 : 3;
    LevelEnumerator levels(sub);
    for (std::size_t len = 1; len <= 6; ++len) {
      const auto slice = legal_words(sub, len);
      for (int m = 1; m <= top; ++m) {
        for (const auto& u : subwords_of_level(levels.level(m), len)) {
          EXPECT_TRUE(slice.contains(u)) << name << " m=" << m << " ell=" << len;
        }
      }
    }
  }
}

TEST(LegalWords, ExtensionBound) {
  for (const auto& name : example_names()) {
    const auto sub = get_example(name).substitution;
    std::size_t previous = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
      const auto count = legal_words(sub, len).words.size();
      if (len > 1) EXPECT_LE(count, sub.size() * previous) << name;
      previous = count;
    }
  }
}

TEST(Complexity, Examples) {
  const auto rf = complexity_profile(support::rf(), 2);
  ASSERT_EQ(rf.size(), 2u);
  EXPECT_EQ(rf[1].length, 2u);
  EXPECT_EQ(rf[1].count, 4u);
  EXPECT_NEAR(rf[1].entropy_quotient, 0.5 * std::log(4.0), 1e-12);

  const auto fib = complexity_profile(support::fibonacci(), 6);
  for (const auto& row : fib) {
    EXPECT_EQ(row.count, row.length + 1);
  }
  EXPECT_EQ(fib[3].count, 5u);

  for (const auto& name : example_names()) {
    const auto sub = get_example(name).substitution;
    EXPECT_EQ(complexity_profile(sub, 1)[0].count, sub.size()) << name;
  }
}

TEST(Periodicity, Examples) {
  const auto eq = is_periodic_bounded(support::equal_images(), w("ab"), 3);
  EXPECT_TRUE(eq.consistent);
  EXPECT_EQ(eq.n_checked, 3);

  // abaab shows aa is legal in the Fibonacci word; aaa is not.
  EXPECT_TRUE(is_periodic_bounded(support::fibonacci(), w("a"), 2).consistent);
  const auto fib = is_periodic_bounded(support::fibonacci(), w("a"), 3);
  EXPECT_FALSE(fib.consistent);
  EXPECT_EQ(fib.failing_power, 3);
  ASSERT_TRUE(fib.missing);
  EXPECT_EQ(*fib.missing, w("aaa"));
  const auto rules = support::rules_of(support::fibonacci());
  EXPECT_EQ(oracle::legal_words(rules, 2, 10).count("aa"), 1u);
  EXPECT_EQ(oracle::legal_words(rules, 3, 10).count("aaa"), 0u);
  const auto bb = is_periodic_bounded(support::fibonacci(), w("b"), 2);
  EXPECT_FALSE(bb.consistent);
  EXPECT_EQ(bb.failing_power, 2);

  EXPECT_TRUE(is_periodic_bounded(support::rf(), w("ab"), 1).consistent);
}

TEST(Periodicity, AgreesWithOracle) {
  const auto sub = support::equal_images();
  const auto rules = support::rules_of(sub);
  for (int n = 1; n <= 3; ++n) {
    std::string power;
    for (int k = 0; k < n; ++k) power += "ab";
    EXPECT_EQ(oracle::legal_words(rules, power.size(), 4).count(power), 1u);
  }
}
