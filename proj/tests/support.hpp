// Conversions between library types and the glyph strings the oracles use.
#ifndef RSENTROPY_TESTS_SUPPORT_HPP
#define RSENTROPY_TESTS_SUPPORT_HPP

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rsentropy/catalogue.hpp"
#include "rsentropy/substitution.hpp"

namespace support {

inline const rsentropy::Alphabet& ab() {
  static const rsentropy::Alphabet alphabet({'a', 'b'});
  return alphabet;
}

inline rsentropy::Word w(const std::string& text, const rsentropy::Alphabet& alphabet = ab()) {
  return rsentropy::parse_word(alphabet, text);
}

inline rsentropy::WordSet ws(const std::vector<std::string>& texts,
                             const rsentropy::Alphabet& alphabet = ab()) {
  std::vector<rsentropy::Word> words;
  for (const auto& t : texts) {
    words.push_back(w(t, alphabet));
  }
  return rsentropy::WordSet(std::move(words));
}

inline std::set<std::string> glyphs(const rsentropy::WordSet& set,
                                    const rsentropy::Alphabet& alphabet = ab()) {
  std::set<std::string> out;
  for (const auto& u : set) {
    out.insert(rsentropy::format_word(alphabet, u));
  }
  return out;
}

inline std::set<std::string> glyphs(const std::vector<rsentropy::Word>& words,
                                    const rsentropy::Alphabet& alphabet) {
  std::set<std::string> out;
  for (const auto& u : words) {
    out.insert(rsentropy::format_word(alphabet, u));
  }
  return out;
}

inline oracle::Rules rules_of(const rsentropy::RandomSubstitution& sub) {
  oracle::Rules rules;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    auto& images = rules[sub.alphabet().glyph(i)];
    for (const auto& u : sub.image(i)) {
      images.push_back(rsentropy::format_word(sub.alphabet(), u));
    }
  }
  return rules;
}

inline rsentropy::RandomSubstitution rf() {
  return rsentropy::make_substitution({{'a', {"ab", "ba"}}, {'b', {"a"}}});
}
inline rsentropy::RandomSubstitution rtm() {
  return rsentropy::make_substitution({{'a', {"ab", "ba"}}, {'b', {"ba"}}});
}
inline rsentropy::RandomSubstitution rpd() {
  return rsentropy::make_substitution({{'a', {"ab", "ba"}}, {'b', {"aa"}}});
}
inline rsentropy::RandomSubstitution rf_squared() {
  return rsentropy::make_substitution({{'a', {"baa"}}, {'b', {"ab", "ba"}}});
}
inline rsentropy::RandomSubstitution equal_images() {
  return rsentropy::make_substitution({{'a', {"ab", "ba"}}, {'b', {"ab", "ba"}}});
}
inline rsentropy::RandomSubstitution fibonacci() {
  return rsentropy::make_substitution({{'a', {"ab"}}, {'b', {"a"}}});
}

inline const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;
inline const double kLog2 = std::log(2.0);

}  // namespace support

#endif  // RSENTROPY_TESTS_SUPPORT_HPP
