// Brute-force reference implementations used only by the tests. They work on
// plain glyph strings and share no code with the library's enumeration paths.
#ifndef RSENTROPY_TESTS_ORACLES_HPP
#define RSENTROPY_TESTS_ORACLES_HPP

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Rules = std::map<char, std::vector<std::string>>;

// ϑ(w) for a single word, by exhaustive expansion letter by letter.
inline std::set<std::string> substitute(const Rules& rules, const std::string& w) {
  std::set<std::string> acc{""};
  for (char c : w) {
    std::set<std::string> next;
    for (const auto& prefix : acc) {
      for (const auto& img : rules.at(c)) {
        next.insert(prefix + img);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

// ϑ(A) = union of ϑ(w).
inline std::set<std::string> substitute(const Rules& rules, const std::set<std::string>& words) {
  std::set<std::string> out;
  for (const auto& w : words) {
    auto part = substitute(rules, w);
    out.insert(part.begin(), part.end());
  }
  return out;
}

// ϑᵐ(w) by m-fold application to the whole set (outer iteration ϑ(ϑ^{m-1}(w))).
inline std::set<std::string> power(const Rules& rules, const std::string& w, int m) {
  std::set<std::string> acc{w};
  for (int i = 0; i < m; ++i) {
    acc = substitute(rules, acc);
  }
  return acc;
}

inline std::set<std::string> subwords(const std::set<std::string>& words, std::size_t len) {
  std::set<std::string> out;
  for (const auto& w : words) {
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      out.insert(w.substr(i, len));
    }
  }
  return out;
}

// Legal words of length `len` found in ϑᵐ(a) for all letters a and m ≤ max_level.
inline std::set<std::string> legal_words(const Rules& rules, std::size_t len, int max_level) {
  std::set<std::string> out;
  for (const auto& [letter, _] : rules) {
    std::set<std::string> acc{std::string(1, letter)};
    for (int m = 1; m <= max_level; ++m) {
      acc = substitute(rules, acc);
      auto part = subwords(acc, len);
      out.insert(part.begin(), part.end());
    }
  }
  return out;
}

// Dominant eigenvalue of a 2×2 matrix [[a, b], [c, d]] via the quadratic formula.
inline double eigenvalue_2x2(double a, double b, double c, double d) {
  const double tr = a + d;
  const double det = a * d - b * c;
  return 0.5 * (tr + std::sqrt(tr * tr - 4.0 * det));
}

}  // namespace oracle

#endif  // RSENTROPY_TESTS_ORACLES_HPP
