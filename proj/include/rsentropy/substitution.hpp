#ifndef RSENTROPY_SUBSTITUTION_HPP
#define RSENTROPY_SUBSTITUTION_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsentropy/words.hpp"

namespace rsentropy {

/*
 * A random substitution: each letter a_i is mapped to a finite set of
 * candidate image words. Images are sets, so repeated words collapse.
 * Construction only checks structure (non-empty images over the alphabet);
 * semi-compatibility is reported by validate().
 */
class RandomSubstitution {
public:
  RandomSubstitution(Alphabet alphabet, std::vector<WordSet> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return images_.size(); }
  const WordSet& image(std::size_t letter) const { return images_.at(letter); }
  const std::vector<WordSet>& images() const noexcept { return images_; }

  // Every image is a singleton.
  bool is_deterministic() const noexcept;

  // Canonical text form, parseable by parse_spec().
  std::string to_spec() const;

  bool operator==(const RandomSubstitution&) const = default;

private:
  Alphabet alphabet_;
  std::vector<WordSet> images_;
};

// Convenience for tests and the catalogue: {{'a', {"ab", "ba"}}, {'b', {"a"}}}.
struct RuleText {
  char glyph;
  std::vector<std::string> words;
};
RandomSubstitution make_substitution(const std::vector<RuleText>& rules);

/*
 * Text format:
 *   alphabet = a b
 *   a -> ab | ba
 *   b -> a
 * '#' starts a comment; blank lines are ignored. Throws ParseError.
 */
RandomSubstitution parse_spec(std::string_view text);
RandomSubstitution parse_spec(std::istream& in);

struct Violation {
  std::size_t letter;
  std::optional<Word> first;
  std::optional<Word> second;
  std::string reason;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Semi-compatibility: all words of one image share an Abelianisation.
ValidationReport validate(const RandomSubstitution& sub);

// Square non-negative integer matrix, row-major. M(i, j) = |ϑ(a_j)|_{a_i}.
class SubstitutionMatrix {
public:
  explicit SubstitutionMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  SubstitutionMatrix(std::size_t n, std::vector<std::uint64_t> row_major);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }

  std::uint64_t column_sum(std::size_t j) const;

  bool operator==(const SubstitutionMatrix&) const = default;

private:
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

// Throws ValidationError if the substitution is not semi-compatible.
SubstitutionMatrix substitution_matrix(const RandomSubstitution& sub);

// Smallest k ≤ (n-1)^2 + 1 with M^k strictly positive.
std::optional<int> primitivity_exponent(const SubstitutionMatrix& m);

// Common length of all image words, if there is one.
std::optional<std::size_t> constant_length(const RandomSubstitution& sub);

// Validation plus primitivity; throws ValidationError describing the first failure.
void require_valid_primitive(const RandomSubstitution& sub);

}  // namespace rsentropy

#endif  // RSENTROPY_SUBSTITUTION_HPP
