#ifndef RSENTROPY_WORDS_HPP
#define RSENTROPY_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsentropy {

using LetterIndex = std::uint8_t;

/*
 * Ordered finite alphabet. Letters are addressed by their 0-based index;
 * each carries a single printable glyph used in the external text format.
 */
class Alphabet {
public:
  Alphabet() = default;
  // Throws std::invalid_argument on duplicate or non-printable glyphs.
  explicit Alphabet(std::vector<char> glyphs);

  std::size_t size() const noexcept { return glyphs_.size(); }
  char glyph(std::size_t index) const { return glyphs_.at(index); }
  const std::vector<char>& glyphs() const noexcept { return glyphs_; }
  std::optional<LetterIndex> index_of(char glyph) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<char> glyphs_;
};

/*
 * Non-empty finite word, stored as a compact sequence of letter indices.
 * Ordering is lexicographic on indices, which gives WordSet its canonical order.
 */
class Word {
public:
  // Throws std::invalid_argument if `indices` is empty.
  explicit Word(std::string indices);
  Word(std::initializer_list<LetterIndex> indices);

  std::size_t size() const noexcept { return letters_.size(); }
  LetterIndex operator[](std::size_t i) const {
    return static_cast<LetterIndex>(letters_[i]);
  }
  // Raw index bytes; each char holds one LetterIndex.
  const std::string& indices() const noexcept { return letters_; }

  // u_[first, first + length)
  Word slice(std::size_t first, std::size_t length) const;
  bool is_prefix_of(const Word& other) const noexcept;
  bool is_suffix_of(const Word& other) const noexcept;
  // v ◁ u: this word occurs as a contiguous subword of `other`.
  bool is_subword_of(const Word& other) const noexcept;
  std::size_t count(LetterIndex letter) const noexcept;

  friend Word operator+(const Word& a, const Word& b) { return Word(a.letters_ + b.letters_); }
  Word power(std::size_t n) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const noexcept {
    // char_traits<char>::compare orders as unsigned char.
    const int c = letters_.compare(other.letters_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  std::string letters_;
};

// Parse glyphs into a word; throws std::invalid_argument on unknown glyphs or empty text.
Word parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const Word& word);

/*
 * Finite non-empty set of words kept sorted and deduplicated. common_length()
 * is set when every member shares one length.
 */
class WordSet {
public:
  // Sorts and deduplicates. Throws std::invalid_argument if `words` is empty.
  explicit WordSet(std::vector<Word> words);
  WordSet(std::initializer_list<Word> words) : WordSet(std::vector<Word>(words)) {}

  std::size_t size() const noexcept { return words_.size(); }
  std::optional<std::size_t> common_length() const noexcept { return common_length_; }
  bool contains(const Word& w) const;
  bool contains_indices(std::string_view indices) const;
  // Whether some member starts with `indices`.
  bool has_member_with_prefix(std::string_view indices) const;
  bool is_subset_of(const WordSet& other) const;

  const std::vector<Word>& words() const noexcept { return words_; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  std::size_t total_letters() const noexcept;

  bool operator==(const WordSet& other) const { return words_ == other.words_; }

private:
  std::vector<Word> words_;
  std::optional<std::size_t> common_length_;
};

// Φ(u): per-letter occurrence counts.
class AbelianVector {
public:
  explicit AbelianVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

  friend AbelianVector operator+(const AbelianVector& a, const AbelianVector& b);
  bool operator==(const AbelianVector&) const = default;

private:
  std::vector<std::uint64_t> counts_;
};

AbelianVector abelianise(const Word& u, std::size_t alphabet_size);

// AB = {uv | u ∈ A, v ∈ B}, deduplicated.
WordSet concat_sets(const WordSet& a, const WordSet& b);

// All length-`length` contiguous subwords of u. Throws std::out_of_range unless 1 ≤ length ≤ |u|.
WordSet subwords_of_length(const Word& u, std::size_t length);

}  // namespace rsentropy

template <>
struct std::hash<rsentropy::Word> {
  std::size_t operator()(const rsentropy::Word& w) const noexcept {
    return std::hash<std::string>{}(w.indices());
  }
};

#endif  // RSENTROPY_WORDS_HPP
