#include "rsentropy/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace rsentropy {

Alphabet::Alphabet(std::vector<char> glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.size() > 255) {
    throw std::invalid_argument("alphabet has more than 255 letters");
  }
  for (std::size_t i = 0; i < glyphs_.size(); ++i) {
    const auto c = static_cast<unsigned char>(glyphs_[i]);
    if (!std::isgraph(c)) {
      throw std::invalid_argument("alphabet glyphs must be printable, non-space characters");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (glyphs_[j] == glyphs_[i]) {
        throw std::invalid_argument(std::string("duplicate glyph '") + glyphs_[i] + "'");
      }
    }
  }
}

std::optional<LetterIndex> Alphabet::index_of(char glyph) const {
  const auto it = std::find(glyphs_.begin(), glyphs_.end(), glyph);
  if (it == glyphs_.end()) {
    return std::nullopt;
  }
  return static_cast<LetterIndex>(it - glyphs_.begin());
}

Word::Word(std::string indices) : letters_(std::move(indices)) {
  if (letters_.empty()) {
    throw std::invalid_argument("words must be non-empty");
  }
}

Word::Word(std::initializer_list<LetterIndex> indices)
    : Word(std::string(indices.begin(), indices.end())) {}

Word Word::slice(std::size_t first, std::size_t length) const {
  if (length == 0 || first + length > letters_.size()) {
    throw std::out_of_range("word slice out of range");
  }
  return Word(letters_.substr(first, length));
}

bool Word::is_prefix_of(const Word& other) const noexcept {
  return other.letters_.starts_with(letters_);
}

bool Word::is_suffix_of(const Word& other) const noexcept {
  return other.letters_.ends_with(letters_);
}

bool Word::is_subword_of(const Word& other) const noexcept {
  return other.letters_.find(letters_) != std::string::npos;
}

std::size_t Word::count(LetterIndex letter) const noexcept {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), static_cast<char>(letter)));
}

Word Word::power(std::size_t n) const {
  if (n == 0) {
    throw std::invalid_argument("word power must be at least 1");
  }
  std::string out;
  out.reserve(letters_.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    out += letters_;
  }
  return Word(std::move(out));
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty word");
  }
  std::string indices;
  indices.reserve(text.size());
  for (char c : text) {
    const auto idx = alphabet.index_of(c);
    if (!idx) {
      throw std::invalid_argument(std::string("unknown letter '") + c + "'");
    }
    indices.push_back(static_cast<char>(*idx));
  }
  return Word(std::move(indices));
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out.push_back(alphabet.glyph(word[i]));
  }
  return out;
}

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) {
    throw std::invalid_argument("word sets must be non-empty");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  const std::size_t len = words_.front().size();
  const bool same = std::all_of(words_.begin(), words_.end(),
                                [len](const Word& w) { return w.size() == len; });
  if (same) {
    common_length_ = len;
  }
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool WordSet::contains_indices(std::string_view indices) const {
  const auto it = std::lower_bound(
      words_.begin(), words_.end(), indices,
      [](const Word& w, std::string_view key) { return std::string_view(w.indices()) < key; });
  return it != words_.end() && it->indices() == indices;
}

bool WordSet::has_member_with_prefix(std::string_view indices) const {
  const auto it = std::lower_bound(
      words_.begin(), words_.end(), indices,
      [](const Word& w, std::string_view key) { return std::string_view(w.indices()) < key; });
  return it != words_.end() && std::string_view(it->indices()).starts_with(indices);
}

bool WordSet::is_subset_of(const WordSet& other) const {
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

std::size_t WordSet::total_letters() const noexcept {
  if (common_length_) {
    return *common_length_ * words_.size();
  }
  std::size_t total = 0;
  for (const auto& w : words_) {
    total += w.size();
  }
  return total;
}

std::uint64_t AbelianVector::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts_) {
    sum += c;
  }
  return sum;
}

AbelianVector operator+(const AbelianVector& a, const AbelianVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("abelian vectors over different alphabets");
  }
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return AbelianVector(std::move(out));
}

AbelianVector abelianise(const Word& u, std::size_t alphabet_size) {
  std::vector<std::uint64_t> counts(alphabet_size, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= alphabet_size) {
      throw std::invalid_argument("word contains a letter outside the alphabet");
    }
    ++counts[u[i]];
  }
  return AbelianVector(std::move(counts));
}

WordSet concat_sets(const WordSet& a, const WordSet& b) {
  std::vector<Word> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) {
      out.push_back(u + v);
    }
  }
  return WordSet(std::move(out));
}

WordSet subwords_of_length(const Word& u, std::size_t length) {
  if (length < 1 || length > u.size()) {
    throw std::out_of_range("subword length " + std::to_string(length) +
                            " outside [1, " + std::to_string(u.size()) + "]");
  }
  std::vector<Word> out;
  out.reserve(u.size() - length + 1);
  for (std::size_t k = 0; k + length <= u.size(); ++k) {
    out.push_back(u.slice(k, length));
  }
  return WordSet(std::move(out));
}

}  // namespace rsentropy
