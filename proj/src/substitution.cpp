#include "rsentropy/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "rsentropy/errors.hpp"

namespace rsentropy {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    if (i > start) {
      out.push_back(s.substr(start, i - start));
    }
  }
  return out;
}

bool reserved_glyph(char c) {
  return c == '#' || c == '|' || c == '-' || c == '>' || c == '=';
}

}  // namespace

RandomSubstitution::RandomSubstitution(Alphabet alphabet, std::vector<WordSet> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (alphabet_.size() == 0) {
    throw std::invalid_argument("alphabet must be non-empty");
  }
  if (images_.size() != alphabet_.size()) {
    throw std::invalid_argument("need exactly one image per letter");
  }
  for (const auto& image : images_) {
    for (const auto& w : image) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] >= alphabet_.size()) {
          throw std::invalid_argument("image word uses a letter outside the alphabet");
        }
      }
    }
  }
}

bool RandomSubstitution::is_deterministic() const noexcept {
  return std::all_of(images_.begin(), images_.end(),
                     [](const WordSet& s) { return s.size() == 1; });
}

std::string RandomSubstitution::to_spec() const {
  std::ostringstream out;
  out << "alphabet =";
  for (char g : alphabet_.glyphs()) {
    out << ' ' << g;
  }
  out << '\n';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out << alphabet_.glyph(i) << " ->";
    bool first = true;
    for (const auto& w : images_[i]) {
      out << (first ? " " : " | ") << format_word(alphabet_, w);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

RandomSubstitution make_substitution(const std::vector<RuleText>& rules) {
  std::vector<char> glyphs;
  glyphs.reserve(rules.size());
  for (const auto& r : rules) {
    glyphs.push_back(r.glyph);
  }
  Alphabet alphabet(std::move(glyphs));
  std::vector<WordSet> images;
  images.reserve(rules.size());
  for (const auto& r : rules) {
    std::vector<Word> words;
    for (const auto& text : r.words) {
      words.push_back(parse_word(alphabet, text));
    }
    images.emplace_back(std::move(words));
  }
  return RandomSubstitution(std::move(alphabet), std::move(images));
}

RandomSubstitution parse_spec(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::optional<WordSet>> images;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }

    if (!alphabet) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "alphabet") {
        throw ParseError(line_no, "expected 'alphabet = <glyph> <glyph> ...'");
      }
      std::vector<char> glyphs;
      for (auto tok : split_whitespace(line.substr(eq + 1))) {
        if (tok.size() != 1) {
          throw ParseError(line_no, "alphabet entries must be single characters, got '" +
                                        std::string(tok) + "'");
        }
        if (reserved_glyph(tok.front())) {
          throw ParseError(line_no, "'" + std::string(tok) + "' cannot be used as a letter");
        }
        glyphs.push_back(tok.front());
      }
      if (glyphs.empty()) {
        throw ParseError(line_no, "alphabet is empty");
      }
      try {
        alphabet.emplace(std::move(glyphs));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      images.assign(alphabet->size(), std::nullopt);
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(line_no, "expected '<letter> -> <word> | <word> ...'");
    }
    const auto lhs = trim(line.substr(0, arrow));
    if (lhs.size() != 1) {
      throw ParseError(line_no, "rule must start with a single letter");
    }
    const auto letter = alphabet->index_of(lhs.front());
    if (!letter) {
      throw ParseError(line_no, "rule for unknown letter '" + std::string(lhs) + "'");
    }
    if (images[*letter]) {
      throw ParseError(line_no, "duplicate rule for letter '" + std::string(lhs) + "'");
    }

    std::vector<Word> words;
    std::string_view rhs = line.substr(arrow + 2);
    std::size_t start = 0;
    while (start <= rhs.size()) {
      const std::size_t bar = std::min(rhs.find('|', start), rhs.size());
      const auto token = trim(rhs.substr(start, bar - start));
      start = bar + 1;
      if (token.empty()) {
        throw ParseError(line_no, "empty image word for letter '" + std::string(lhs) + "'");
      }
      if (std::any_of(token.begin(), token.end(),
                      [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
        throw ParseError(line_no, "whitespace inside image word '" + std::string(token) + "'");
      }
      for (char c : token) {
        if (!alphabet->index_of(c)) {
          throw ParseError(line_no, std::string("unknown letter '") + c + "' in image of '" +
                                        std::string(lhs) + "'");
        }
      }
      words.push_back(parse_word(*alphabet, token));
    }
    images[*letter].emplace(std::move(words));
  }

  if (!alphabet) {
    throw ParseError(0, "missing alphabet line");
  }
  std::vector<WordSet> resolved;
  resolved.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) {
      throw ParseError(0, std::string("no image for letter ") + alphabet->glyph(i));
    }
    resolved.push_back(std::move(*images[i]));
  }
  return RandomSubstitution(std::move(*alphabet), std::move(resolved));
}

RandomSubstitution parse_spec(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

ValidationReport validate(const RandomSubstitution& sub) {
  ValidationReport report;
  const std::size_t n = sub.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& image = sub.image(i);
    const Word& reference = image[0];
    const auto phi = abelianise(reference, n);
    for (std::size_t k = 1; k < image.size(); ++k) {
      if (abelianise(image[k], n) != phi) {
        report.violations.push_back(
            {i, reference, image[k], "Abelianisations differ (not semi-compatible)"});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

SubstitutionMatrix::SubstitutionMatrix(std::size_t n, std::vector<std::uint64_t> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("matrix entry count does not match dimension");
  }
}

std::uint64_t SubstitutionMatrix::column_sum(std::size_t j) const {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    sum += (*this)(i, j);
  }
  return sum;
}

SubstitutionMatrix substitution_matrix(const RandomSubstitution& sub) {
  const auto report = validate(sub);
  if (!report.ok) {
    throw ValidationError(std::string("substitution is not semi-compatible at letter ") +
                          sub.alphabet().glyph(report.violations.front().letter));
  }
  const std::size_t n = sub.size();
  SubstitutionMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto phi = abelianise(sub.image(j)[0], n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, j) = phi[i];
    }
  }
  return m;
}

std::optional<int> primitivity_exponent(const SubstitutionMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) {
    return std::nullopt;
  }
  constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
  };
  auto sat_add = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
  };

  const int wielandt = static_cast<int>((n - 1) * (n - 1) + 1);
  std::vector<std::uint64_t> power = m.entries();
  for (int k = 1; k <= wielandt; ++k) {
    if (std::all_of(power.begin(), power.end(), [](std::uint64_t v) { return v > 0; })) {
      return k;
    }
    std::vector<std::uint64_t> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        const auto a = power[i * n + l];
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          next[i * n + j] = sat_add(next[i * n + j], sat_mul(a, m(l, j)));
        }
      }
    }
    power = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::size_t> constant_length(const RandomSubstitution& sub) {
  std::optional<std::size_t> k;
  for (const auto& image : sub.images()) {
    const auto len = image.common_length();
    if (!len || (k && *k != *len)) {
      return std::nullopt;
    }
    k = len;
  }
  return k;
}

void require_valid_primitive(const RandomSubstitution& sub) {
  const auto report = validate(sub);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw ValidationError(std::string("substitution is not semi-compatible: image of '") +
                          sub.alphabet().glyph(v.letter) + "' contains " +
                          format_word(sub.alphabet(), *v.first) + " and " +
                          format_word(sub.alphabet(), *v.second) + " with different letter counts");
  }
  if (!primitivity_exponent(substitution_matrix(sub))) {
    throw ValidationError("substitution matrix is not primitive");
  }
}

}  // namespace rsentropy
