#include "rsentropy/language.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "rsentropy/errors.hpp"
#include "rsentropy/spectral.hpp"

namespace rsentropy {

namespace {

using StringSet = std::unordered_set<std::string>;

/*
 * What a concatenation needs to know about a set of equal-length words.
 * Words shorter than ℓ−1 are kept whole; longer ones are reduced to their
 * length-ℓ subwords and their (ℓ−1)-prefixes and suffixes, pooled over the set.
 * Pooling is exact: a window of length ℓ never reaches across a whole block of
 * length ≥ ℓ−1, so prefix and suffix of one block are never used together.
 */
struct Summary {
  std::size_t word_length = 0;
  bool whole = false;
  StringSet full;
  StringSet inner;
  StringSet prefixes;
  StringSet suffixes;

  std::size_t stored_letters(std::size_t window) const {
    if (whole) {
      return full.size() * word_length;
    }
    const std::size_t k = window == 0 ? 0 : window - 1;
    return inner.size() * window + (prefixes.size() + suffixes.size()) * k;
  }
};

class Summariser {
public:
  explicit Summariser(std::size_t window) : ell_(window), k_(window - 1) {}

  Summary of_word(const std::string& w) const {
    Summary s;
    s.word_length = w.size();
    if (w.size() < k_) {
      s.whole = true;
      s.full.insert(w);
    } else {
      add_long(s, w);
    }
    return s;
  }

  Summary concat(const Summary& a, const Summary& b) const {
    Summary c;
    c.word_length = a.word_length + b.word_length;
    if (a.whole && b.whole) {
      const bool whole = c.word_length < k_;
      c.whole = whole;
      for (const auto& x : a.full) {
        for (const auto& y : b.full) {
          std::string w = x + y;
          if (whole) {
            c.full.insert(std::move(w));
          } else {
            add_long(c, w);
          }
        }
      }
      return c;
    }
    if (a.whole) {
      c.inner = b.inner;
      c.suffixes = b.suffixes;
      for (const auto& x : a.full) {
        for (const auto& p : b.prefixes) {
          const std::string s = x + p;
          add_windows(c.inner, s);
          c.prefixes.insert(s.substr(0, k_));
        }
      }
      return c;
    }
    if (b.whole) {
      c.inner = a.inner;
      c.prefixes = a.prefixes;
      for (const auto& s : a.suffixes) {
        for (const auto& y : b.full) {
          const std::string t = s + y;
          add_windows(c.inner, t);
          c.suffixes.insert(t.substr(t.size() - k_));
        }
      }
      return c;
    }
    c.inner = a.inner;
    c.inner.insert(b.inner.begin(), b.inner.end());
    c.prefixes = a.prefixes;
    c.suffixes = b.suffixes;
    for (const auto& s : a.suffixes) {
      for (const auto& p : b.prefixes) {
        add_windows(c.inner, s + p);
      }
    }
    return c;
  }

  static void merge_into(Summary& into, Summary&& from) {
    into.full.merge(from.full);
    into.inner.merge(from.inner);
    into.prefixes.merge(from.prefixes);
    into.suffixes.merge(from.suffixes);
  }

private:
  void add_windows(StringSet& out, const std::string& s) const {
    for (std::size_t i = 0; i + ell_ <= s.size(); ++i) {
      out.insert(s.substr(i, ell_));
    }
  }

  void add_long(Summary& s, const std::string& w) const {
    add_windows(s.inner, w);
    s.prefixes.insert(w.substr(0, k_));
    s.suffixes.insert(w.substr(w.size() - k_));
  }

  std::size_t ell_;
  std::size_t k_;
};

}  // namespace

bool LanguageSlice::contains(const Word& w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

LanguageSlice legal_words(const RandomSubstitution& sub, std::size_t length,
                          const LanguageOptions& options) {
  if (length < 1) {
    throw std::invalid_argument("word length must be at least 1");
  }
  require_valid_primitive(sub);
  const int k0 = *primitivity_exponent(substitution_matrix(sub));
  const int window = options.window.value_or(k0);
  if (window < 1) {
    throw std::invalid_argument("stability window must be at least 1");
  }

  const Summariser summariser(length);
  const std::size_t n = sub.size();
  std::vector<Summary> current;
  current.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    current.push_back(summariser.of_word(std::string(1, static_cast<char>(j))));
  }

  LanguageSlice slice;
  slice.length = length;
  slice.stability_window = window;
  std::set<std::string> found;
  int unchanged = 0;

  for (int level = 1; level <= options.max_level; ++level) {
    std::vector<Summary> next;
    next.reserve(n);
    std::size_t stored = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Summary merged;
      bool first = true;
      for (const auto& u : sub.image(i)) {
        Summary acc = current[u[0]];
        for (std::size_t k = 1; k < u.size(); ++k) {
          acc = summariser.concat(acc, current[u[k]]);
        }
        if (first) {
          merged = std::move(acc);
          first = false;
        } else {
          Summariser::merge_into(merged, std::move(acc));
        }
      }
      stored += merged.stored_letters(length);
      if (stored > options.memory_cap) {
        throw CapacityError(options.memory_cap, level - 1,
                            "language summary at level " + std::to_string(level) +
                                " exceeds the memory cap of " +
                                std::to_string(options.memory_cap) + " letters");
      }
      next.push_back(std::move(merged));
    }
    current = std::move(next);

    const std::size_t before = found.size();
    for (const auto& s : current) {
      found.insert(s.inner.begin(), s.inner.end());
    }
    slice.levels_used = level;
    if (found.size() == before && before > 0) {
      if (++unchanged >= window) {
        slice.converged = true;
        break;
      }
    } else {
      unchanged = 0;
    }
  }

  slice.words.reserve(found.size());
  for (const auto& w : found) {
    slice.words.emplace_back(w);
  }
  return slice;
}

std::vector<Word> subwords_of_level(const LevelSets& sets, std::size_t length) {
  std::set<Word> found;
  for (const auto& s : sets.per_letter) {
    for (const auto& w : s) {
      if (w.size() >= length) {
        for (const auto& v : subwords_of_length(w, length)) {
          found.insert(v);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<ComplexityRow> complexity_profile(const RandomSubstitution& sub, std::size_t max_length,
                                              const LanguageOptions& options) {
  require_valid_primitive(sub);
  const auto perron = perron_data(substitution_matrix(sub));
  std::vector<ComplexityRow> rows;
  for (std::size_t ell = 1; ell <= max_length; ++ell) {
    const auto slice = legal_words(sub, ell, options);
    ComplexityRow row;
    row.length = ell;
    row.count = slice.words.size();
    row.converged = slice.converged;
    row.entropy_quotient = std::log(static_cast<double>(row.count)) / static_cast<double>(ell);
    for (const auto& w : slice.words) {
      for (std::size_t i = 0; i < sub.size(); ++i) {
        const double freq =
            static_cast<double>(w.count(static_cast<LetterIndex>(i))) / static_cast<double>(ell);
        row.frequency_deviation = std::max(row.frequency_deviation, std::abs(freq - perron.right[i]));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

PeriodicityCertificate is_periodic_bounded(const RandomSubstitution& sub, const Word& u, int n_max,
                                           const LanguageOptions& options) {
  if (n_max < 1) {
    throw std::invalid_argument("n_max must be at least 1");
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] >= sub.size()) {
      throw std::invalid_argument("word uses a letter outside the alphabet");
    }
  }
  PeriodicityCertificate cert{u, 0, true, 0, std::nullopt, true};
  for (int power = 1; power <= n_max; ++power) {
    const Word candidate = u.power(static_cast<std::size_t>(power));
    const auto slice = legal_words(sub, candidate.size(), options);
    cert.slices_converged = cert.slices_converged && slice.converged;
    cert.n_checked = power;
    if (!slice.contains(candidate)) {
      cert.consistent = false;
      cert.failing_power = power;
      cert.missing = candidate;
      return cert;
    }
  }
  return cert;
}

}  // namespace rsentropy
