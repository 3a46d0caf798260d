#ifndef RSENTROPY_LANGUAGE_HPP
#define RSENTROPY_LANGUAGE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rsentropy/inflation.hpp"
#include "rsentropy/substitution.hpp"
#include "rsentropy/words.hpp"

namespace rsentropy {

struct LanguageOptions {
  // Levels without change before the slice counts as converged.
  // Defaults to the primitivity exponent.
  std::optional<int> window;
  int max_level = 40;
  std::size_t memory_cap = kDefaultMemoryCap;
};

// L_ℓ: legal words of one length, as far as the level-by-level search found them.
struct LanguageSlice {
  std::size_t length = 0;
  std::vector<Word> words;  // sorted, distinct
  int levels_used = 0;
  bool converged = false;
  int stability_window = 0;

  bool contains(const Word& w) const;
};

/*
 * Length-ℓ subwords of the level-m inflation words for m = 1, 2, ..., kept as a
 * running union. Whole inflation words are never materialised: each letter's
 * level-m set is summarised by its length-ℓ subwords and its (ℓ−1)-prefixes and
 * suffixes, which is all a concatenation needs to produce new subwords.
 *
 * Requires a valid primitive substitution. Throws CapacityError when a level
 * summary exceeds the memory cap.
 */
LanguageSlice legal_words(const RandomSubstitution& sub, std::size_t length,
                          const LanguageOptions& options = {});

// Subwords of length ℓ of every word in the given level sets (brute-force reference).
std::vector<Word> subwords_of_level(const LevelSets& sets, std::size_t length);

struct ComplexityRow {
  std::size_t length = 0;
  std::size_t count = 0;
  double entropy_quotient = 0.0;  // log(#L_ℓ) / ℓ
  // max over u ∈ L_ℓ and letters i of |#_{a_i}(u)/ℓ − R_i|
  double frequency_deviation = 0.0;
  bool converged = false;
};

std::vector<ComplexityRow> complexity_profile(const RandomSubstitution& sub, std::size_t max_length,
                                              const LanguageOptions& options = {});

/*
 * Bounded necessary check for periodicity: u^N legal for N = 1..n_max.
 * "consistent" never proves periodicity.
 */
struct PeriodicityCertificate {
  Word u;
  int n_checked = 0;
  bool consistent = true;
  int failing_power = 0;
  std::optional<Word> missing;
  bool slices_converged = true;
};

PeriodicityCertificate is_periodic_bounded(const RandomSubstitution& sub, const Word& u, int n_max,
                                           const LanguageOptions& options = {});

}  // namespace rsentropy

#endif  // RSENTROPY_LANGUAGE_HPP
