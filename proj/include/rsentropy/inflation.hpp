#ifndef RSENTROPY_INFLATION_HPP
#define RSENTROPY_INFLATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsentropy/bigint.hpp"
#include "rsentropy/substitution.hpp"
#include "rsentropy/words.hpp"

namespace rsentropy {

// Default bound on stored letters for any enumerated level.
inline constexpr std::size_t kDefaultMemoryCap = 10'000'000;

// ϑᵐ(a_i) for every letter.
struct LevelSets {
  int level = 0;
  std::vector<WordSet> per_letter;

  std::size_t total_letters() const noexcept;
};

struct CardinalityVector {
  int level = 0;
  std::vector<BigInt> counts;
};

// Natural logs of the level-m cardinalities.
struct QVector {
  int level = 0;
  std::vector<double> entries;
};

QVector log_counts(const CardinalityVector& counts);

// ⋃_{u∈A} ϑ(u). Throws CapacityError if the result would hold more than `memory_cap` letters.
WordSet inflate_set(const RandomSubstitution& sub, const WordSet& words,
                    std::size_t memory_cap = kDefaultMemoryCap);

/*
 * Level-by-level enumeration of inflation word sets, reusing level m to build
 * level m + 1 via ϑ^{m+1}(a_i) = ⋃_{u∈ϑ(a_i)} ϑᵐ(u₁)⋯ϑᵐ(u_k).
 * Computed levels are kept, so repeated queries are cheap.
 */
class LevelEnumerator {
public:
  // Throws ValidationError for substitutions that are not semi-compatible.
  explicit LevelEnumerator(RandomSubstitution sub, std::size_t memory_cap = kDefaultMemoryCap);

  // Throws CapacityError naming the largest feasible level.
  const LevelSets& level(int m);
  // Highest level computed so far (0 before any call).
  int deepest_level() const noexcept { return static_cast<int>(levels_.size()); }
  std::size_t memory_cap() const noexcept { return memory_cap_; }
  const RandomSubstitution& substitution() const noexcept { return sub_; }

private:
  RandomSubstitution sub_;
  std::size_t memory_cap_;
  std::vector<LevelSets> levels_;
  bool exhausted_ = false;
};

LevelSets level_sets(const RandomSubstitution& sub, int m,
                     std::size_t memory_cap = kDefaultMemoryCap);

struct LevelCounts {
  CardinalityVector cardinalities;
  QVector q;
};

LevelCounts q_vector(const RandomSubstitution& sub, int m,
                     std::size_t memory_cap = kDefaultMemoryCap);
LevelCounts q_vector(const LevelSets& sets);

// #ϑᵐ(u) = ∏_j (#ϑᵐ(a_j))^{Φ(u)_j}; exact for semi-compatible substitutions.
BigInt product_law_count(const CardinalityVector& per_letter, const AbelianVector& phi);

// ϑᵐ(u) as a set, built from precomputed level sets.
WordSet inflate_word(const LevelSets& sets, const Word& u,
                     std::size_t memory_cap = kDefaultMemoryCap);

// The substitution ϑᵏ, whose images are the level-k inflation sets.
RandomSubstitution substitution_power(const RandomSubstitution& sub, int k,
                                      std::size_t memory_cap = kDefaultMemoryCap);

enum class Condition { identical, disjoint };
enum class Verdict { guaranteed, refuted, unverified };
enum class Criterion {
  equal_images,      // ϑ(a) = ϑ(b) for all letters
  singleton_images,  // deterministic substitution
  prefix_suffix,     // no image word is a prefix (or suffix) of another
  constant_length,   // constant length with pairwise disjoint letter images
  external           // supplied by a caller, e.g. a result from the literature
};

/*
 * Three-valued outcome of checking the identical or disjoint set condition.
 * Both conditions quantify over all powers, so finite enumeration can only
 * refute them; sufficient criteria give "guaranteed".
 */
struct ConditionReport {
  Condition condition = Condition::identical;
  Verdict verdict = Verdict::unverified;
  std::optional<Criterion> criterion;
  std::string detail;
  // Refuted: level of the witness. Unverified: highest level fully checked.
  int level = 0;
  // Refuted: the pair u ≠ v from ϑ(a_letter) and a word separating/shared by ϑᵐ(u), ϑᵐ(v).
  std::size_t letter = 0;
  std::optional<Word> u;
  std::optional<Word> v;
  std::optional<Word> witness;
  // The search stopped below the requested level because of the memory cap.
  bool capacity_limited = false;
};

// ϑᵐ(u) = ϑᵐ(v) for u, v in one image and m ≤ max_level.
ConditionReport check_identical(const RandomSubstitution& sub, int max_level = 3,
                                std::size_t memory_cap = kDefaultMemoryCap);
// ϑᵐ(u) ∩ ϑᵐ(v) = ∅ for u ≠ v in one image and m ≤ max_level.
ConditionReport check_disjoint(const RandomSubstitution& sub, int max_level = 3,
                               std::size_t memory_cap = kDefaultMemoryCap);

std::string to_string(Condition c);
std::string to_string(Verdict v);
std::string to_string(Criterion c);

}  // namespace rsentropy

#endif  // RSENTROPY_INFLATION_HPP
