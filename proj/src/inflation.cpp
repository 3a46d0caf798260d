#include "rsentropy/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "rsentropy/errors.hpp"

namespace rsentropy {

namespace {

// Calls f(buffer) for every concatenation x₁⋯x_k with x_j ∈ *blocks[j].
// Returns false as soon as f returns false.
template <typename F>
bool for_each_concatenation(const std::vector<const WordSet*>& blocks, std::string& buffer,
                            std::size_t depth, F&& f) {
  if (depth == blocks.size()) {
    return f(static_cast<const std::string&>(buffer));
  }
  const std::size_t mark = buffer.size();
  for (const auto& w : *blocks[depth]) {
    buffer.resize(mark);
    buffer += w.indices();
    if (!for_each_concatenation(blocks, buffer, depth + 1, f)) {
      buffer.resize(mark);
      return false;
    }
  }
  buffer.resize(mark);
  return true;
}

std::vector<const WordSet*> blocks_for(const std::vector<WordSet>& per_letter, const Word& u) {
  std::vector<const WordSet*> blocks;
  blocks.reserve(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) {
    blocks.push_back(&per_letter.at(u[k]));
  }
  return blocks;
}

WordSet to_word_set(std::unordered_set<std::string>&& distinct) {
  std::vector<Word> words;
  words.reserve(distinct.size());
  for (auto it = distinct.begin(); it != distinct.end();) {
    auto node = distinct.extract(it++);
    words.emplace_back(std::move(node.value()));
  }
  return WordSet(std::move(words));
}

double log_product_size(const std::vector<const WordSet*>& blocks) {
  double total = 0.0;
  for (const auto* b : blocks) {
    total += std::log(static_cast<double>(b->size()));
  }
  return total;
}

/*
 * Depth-first search over the concatenations of `left` (block sets of uniform
 * length), checked against the block structure of `right` as the prefix grows.
 *
 * mode == kCommon:  find a word in both products.
 * mode == kOutside: find a word of the left product missing from the right product.
 */
enum class SearchMode { kCommon, kOutside };

class AlignmentSearch {
public:
  AlignmentSearch(std::vector<const WordSet*> left, std::vector<const WordSet*> right,
                  SearchMode mode, std::size_t work_budget)
      : left_(std::move(left)), right_(std::move(right)), mode_(mode), budget_(work_budget) {
    std::size_t offset = 0;
    for (const auto* b : right_) {
      right_offsets_.push_back(offset);
      offset += b->common_length().value();
    }
    right_offsets_.push_back(offset);
  }

  // nullopt: nothing found. Throws CapacityError if the work budget runs out.
  std::optional<std::string> run() {
    buffer_.clear();
    if (search(0, 0)) {
      return buffer_;
    }
    return std::nullopt;
  }

private:
  // Whether the prefix buffer_[0, length) is consistent with the right product,
  // given that right blocks before `first_open` were already verified.
  bool consistent(std::size_t length, std::size_t& first_open) const {
    std::string_view w(buffer_);
    while (first_open < right_.size() && right_offsets_[first_open + 1] <= length) {
      const std::size_t a = right_offsets_[first_open];
      if (!right_[first_open]->contains_indices(w.substr(a, right_offsets_[first_open + 1] - a))) {
        return false;
      }
      ++first_open;
    }
    if (first_open < right_.size() && right_offsets_[first_open] < length) {
      const std::size_t a = right_offsets_[first_open];
      return right_[first_open]->has_member_with_prefix(w.substr(a, length - a));
    }
    return true;
  }

  void complete_arbitrarily(std::size_t depth) {
    for (std::size_t d = depth; d < left_.size(); ++d) {
      buffer_ += (*left_[d])[0].indices();
    }
  }

  bool search(std::size_t depth, std::size_t first_open) {
    if (depth == left_.size()) {
      // Every right block has been verified.
      return mode_ == SearchMode::kCommon;
    }
    const std::size_t mark = buffer_.size();
    for (const auto& x : *left_[depth]) {
      buffer_.resize(mark);
      buffer_ += x.indices();
      spent_ += x.size();
      if (spent_ > budget_) {
        throw CapacityError(budget_, 0, "alignment search exceeded its work budget");
      }
      std::size_t open = first_open;
      const bool ok = consistent(buffer_.size(), open);
      if (mode_ == SearchMode::kOutside && !ok) {
        complete_arbitrarily(depth + 1);
        return true;
      }
      if (ok && search(depth + 1, open)) {
        return true;
      }
    }
    buffer_.resize(mark);
    return false;
  }

  std::vector<const WordSet*> left_;
  std::vector<const WordSet*> right_;
  std::vector<std::size_t> right_offsets_;
  SearchMode mode_;
  std::size_t budget_;
  std::size_t spent_ = 0;
  std::string buffer_;
};

bool all_singletons(const RandomSubstitution& sub) { return sub.is_deterministic(); }

ConditionReport guaranteed(Condition c, Criterion criterion, std::string detail) {
  ConditionReport r;
  r.condition = c;
  r.verdict = Verdict::guaranteed;
  r.criterion = criterion;
  r.detail = std::move(detail);
  return r;
}

// If the disjoint condition fails, some image word is a prefix of another
// image word and some image word is a suffix of another (across all letters).
bool has_affix_pair(const RandomSubstitution& sub, bool prefix) {
  const std::size_t n = sub.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& ua : sub.image(a)) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& ub : sub.image(b)) {
          if (a == b && ua == ub) {
            continue;
          }
          if (prefix ? ua.is_prefix_of(ub) : ua.is_suffix_of(ub)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

bool letter_images_pairwise_disjoint(const RandomSubstitution& sub) {
  for (std::size_t a = 0; a < sub.size(); ++a) {
    for (std::size_t b = a + 1; b < sub.size(); ++b) {
      for (const auto& w : sub.image(a)) {
        if (sub.image(b).contains(w)) {
          return false;
        }
      }
    }
  }
  return true;
}

// Shared driver: walks levels 1..max_level and every pair u < v of each image.
ConditionReport search_pairs(const RandomSubstitution& sub, Condition condition, int max_level,
                             std::size_t memory_cap) {
  ConditionReport report;
  report.condition = condition;
  report.verdict = Verdict::unverified;

  LevelEnumerator enumerator(sub, memory_cap);
  for (int m = 1; m <= max_level; ++m) {
    const LevelSets* sets = nullptr;
    try {
      sets = &enumerator.level(m);
    } catch (const CapacityError&) {
      if (m == 1) {
        throw;
      }
      report.capacity_limited = true;
      return report;
    }
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const auto& image = sub.image(i);
      for (std::size_t p = 0; p < image.size(); ++p) {
        for (std::size_t q = p + 1; q < image.size(); ++q) {
          const Word& u = image[p];
          const Word& v = image[q];
          const SearchMode mode = condition == Condition::disjoint ? SearchMode::kCommon
                                                                   : SearchMode::kOutside;
          // Product law: ϑᵐ(u) and ϑᵐ(v) have equal size, so one inclusion decides equality.
          std::optional<std::string> found;
          try {
            found = AlignmentSearch(blocks_for(sets->per_letter, u),
                                    blocks_for(sets->per_letter, v), mode, 20 * memory_cap)
                        .run();
          } catch (const CapacityError&) {
            report.capacity_limited = true;
            report.level = m - 1;
            return report;
          }
          if (found) {
            report.verdict = Verdict::refuted;
            report.level = m;
            report.letter = i;
            report.u = u;
            report.v = v;
            report.witness = Word(std::move(*found));
            return report;
          }
        }
      }
    }
    report.level = m;
  }
  return report;
}

}  // namespace

std::size_t LevelSets::total_letters() const noexcept {
  std::size_t total = 0;
  for (const auto& s : per_letter) {
    total += s.total_letters();
  }
  return total;
}

QVector log_counts(const CardinalityVector& counts) {
  QVector q;
  q.level = counts.level;
  q.entries.reserve(counts.counts.size());
  for (const auto& c : counts.counts) {
    q.entries.push_back(log_of(c));
  }
  return q;
}

WordSet inflate_set(const RandomSubstitution& sub, const WordSet& words, std::size_t memory_cap) {
  std::unordered_set<std::string> distinct;
  std::size_t stored = 0;
  std::string buffer;
  for (const auto& u : words) {
    const auto blocks = blocks_for(sub.images(), u);
    for_each_concatenation(blocks, buffer, 0, [&](const std::string& w) {
      if (distinct.insert(w).second) {
        stored += w.size();
        if (stored > memory_cap) {
          throw CapacityError(memory_cap, 0,
                              "inflated set exceeds the memory cap of " +
                                  std::to_string(memory_cap) + " letters");
        }
      }
      return true;
    });
  }
  return to_word_set(std::move(distinct));
}

LevelEnumerator::LevelEnumerator(RandomSubstitution sub, std::size_t memory_cap)
    : sub_(std::move(sub)), memory_cap_(memory_cap) {
  if (!validate(sub_).ok) {
    throw ValidationError("level enumeration requires a semi-compatible substitution");
  }
}

const LevelSets& LevelEnumerator::level(int m) {
  if (m < 1) {
    throw std::invalid_argument("level must be at least 1");
  }
  auto fail = [&](int attempted) {
    exhausted_ = true;
    throw CapacityError(memory_cap_, deepest_level(),
                        "level " + std::to_string(attempted) + " exceeds the memory cap of " +
                            std::to_string(memory_cap_) + " letters; largest feasible level is " +
                            std::to_string(deepest_level()));
  };

  if (levels_.empty()) {
    LevelSets first{1, sub_.images()};
    if (first.total_letters() > memory_cap_) {
      fail(1);
    }
    levels_.push_back(std::move(first));
  }
  while (deepest_level() < m) {
    if (exhausted_) {
      fail(deepest_level() + 1);
    }
    const LevelSets& prev = levels_.back();
    const int next_level = prev.level + 1;

    // Product law gives a lower bound on the next level's size; refuse early.
    double projected = 0.0;
    for (std::size_t i = 0; i < sub_.size(); ++i) {
      const Word& u = sub_.image(i)[0];
      const auto blocks = blocks_for(prev.per_letter, u);
      std::size_t len = 0;
      for (const auto* b : blocks) {
        len += b->common_length().value();
      }
      projected += std::exp(log_product_size(blocks)) * static_cast<double>(len);
    }
    if (projected > static_cast<double>(memory_cap_)) {
      fail(next_level);
    }

    LevelSets next;
    next.level = next_level;
    next.per_letter.reserve(sub_.size());
    std::size_t stored = 0;
    std::string buffer;
    for (std::size_t i = 0; i < sub_.size(); ++i) {
      std::unordered_set<std::string> distinct;
      for (const auto& u : sub_.image(i)) {
        const auto blocks = blocks_for(prev.per_letter, u);
        for_each_concatenation(blocks, buffer, 0, [&](const std::string& w) {
          if (distinct.insert(w).second) {
            stored += w.size();
            if (stored > memory_cap_) {
              fail(next_level);
            }
          }
          return true;
        });
      }
      next.per_letter.push_back(to_word_set(std::move(distinct)));
    }
    levels_.push_back(std::move(next));
  }
  return levels_[static_cast<std::size_t>(m - 1)];
}

LevelSets level_sets(const RandomSubstitution& sub, int m, std::size_t memory_cap) {
  LevelEnumerator enumerator(sub, memory_cap);
  return enumerator.level(m);
}

LevelCounts q_vector(const LevelSets& sets) {
  LevelCounts out;
  out.cardinalities.level = sets.level;
  for (const auto& s : sets.per_letter) {
    out.cardinalities.counts.emplace_back(s.size());
  }
  out.q = log_counts(out.cardinalities);
  return out;
}

LevelCounts q_vector(const RandomSubstitution& sub, int m, std::size_t memory_cap) {
  return q_vector(level_sets(sub, m, memory_cap));
}

BigInt product_law_count(const CardinalityVector& per_letter, const AbelianVector& phi) {
  if (phi.size() != per_letter.counts.size()) {
    throw std::invalid_argument("dimension mismatch in product law");
  }
  BigInt total = 1;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    total *= boost::multiprecision::pow(per_letter.counts[j], static_cast<unsigned>(phi[j]));
  }
  return total;
}

WordSet inflate_word(const LevelSets& sets, const Word& u, std::size_t memory_cap) {
  const auto blocks = blocks_for(sets.per_letter, u);
  std::unordered_set<std::string> distinct;
  std::size_t stored = 0;
  std::string buffer;
  for_each_concatenation(blocks, buffer, 0, [&](const std::string& w) {
    if (distinct.insert(w).second) {
      stored += w.size();
      if (stored > memory_cap) {
        throw CapacityError(memory_cap, 0, "inflated word set exceeds the memory cap");
      }
    }
    return true;
  });
  return to_word_set(std::move(distinct));
}

RandomSubstitution substitution_power(const RandomSubstitution& sub, int k,
                                      std::size_t memory_cap) {
  auto sets = level_sets(sub, k, memory_cap);
  return RandomSubstitution(sub.alphabet(), std::move(sets.per_letter));
}

ConditionReport check_identical(const RandomSubstitution& sub, int max_level,
                                std::size_t memory_cap) {
  if (all_singletons(sub)) {
    return guaranteed(Condition::identical, Criterion::singleton_images,
                      "every image is a single word");
  }
  const auto& first = sub.image(0);
  if (std::all_of(sub.images().begin(), sub.images().end(),
                  [&](const WordSet& s) { return s == first; })) {
    return guaranteed(Condition::identical, Criterion::equal_images,
                      "all letters have the same image set");
  }
  return search_pairs(sub, Condition::identical, max_level, memory_cap);
}

ConditionReport check_disjoint(const RandomSubstitution& sub, int max_level,
                               std::size_t memory_cap) {
  if (all_singletons(sub)) {
    return guaranteed(Condition::disjoint, Criterion::singleton_images,
                      "every image is a single word");
  }
  // The more specific criterion first, so reports name it.
  if (constant_length(sub) && letter_images_pairwise_disjoint(sub)) {
    return guaranteed(Condition::disjoint, Criterion::constant_length,
                      "constant length with pairwise disjoint letter images");
  }
  if (!has_affix_pair(sub, true)) {
    return guaranteed(Condition::disjoint, Criterion::prefix_suffix,
                      "no image word is a prefix of another image word");
  }
  if (!has_affix_pair(sub, false)) {
    return guaranteed(Condition::disjoint, Criterion::prefix_suffix,
                      "no image word is a suffix of another image word");
  }
  return search_pairs(sub, Condition::disjoint, max_level, memory_cap);
}

std::string to_string(Condition c) {
  return c == Condition::identical ? "identical" : "disjoint";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::guaranteed:
      return "guaranteed";
    case Verdict::refuted:
      return "refuted";
    case Verdict::unverified:
      return "unverified";
  }
  return "unknown";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::equal_images:
      return "equal-images";
    case Criterion::singleton_images:
      return "singleton-images";
    case Criterion::prefix_suffix:
      return "prefix-suffix";
    case Criterion::constant_length:
      return "constant-length";
    case Criterion::external:
      return "external";
  }
  return "unknown";
}

}  // namespace rsentropy
