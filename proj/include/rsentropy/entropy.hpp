#ifndef RSENTROPY_ENTROPY_HPP
#define RSENTROPY_ENTROPY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsentropy/inflation.hpp"
#include "rsentropy/spectral.hpp"
#include "rsentropy/substitution.hpp"

namespace rsentropy {

// Supplies q_m from an exact recurrence, for levels enumeration cannot reach.
using QProvider = std::function<QVector(int level)>;

enum class CountSource { enumeration, recurrence };
std::string to_string(CountSource s);

/*
 * Per-level q-vectors: exhaustive enumeration while it fits under the memory
 * cap, then the recurrence (if any). Once enumeration hits the cap it is not
 * retried at higher levels.
 */
class QSequence {
public:
  QSequence(const RandomSubstitution& sub, std::size_t memory_cap = kDefaultMemoryCap,
            QProvider recurrence = {});

  // Throws CapacityError when neither source can supply the level.
  std::pair<QVector, CountSource> at(int level);
  bool has_recurrence() const noexcept { return static_cast<bool>(recurrence_); }
  const std::string& capacity_note() const noexcept { return capacity_note_; }

private:
  LevelEnumerator enumerator_;
  QProvider recurrence_;
  int enumeration_limit_ = -1;  // first level known to exceed the cap
  std::string capacity_note_;
};

struct BoundsRow {
  int level = 0;
  double lower = 0.0;  // q_mᵀR / λᵐ
  double upper = 0.0;  // q_mᵀR / (λᵐ − 1)
  double gap = 0.0;
  CountSource source = CountSource::enumeration;
};

BoundsRow bounds_row(const QVector& q, const PerronData& perron,
                     CountSource source = CountSource::enumeration);

struct BoundsTable {
  std::vector<BoundsRow> rows;
  // Rows stop short of the requested level because of the memory cap.
  bool truncated = false;
  std::string warning;
};

struct BoundsOptions {
  std::size_t memory_cap = kDefaultMemoryCap;
  QProvider recurrence;
  PowerIterationOptions power;
};

// Rows for m = 1..max_level. Requires a valid primitive substitution with λ > 1.
BoundsTable bounds_table(const RandomSubstitution& sub, int max_level,
                         const BoundsOptions& options = {});
BoundsTable bounds_table(QSequence& sequence, const PerronData& perron, int max_level);

enum class Certificate { closed_form_identical, closed_form_disjoint, sandwich };
std::string to_string(Certificate c);

struct EntropyEstimate {
  double value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  Certificate certificate = Certificate::sandwich;
  // Sandwich only: level of the reported bracket and its width.
  int level_used = 1;
  double gap = 0.0;
  // Sandwich only: the bracket is narrower than the requested tolerance.
  bool converged = true;
  ConditionReport identical;
  ConditionReport disjoint;
  std::vector<std::string> warnings;
};

struct EstimateOptions {
  double tolerance = 0.01;
  int max_level = 5;
  int condition_max_level = 3;
  std::size_t memory_cap = kDefaultMemoryCap;
  QProvider recurrence;
  // Externally established disjoint set condition (e.g. from the literature).
  // Used only if enumeration does not refute it.
  std::optional<std::string> external_disjoint_certificate;
  PowerIterationOptions power;
};

/*
 * Entropy of a primitive semi-compatible random substitution.
 *
 * Identical set condition guaranteed: s = q₁ᵀR / λ.
 * Disjoint set condition guaranteed:  s = q₁ᵀR / (λ − 1).
 * Otherwise the level is increased until the bracket
 *   q_mᵀR / λᵐ ≤ s ≤ q_mᵀR / (λᵐ − 1)
 * is narrower than the tolerance or max_level is reached; the midpoint is
 * reported together with both bounds.
 */
EntropyEstimate estimate_entropy(const RandomSubstitution& sub, const EstimateOptions& options = {});
EntropyEstimate estimate_entropy(const RandomSubstitution& sub, QSequence& sequence,
                                 const PerronData& perron, const EstimateOptions& options);

// Tile lengths ψ and ϱ = (ψᵀR)⁻¹.
struct GeometricConfig {
  std::vector<double> psi;
  double rho = 0.0;
};

// Throws std::invalid_argument for non-positive or mis-sized ψ.
GeometricConfig make_geometric_config(std::vector<double> psi, const PerronData& perron);

// sᴳ = ϱ s
double geometric_entropy(const GeometricConfig& config, const EntropyEstimate& estimate);

struct PeriodicGrowthPoint {
  int level = 0;
  double value = 0.0;  // log #ϑᵐ(u) / |ϑᵐ(u)|
};

// Growth of #ϑᵐ(u) for a seed u the caller has certified as periodic.
// Counts come from the product law over per-letter cardinalities.
std::vector<PeriodicGrowthPoint> periodic_growth(const RandomSubstitution& sub, const Word& u,
                                                 int max_level, QSequence& sequence);
std::vector<PeriodicGrowthPoint> periodic_growth(const RandomSubstitution& sub, const Word& u,
                                                 int max_level,
                                                 std::size_t memory_cap = kDefaultMemoryCap);

}  // namespace rsentropy

#endif  // RSENTROPY_ENTROPY_HPP
