#ifndef RSENTROPY_CATALOGUE_HPP
#define RSENTROPY_CATALOGUE_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsentropy/bigint.hpp"
#include "rsentropy/entropy.hpp"
#include "rsentropy/substitution.hpp"

namespace rsentropy {

// A named random substitution with its entropy as known from the literature.
struct CatalogueEntry {
  std::string name;
  std::string description;
  RandomSubstitution substitution;
  std::optional<double> known_entropy;
  // Half a unit in the last printed digit for rounded literature values; 0 for closed forms.
  double known_entropy_tolerance = 0.0;
  std::string known_entropy_source;
  // Exact per-letter cardinalities #ϑᵐ(a_i); empty when no recurrence is known.
  std::function<CardinalityVector(int)> exact_counts;
  // Log-domain version of the same recurrence, usable for large m.
  QProvider log_counts;
  std::optional<Certificate> expected_certificate;
  std::optional<std::string> external_disjoint_certificate;
};

const std::vector<std::string>& example_names();

// Throws std::invalid_argument for unknown names.
CatalogueEntry get_example(std::string_view name);

// Random Fibonacci a ↦ {ab, ba}, b ↦ {a}:
//   #ϑᵐ(a) = (m+1) ∏_{j=2}^{m+1} (m+2−j)^{f_{j−2}},  f₀ = 0, f₁ = 1,
//   #ϑ^{m+1}(b) = #ϑᵐ(a).
BigInt rf_cardinality(int m);
double rf_log_cardinality(int m);

// Random Thue–Morse a ↦ {ab, ba}, b ↦ {ba}, from (#ϑ(a), #ϑ(b)) = (2, 1):
//   #ϑ^{m+1}(a) = 2 #ϑᵐ(a) #ϑᵐ(b) − (#ϑᵐ(b))²
//   #ϑ^{m+1}(b) = #ϑᵐ(a) #ϑᵐ(b)
std::pair<BigInt, BigInt> rtm_cardinalities(int m);
std::pair<double, double> rtm_log_cardinalities(int m);

}  // namespace rsentropy

#endif  // RSENTROPY_CATALOGUE_HPP
