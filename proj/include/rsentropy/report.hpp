#ifndef RSENTROPY_REPORT_HPP
#define RSENTROPY_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsentropy/catalogue.hpp"
#include "rsentropy/entropy.hpp"
#include "rsentropy/language.hpp"
#include "rsentropy/substitution.hpp"

namespace rsentropy {

using Json = nlohmann::json;

// Rounds to `digits` significant decimal digits; reports store only rounded values.
double round_significant(double value, int digits = 12);

struct AnalysisConfig {
  int max_level = 5;
  double tolerance = 0.01;
  int condition_max_level = 3;
  std::size_t memory_cap = kDefaultMemoryCap;
  std::optional<std::vector<double>> psi;
  // Adds a complexity profile for lengths 1..language_max_length.
  std::optional<std::size_t> language_max_length;
  QProvider recurrence;
  std::optional<std::string> external_disjoint_certificate;
};

Json validation_json(const RandomSubstitution& sub);

/*
 * Full analysis report with top-level keys input, validation, matrix, perron,
 * conditions, bounds, entropy, geometric, language, warnings. Numeric values are
 * rounded to 12 significant digits; the document contains no timestamps.
 *
 * Throws ValidationError when the substitution is not semi-compatible,
 * not primitive or has λ ≤ 1.
 */
Json analyze(const RandomSubstitution& sub, const AnalysisConfig& config, const std::string& source);

// Catalogue report: analyze() plus the entry's known value and a bracket check.
Json analyze_catalogue(const CatalogueEntry& entry, const AnalysisConfig& config);

Json language_json(const RandomSubstitution& sub, const LanguageSlice& slice);

// Canonical serialisations.
std::string dump_json(const Json& report);
std::string dump_csv(const Json& report);
std::string dump_text(const Json& report);

}  // namespace rsentropy

#endif  // RSENTROPY_REPORT_HPP
