#include "rsentropy/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "rsentropy/errors.hpp"

namespace rsentropy {

namespace {

Json number(double v) { return round_significant(v, 12); }

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) {
    out.push_back(number(x));
  }
  return out;
}

std::string format_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Json word_or_null(const Alphabet& alphabet, const std::optional<Word>& w) {
  return w ? Json(format_word(alphabet, *w)) : Json(nullptr);
}

Json condition_json(const RandomSubstitution& sub, const ConditionReport& r, int max_level) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["criterion"] = r.criterion ? Json(to_string(*r.criterion)) : Json(nullptr);
  j["detail"] = r.detail;
  j["level"] = r.level;
  j["max_level"] = max_level;
  j["capacity_limited"] = r.capacity_limited;
  if (r.verdict == Verdict::refuted) {
    j["letter"] = std::string(1, sub.alphabet().glyph(r.letter));
    j["u"] = word_or_null(sub.alphabet(), r.u);
    j["v"] = word_or_null(sub.alphabet(), r.v);
    j["witness"] = word_or_null(sub.alphabet(), r.witness);
  }
  return j;
}

Json input_json(const RandomSubstitution& sub, const AnalysisConfig& config,
                const std::string& source) {
  Json j;
  j["source"] = source;
  Json alphabet = Json::array();
  Json rules = Json::object();
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const std::string glyph(1, sub.alphabet().glyph(i));
    alphabet.push_back(glyph);
    Json words = Json::array();
    for (const auto& w : sub.image(i)) {
      words.push_back(format_word(sub.alphabet(), w));
    }
    rules[glyph] = std::move(words);
  }
  j["alphabet"] = std::move(alphabet);
  j["rules"] = std::move(rules);
  j["options"] = {{"max_level", config.max_level},
                  {"tolerance", number(config.tolerance)},
                  {"condition_max_level", config.condition_max_level},
                  {"memory_cap", config.memory_cap}};
  return j;
}

}  // namespace

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) {
    return value;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
  return std::strtod(buf, nullptr);
}

Json validation_json(const RandomSubstitution& sub) {
  const auto report = validate(sub);
  Json j;
  j["semi_compatible"] = report.ok;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"letter", std::string(1, sub.alphabet().glyph(v.letter))},
                          {"first", word_or_null(sub.alphabet(), v.first)},
                          {"second", word_or_null(sub.alphabet(), v.second)},
                          {"reason", v.reason}});
  }
  j["violations"] = std::move(violations);
  std::optional<int> exponent;
  if (report.ok) {
    exponent = primitivity_exponent(substitution_matrix(sub));
  }
  j["primitive"] = exponent.has_value();
  j["primitivity_exponent"] = exponent ? Json(*exponent) : Json(nullptr);
  const auto k = constant_length(sub);
  j["constant_length"] = k ? Json(*k) : Json(nullptr);
  j["ok"] = report.ok && exponent.has_value();
  return j;
}

Json analyze(const RandomSubstitution& sub, const AnalysisConfig& config, const std::string& source) {
  Json report;
  report["input"] = input_json(sub, config, source);
  report["validation"] = validation_json(sub);
  if (!report["validation"]["ok"].get<bool>()) {
    require_valid_primitive(sub);
  }

  const auto m = substitution_matrix(sub);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      row.push_back(m(i, j));
    }
    matrix.push_back(std::move(row));
  }
  report["matrix"] = std::move(matrix);

  const auto perron = perron_data(m);
  report["perron"] = {{"lambda", number(perron.lambda)},
                      {"right", numbers(perron.right)},
                      {"left", numbers(perron.left)},
                      {"residual", number(perron.residual)},
                      {"iterations", perron.iterations},
                      {"tolerance", number(perron.tolerance)}};

  Json warnings = Json::array();
  QSequence sequence(sub, config.memory_cap, config.recurrence);

  const auto table = bounds_table(sequence, perron, config.max_level);
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"level", r.level},
                    {"lower", number(r.lower)},
                    {"upper", number(r.upper)},
                    {"gap", number(r.gap)},
                    {"source", to_string(r.source)}});
  }
  report["bounds"] = {{"rows", std::move(rows)},
                      {"requested_max_level", config.max_level},
                      {"truncated", table.truncated}};
  if (table.truncated) {
    warnings.push_back(table.warning);
  }

  EstimateOptions options;
  options.tolerance = config.tolerance;
  options.max_level = config.max_level;
  options.condition_max_level = config.condition_max_level;
  options.memory_cap = config.memory_cap;
  options.recurrence = config.recurrence;
  options.external_disjoint_certificate = config.external_disjoint_certificate;
  const auto est = estimate_entropy(sub, sequence, perron, options);

  report["conditions"] = {
      {"identical", condition_json(sub, est.identical, config.condition_max_level)},
      {"disjoint", condition_json(sub, est.disjoint, config.condition_max_level)}};
  report["entropy"] = {{"value", number(est.value)},
                       {"lower_bound", number(est.lower_bound)},
                       {"upper_bound", number(est.upper_bound)},
                       {"certificate", to_string(est.certificate)},
                       {"level_used", est.level_used},
                       {"gap", number(est.gap)},
                       {"converged", est.converged},
                       {"tolerance", number(config.tolerance)}};
  for (const auto& w : est.warnings) {
    warnings.push_back(w);
  }

  if (config.psi) {
    const auto cfg = make_geometric_config(*config.psi, perron);
    report["geometric"] = {{"psi", numbers(cfg.psi)},
                           {"rho", number(cfg.rho)},
                           {"value", number(geometric_entropy(cfg, est))}};
  } else {
    report["geometric"] = nullptr;
  }

  if (config.language_max_length) {
    LanguageOptions lopts;
    lopts.memory_cap = config.memory_cap;
    Json lrows = Json::array();
    try {
      for (const auto& r : complexity_profile(sub, *config.language_max_length, lopts)) {
        lrows.push_back({{"length", r.length},
                         {"count", r.count},
                         {"entropy_quotient", number(r.entropy_quotient)},
                         {"frequency_deviation", number(r.frequency_deviation)},
                         {"converged", r.converged}});
        if (!r.converged) {
          warnings.push_back("language slice of length " + std::to_string(r.length) +
                             " did not stabilise");
        }
      }
    } catch (const CapacityError& e) {
      warnings.push_back(std::string("language profile truncated: ") + e.what());
    }
    report["language"] = {{"max_length", *config.language_max_length}, {"rows", std::move(lrows)}};
  } else {
    report["language"] = nullptr;
  }

  report["warnings"] = std::move(warnings);
  return report;
}

Json analyze_catalogue(const CatalogueEntry& entry, const AnalysisConfig& config) {
  AnalysisConfig cfg = config;
  cfg.recurrence = entry.log_counts;
  cfg.external_disjoint_certificate = entry.external_disjoint_certificate;
  Json report = analyze(entry.substitution, cfg, "catalogue:" + entry.name);

  Json cat;
  cat["name"] = entry.name;
  cat["description"] = entry.description;
  cat["known_entropy"] = entry.known_entropy ? number(*entry.known_entropy) : Json(nullptr);
  cat["known_entropy_source"] = entry.known_entropy_source;
  cat["expected_certificate"] =
      entry.expected_certificate ? Json(to_string(*entry.expected_certificate)) : Json(nullptr);
  if (entry.known_entropy) {
    bool inside = true;
    const double slack = entry.known_entropy_tolerance + 1e-9;
    for (const auto& row : report["bounds"]["rows"]) {
      const double lo = row["lower"].get<double>();
      const double hi = row["upper"].get<double>();
      inside = inside && lo - slack <= *entry.known_entropy && *entry.known_entropy <= hi + slack;
    }
    cat["known_entropy_within_bounds"] = inside;
  }
  report["input"]["catalogue"] = std::move(cat);
  return report;
}

Json language_json(const RandomSubstitution& sub, const LanguageSlice& slice) {
  Json words = Json::array();
  for (const auto& w : slice.words) {
    words.push_back(format_word(sub.alphabet(), w));
  }
  return {{"length", slice.length},
          {"count", slice.words.size()},
          {"words", std::move(words)},
          {"levels_used", slice.levels_used},
          {"converged", slice.converged},
          {"stability_window", slice.stability_window}};
}

std::string dump_json(const Json& report) { return report.dump(2) + "\n"; }

std::string dump_csv(const Json& report) {
  std::ostringstream out;
  out << "level,lower,upper,gap,source\n";
  for (const auto& row : report.at("bounds").at("rows")) {
    out << row["level"].get<int>() << ',' << format_sig(row["lower"].get<double>(), 12) << ','
        << format_sig(row["upper"].get<double>(), 12) << ','
        << format_sig(row["gap"].get<double>(), 12) << ','
        << row["source"].get<std::string>() << '\n';
  }
  return out.str();
}

std::string dump_text(const Json& report) {
  std::ostringstream out;
  const auto& input = report.at("input");
  out << "source: " << input.at("source").get<std::string>() << '\n';
  const auto& perron = report.at("perron");
  out << "lambda: " << format_sig(perron.at("lambda").get<double>(), 6) << "  R: (";
  bool first = true;
  for (const auto& x : perron.at("right")) {
    out << (first ? "" : ", ") << format_sig(x.get<double>(), 6);
    first = false;
  }
  out << ")\n";
  for (const char* key : {"identical", "disjoint"}) {
    const auto& c = report.at("conditions").at(key);
    out << key << " set condition: " << c.at("verdict").get<std::string>();
    if (!c.at("criterion").is_null()) {
      out << " (" << c.at("criterion").get<std::string>() << ")";
    }
    if (c.contains("witness")) {
      out << " at level " << c.at("level").get<int>() << ", u=" << c.at("u").get<std::string>()
          << " v=" << c.at("v").get<std::string>() << " witness=" << c.at("witness").get<std::string>();
    }
    out << '\n';
  }
  out << "bounds:\n";
  for (const auto& row : report.at("bounds").at("rows")) {
    out << "  m=" << row["level"].get<int>() << "  lower=" << format_sig(row["lower"].get<double>(), 6)
        << "  upper=" << format_sig(row["upper"].get<double>(), 6) << "  ("
        << row["source"].get<std::string>() << ")\n";
  }
  const auto& e = report.at("entropy");
  out << "entropy: " << format_sig(e.at("value").get<double>(), 6) << " ["
      << e.at("certificate").get<std::string>() << "]";
  if (e.at("certificate") == "sandwich") {
    out << " in [" << format_sig(e.at("lower_bound").get<double>(), 6) << ", "
        << format_sig(e.at("upper_bound").get<double>(), 6) << "] at level "
        << e.at("level_used").get<int>();
  }
  out << '\n';
  if (!report.at("geometric").is_null()) {
    out << "geometric entropy: " << format_sig(report["geometric"]["value"].get<double>(), 6) << '\n';
  }
  if (!report.at("language").is_null()) {
    out << "complexity:\n";
    for (const auto& row : report["language"]["rows"]) {
      out << "  l=" << row["length"].get<std::size_t>() << "  #L=" << row["count"].get<std::size_t>()
          << "  log(#L)/l=" << format_sig(row["entropy_quotient"].get<double>(), 6) << '\n';
    }
  }
  if (input.contains("catalogue") && !input["catalogue"]["known_entropy"].is_null()) {
    out << "known entropy: " << format_sig(input["catalogue"]["known_entropy"].get<double>(), 6)
        << " (" << input["catalogue"]["known_entropy_source"].get<std::string>() << ")\n";
  }
  for (const auto& w : report.at("warnings")) {
    out << "warning: " << w.get<std::string>() << '\n';
  }
  return out.str();
}

}  // namespace rsentropy
