// Command-line front end: validate, analyze, language, catalogue.
//
// Exit codes: 0 success, 1 invalid substitution, 2 usage or capacity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rsentropy/catalogue.hpp"
#include "rsentropy/errors.hpp"
#include "rsentropy/report.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

rsentropy::RandomSubstitution load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  return rsentropy::parse_spec(in);
}

std::vector<double> parse_psi(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("bad --psi entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

void emit(const rsentropy::Json& report, const std::string& format) {
  if (format == "csv") {
    std::cout << rsentropy::dump_csv(report);
  } else if (format == "text") {
    std::cout << rsentropy::dump_text(report);
  } else {
    std::cout << rsentropy::dump_json(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological entropy of primitive semi-compatible random substitutions"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "json";
  std::string psi_text;
  std::string name;
  rsentropy::AnalysisConfig config;
  std::size_t length = 0;
  int m_cap = 40;
  std::size_t language_max = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check semi-compatibility and primitivity");
  validate_cmd->add_option("file", file, "substitution file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "entropy bounds and estimate");
  analyze_cmd->add_option("file", file, "substitution file")->required();
  analyze_cmd->add_option("--max-level", config.max_level, "highest inflation level")
      ->check(CLI::Range(1, 1000));
  analyze_cmd->add_option("--tol", config.tolerance, "target bracket width")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--psi", psi_text, "tile lengths, comma separated");
  analyze_cmd->add_option("--language", language_max, "complexity profile up to this length");
  analyze_cmd->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  auto* language_cmd = app.add_subcommand("language", "legal words of one length");
  language_cmd->add_option("file", file, "substitution file")->required();
  language_cmd->add_option("--length", length, "word length")->required()->check(CLI::Range(1, 64));
  language_cmd->add_option("--m-cap", m_cap, "highest inflation level")->check(CLI::Range(1, 1000));

  auto* catalogue_cmd = app.add_subcommand("catalogue", "analyse a built-in example");
  catalogue_cmd->add_option("name", name, "example name")
      ->required()
      ->check(CLI::IsMember(rsentropy::example_names()));
  catalogue_cmd->add_option("--max-level", config.max_level, "highest inflation level")
      ->check(CLI::Range(1, 1000));
  catalogue_cmd->add_option("--tol", config.tolerance, "target bracket width")
      ->check(CLI::PositiveNumber);
  catalogue_cmd->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate_cmd) {
      const auto sub = load(file);
      const auto report = rsentropy::validation_json(sub);
      std::cout << rsentropy::dump_json(report);
      if (!report["ok"].get<bool>()) {
        for (const auto& v : report["violations"]) {
          std::cerr << "letter " << v["letter"].get<std::string>() << ": "
                    << v["first"].get<std::string>() << " vs " << v["second"].get<std::string>()
                    << ": " << v["reason"].get<std::string>() << '\n';
        }
        if (report["violations"].empty()) {
          std::cerr << "substitution matrix is not primitive\n";
        }
        return kExitInvalid;
      }
      return 0;
    }
    if (*analyze_cmd) {
      const auto sub = load(file);
      if (!psi_text.empty()) {
        config.psi = parse_psi(psi_text);
      }
      if (language_max > 0) {
        config.language_max_length = language_max;
      }
      emit(rsentropy::analyze(sub, config, file), format);
      return 0;
    }
    if (*language_cmd) {
      const auto sub = load(file);
      rsentropy::LanguageOptions options;
      options.max_level = m_cap;
      const auto slice = rsentropy::legal_words(sub, length, options);
      std::cout << rsentropy::dump_json(rsentropy::language_json(sub, slice));
      if (!slice.converged) {
        std::cerr << "warning: language slice did not stabilise within " << m_cap << " levels\n";
      }
      return 0;
    }
    if (*catalogue_cmd) {
      emit(rsentropy::analyze_catalogue(rsentropy::get_example(name), config), format);
      return 0;
    }
  } catch (const rsentropy::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rsentropy::ValidationError& e) {
    std::cerr << "invalid substitution: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rsentropy::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
