#include "rsentropy/catalogue.hpp"

#include <cmath>
#include <stdexcept>

namespace rsentropy {

namespace {

const double kLog2 = std::log(2.0);
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<std::uint64_t> fibonacci_upto(int count) {
  std::vector<std::uint64_t> f{0, 1};
  while (static_cast<int>(f.size()) < count) {
    f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  }
  return f;
}

CatalogueEntry make_entry(std::string name, std::string description, RandomSubstitution sub) {
  CatalogueEntry e{std::move(name), std::move(description), std::move(sub), std::nullopt, 0.0, {},
                   {},              {},                     std::nullopt,   std::nullopt};
  return e;
}

void require_level(int m) {
  if (m < 1) {
    throw std::invalid_argument("level must be at least 1");
  }
}

CatalogueEntry random_fibonacci() {
  auto e = make_entry("random-fibonacci", "random Fibonacci: a -> ab | ba, b -> a",
                      make_substitution({{'a', {"ab", "ba"}}, {'b', {"a"}}}));
  e.known_entropy = 0.444399;
  e.known_entropy_tolerance = 5e-7;
  e.known_entropy_source = "sum_{m>=2} log(m)/tau^(m+2), printed to 6 decimals";
  e.exact_counts = [](int m) {
    require_level(m);
    CardinalityVector c{m, {rf_cardinality(m), m == 1 ? BigInt(1) : rf_cardinality(m - 1)}};
    return c;
  };
  e.log_counts = [](int m) {
    require_level(m);
    return QVector{m, {rf_log_cardinality(m), m == 1 ? 0.0 : rf_log_cardinality(m - 1)}};
  };
  e.expected_certificate = Certificate::sandwich;
  return e;
}

CatalogueEntry random_thue_morse() {
  auto e = make_entry("random-thue-morse", "random Thue-Morse: a -> ab | ba, b -> ba",
                      make_substitution({{'a', {"ab", "ba"}}, {'b', {"ba"}}}));
  e.known_entropy = 0.253917;
  e.known_entropy_tolerance = 5e-7;
  e.known_entropy_source = "numerical value from the literature, printed to 6 decimals";
  e.exact_counts = [](int m) {
    auto [a, b] = rtm_cardinalities(m);
    return CardinalityVector{m, {std::move(a), std::move(b)}};
  };
  e.log_counts = [](int m) {
    const auto [a, b] = rtm_log_cardinalities(m);
    return QVector{m, {a, b}};
  };
  e.expected_certificate = Certificate::sandwich;
  return e;
}

CatalogueEntry random_period_doubling() {
  auto e = make_entry("random-period-doubling", "random period doubling: a -> ab | ba, b -> aa",
                      make_substitution({{'a', {"ab", "ba"}}, {'b', {"aa"}}}));
  e.known_entropy = 2.0 / 3.0 * kLog2;
  e.known_entropy_source = "(2/3) log 2";
  e.expected_certificate = Certificate::closed_form_disjoint;
  return e;
}

CatalogueEntry random_fibonacci_squared() {
  auto e = make_entry("random-fibonacci-squared",
                      "random square of Fibonacci: a -> baa, b -> ab | ba",
                      make_substitution({{'a', {"baa"}}, {'b', {"ab", "ba"}}}));
  e.known_entropy = kLog2 / std::pow(kGolden, 3);
  e.known_entropy_source = "log 2 / tau^3";
  e.expected_certificate = Certificate::closed_form_disjoint;
  return e;
}

CatalogueEntry random_paper_folding() {
  auto e = make_entry(
      "random-paper-folding",
      "random paper folding: a -> ab | ba, b -> cb | bc, c -> ad | da, d -> cd | dc",
      make_substitution(
          {{'a', {"ab", "ba"}}, {'b', {"cb", "bc"}}, {'c', {"ad", "da"}}, {'d', {"cd", "dc"}}}));
  e.known_entropy = kLog2;
  e.known_entropy_source = "log 2";
  e.expected_certificate = Certificate::closed_form_disjoint;
  return e;
}

CatalogueEntry equal_images() {
  auto e = make_entry("equal-images", "equal images: a -> ab | ba, b -> ab | ba",
                      make_substitution({{'a', {"ab", "ba"}}, {'b', {"ab", "ba"}}}));
  e.known_entropy = 0.5 * kLog2;
  e.known_entropy_source = "(1/2) log 2";
  e.expected_certificate = Certificate::closed_form_identical;
  return e;
}

CatalogueEntry rust_ex19() {
  auto e = make_entry("rust-ex19", "a -> abbabba | ababbba, b -> a",
                      make_substitution({{'a', {"abbabba", "ababbba"}}, {'b', {"a"}}}));
  e.known_entropy = kLog2 / 6.0;
  e.known_entropy_source = "(1/6) log 2";
  e.expected_certificate = Certificate::closed_form_disjoint;
  e.external_disjoint_certificate =
      "global unique recognisability implies the disjoint set condition (literature)";
  return e;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{
      "random-fibonacci",     "random-thue-morse", "random-period-doubling",
      "random-fibonacci-squared", "random-paper-folding", "equal-images",
      "rust-ex19",
  };
  return names;
}

CatalogueEntry get_example(std::string_view name) {
  if (name == "random-fibonacci") return random_fibonacci();
  if (name == "random-thue-morse") return random_thue_morse();
  if (name == "random-period-doubling") return random_period_doubling();
  if (name == "random-fibonacci-squared") return random_fibonacci_squared();
  if (name == "random-paper-folding") return random_paper_folding();
  if (name == "equal-images") return equal_images();
  if (name == "rust-ex19") return rust_ex19();
  throw std::invalid_argument("unknown catalogue entry '" + std::string(name) + "'");
}

BigInt rf_cardinality(int m) {
  require_level(m);
  const auto f = fibonacci_upto(m + 1);
  BigInt count = m + 1;
  for (int j = 2; j <= m + 1; ++j) {
    const auto base = static_cast<unsigned>(m + 2 - j);
    count *= boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(f[j - 2]));
  }
  return count;
}

double rf_log_cardinality(int m) {
  require_level(m);
  const auto f = fibonacci_upto(m + 1);
  double total = std::log(static_cast<double>(m + 1));
  for (int j = 2; j <= m + 1; ++j) {
    total += static_cast<double>(f[j - 2]) * std::log(static_cast<double>(m + 2 - j));
  }
  return total;
}

std::pair<BigInt, BigInt> rtm_cardinalities(int m) {
  require_level(m);
  BigInt a = 2;
  BigInt b = 1;
  for (int level = 1; level < m; ++level) {
    BigInt next_a = 2 * a * b - b * b;
    BigInt next_b = a * b;
    a = std::move(next_a);
    b = std::move(next_b);
  }
  return {a, b};
}

std::pair<double, double> rtm_log_cardinalities(int m) {
  require_level(m);
  double la = kLog2;
  double lb = 0.0;
  for (int level = 1; level < m; ++level) {
    // 2ab − b² = ab(2 − b/a), with b ≤ a.
    const double next_a = la + lb + std::log(2.0 - std::exp(lb - la));
    lb = la + lb;
    la = next_a;
  }
  return {la, lb};
}

}  // namespace rsentropy
