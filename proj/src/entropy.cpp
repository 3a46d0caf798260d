#include "rsentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rsentropy/errors.hpp"

namespace rsentropy {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

ConditionReport capacity_unverified(Condition c) {
  ConditionReport r;
  r.condition = c;
  r.verdict = Verdict::unverified;
  r.capacity_limited = true;
  return r;
}

}  // namespace

std::string to_string(CountSource s) {
  return s == CountSource::enumeration ? "enumeration" : "recurrence";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::closed_form_identical:
      return "closed-form-identical";
    case Certificate::closed_form_disjoint:
      return "closed-form-disjoint";
    case Certificate::sandwich:
      return "sandwich";
  }
  return "unknown";
}

QSequence::QSequence(const RandomSubstitution& sub, std::size_t memory_cap, QProvider recurrence)
    : enumerator_(sub, memory_cap), recurrence_(std::move(recurrence)) {}

std::pair<QVector, CountSource> QSequence::at(int level) {
  if (enumeration_limit_ < 0 || level < enumeration_limit_) {
    try {
      return {q_vector(enumerator_.level(level)).q, CountSource::enumeration};
    } catch (const CapacityError& e) {
      enumeration_limit_ = e.largest_feasible_level() + 1;
      capacity_note_ = e.what();
      if (!recurrence_) {
        throw;
      }
    }
  }
  if (!recurrence_) {
    throw CapacityError(enumerator_.memory_cap(), enumeration_limit_ - 1, capacity_note_);
  }
  return {recurrence_(level), CountSource::recurrence};
}

BoundsRow bounds_row(const QVector& q, const PerronData& perron, CountSource source) {
  const double qr = dot(q.entries, perron.right);
  const double lambda_m = std::pow(perron.lambda, q.level);
  BoundsRow row;
  row.level = q.level;
  row.lower = qr / lambda_m;
  row.upper = qr / (lambda_m - 1.0);
  row.gap = row.upper - row.lower;
  row.source = source;
  return row;
}

BoundsTable bounds_table(QSequence& sequence, const PerronData& perron, int max_level) {
  if (max_level < 1) {
    throw std::invalid_argument("max level must be at least 1");
  }
  BoundsTable table;
  for (int m = 1; m <= max_level; ++m) {
    try {
      auto [q, source] = sequence.at(m);
      table.rows.push_back(bounds_row(q, perron, source));
    } catch (const CapacityError& e) {
      if (table.rows.empty()) {
        throw;
      }
      table.truncated = true;
      table.warning = "bounds table truncated at level " + std::to_string(m - 1) + ": " + e.what();
      break;
    }
  }
  return table;
}

BoundsTable bounds_table(const RandomSubstitution& sub, int max_level, const BoundsOptions& options) {
  require_valid_primitive(sub);
  const auto perron = perron_data(substitution_matrix(sub), options.power);
  QSequence sequence(sub, options.memory_cap, options.recurrence);
  return bounds_table(sequence, perron, max_level);
}

EntropyEstimate estimate_entropy(const RandomSubstitution& sub, QSequence& sequence,
                                 const PerronData& perron, const EstimateOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  EntropyEstimate est;
  try {
    est.identical = check_identical(sub, options.condition_max_level, options.memory_cap);
  } catch (const CapacityError&) {
    est.identical = capacity_unverified(Condition::identical);
  }
  try {
    est.disjoint = check_disjoint(sub, options.condition_max_level, options.memory_cap);
  } catch (const CapacityError&) {
    est.disjoint = capacity_unverified(Condition::disjoint);
  }
  if (options.external_disjoint_certificate && est.disjoint.verdict != Verdict::guaranteed) {
    if (est.disjoint.verdict == Verdict::refuted) {
      est.warnings.push_back("external disjointness certificate contradicted by enumeration at level " +
                             std::to_string(est.disjoint.level));
    } else {
      est.disjoint.detail = *options.external_disjoint_certificate + " (enumeration unrefuted up to level " +
                            std::to_string(est.disjoint.level) + ")";
      est.disjoint.verdict = Verdict::guaranteed;
      est.disjoint.criterion = Criterion::external;
    }
  }
  for (const auto* r : {&est.identical, &est.disjoint}) {
    if (r->verdict == Verdict::unverified) {
      est.warnings.push_back(to_string(r->condition) + " set condition unverified up to level " +
                             std::to_string(r->level) +
                             (r->capacity_limited ? " (memory cap reached)" : ""));
    }
  }

  const double lambda = perron.lambda;
  if (est.identical.verdict == Verdict::guaranteed || est.disjoint.verdict == Verdict::guaranteed) {
    const auto q1 = sequence.at(1).first;
    const double qr = dot(q1.entries, perron.right);
    if (est.identical.verdict == Verdict::guaranteed) {
      est.value = qr / lambda;
      est.certificate = Certificate::closed_form_identical;
    } else {
      est.value = qr / (lambda - 1.0);
      est.certificate = Certificate::closed_form_disjoint;
    }
    est.lower_bound = est.value;
    est.upper_bound = est.value;
    est.level_used = 1;
    est.gap = 0.0;
    est.converged = true;
    return est;
  }

  est.certificate = Certificate::sandwich;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  int used = 0;
  for (int m = 1; m <= options.max_level; ++m) {
    BoundsRow row;
    try {
      auto [q, source] = sequence.at(m);
      row = bounds_row(q, perron, source);
    } catch (const CapacityError& e) {
      if (used == 0) {
        throw;
      }
      est.warnings.push_back("sandwich stopped at level " + std::to_string(used) + ": " + e.what());
      break;
    }
    used = m;
    lower = std::max(lower, row.lower);
    upper = std::min(upper, row.upper);
    if (upper - lower < options.tolerance) {
      break;
    }
  }
  est.level_used = used;
  est.lower_bound = lower;
  est.upper_bound = upper;
  est.gap = upper - lower;
  est.value = 0.5 * (lower + upper);
  est.converged = est.gap < options.tolerance;
  if (!est.converged) {
    est.warnings.push_back("bracket width " + std::to_string(est.gap) +
                           " exceeds the requested tolerance at level " + std::to_string(used));
  }
  return est;
}

EntropyEstimate estimate_entropy(const RandomSubstitution& sub, const EstimateOptions& options) {
  require_valid_primitive(sub);
  const auto perron = perron_data(substitution_matrix(sub), options.power);
  QSequence sequence(sub, options.memory_cap, options.recurrence);
  return estimate_entropy(sub, sequence, perron, options);
}

GeometricConfig make_geometric_config(std::vector<double> psi, const PerronData& perron) {
  if (psi.size() != perron.right.size()) {
    throw std::invalid_argument("tile length vector must have one entry per letter");
  }
  for (double x : psi) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("tile lengths must be positive and finite");
    }
  }
  GeometricConfig cfg;
  cfg.rho = 1.0 / dot(psi, perron.right);
  cfg.psi = std::move(psi);
  return cfg;
}

double geometric_entropy(const GeometricConfig& config, const EntropyEstimate& estimate) {
  if (!(config.rho > 0.0)) {
    throw std::invalid_argument("geometric configuration has non-positive density");
  }
  return config.rho * estimate.value;
}

std::vector<PeriodicGrowthPoint> periodic_growth(const RandomSubstitution& sub, const Word& u,
                                                 int max_level, QSequence& sequence) {
  const auto m = substitution_matrix(sub);
  const auto phi = abelianise(u, sub.size());
  std::vector<PeriodicGrowthPoint> out;
  for (int level = 1; level <= max_level; ++level) {
    const auto q = sequence.at(level).first;
    const auto ell = length_vector(m, level);
    double log_count = 0.0;
    double length = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      log_count += static_cast<double>(phi[i]) * q.entries[i];
      length += static_cast<double>(phi[i]) * static_cast<double>(ell.entries[i]);
    }
    out.push_back({level, log_count / length});
  }
  return out;
}

std::vector<PeriodicGrowthPoint> periodic_growth(const RandomSubstitution& sub, const Word& u,
                                                 int max_level, std::size_t memory_cap) {
  QSequence sequence(sub, memory_cap);
  return periodic_growth(sub, u, max_level, sequence);
}

}  // namespace rsentropy
