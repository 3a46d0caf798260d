#include "rsentropy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rsentropy/errors.hpp"

namespace rsentropy {

double log_of(const BigInt& value) {
  if (value <= 0) {
    throw std::domain_error("log of a non-positive integer");
  }
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 60) {
    return std::log(value.convert_to<double>());
  }
  const auto shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

namespace {

// One power iteration run; `transpose` selects Mᵀ.
std::vector<double> dominant_vector(const SubstitutionMatrix& m, bool transpose,
                                    const PowerIterationOptions& options, int& iterations) {
  const std::size_t n = m.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  std::vector<double> w(n);
  for (int it = 1; it <= options.max_iterations; ++it) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += static_cast<double>(transpose ? m(j, i) : m(i, j)) * v[j];
      }
      w[i] = acc;
      norm += acc;
    }
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= norm;
      diff = std::max(diff, std::abs(w[i] - v[i]));
    }
    std::swap(v, w);
    if (diff < options.tolerance) {
      iterations = std::max(iterations, it);
      return v;
    }
  }
  std::ostringstream msg;
  msg << "power iteration did not converge within " << options.max_iterations << " iterations";
  throw ConvergenceError(msg.str());
}

}  // namespace

PerronData perron_data(const SubstitutionMatrix& m, const PowerIterationOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (!primitivity_exponent(m)) {
    throw ValidationError("substitution matrix is not primitive");
  }
  const std::size_t n = m.size();

  PerronData data;
  data.tolerance = options.tolerance;
  data.right = dominant_vector(m, false, options, data.iterations);
  data.left = dominant_vector(m, true, options, data.iterations);

  // λ = 1ᵀMR / 1ᵀR, with 1ᵀR = 1.
  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lambda += static_cast<double>(m(i, j)) * data.right[j];
    }
  }
  data.lambda = lambda;
  if (!(lambda > 1.0 + 1e-12)) {
    throw ValidationError("Perron-Frobenius eigenvalue is not greater than 1");
  }

  double dot = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += data.left[i] * data.right[i];
  }
  for (auto& x : data.left) {
    x /= dot;
  }

  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double mr = 0.0;
    double lm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      mr += static_cast<double>(m(i, j)) * data.right[j];
      lm += data.left[j] * static_cast<double>(m(j, i));
    }
    residual = std::max(residual, std::abs(mr - lambda * data.right[i]));
    residual = std::max(residual, std::abs(lm - lambda * data.left[i]));
  }
  data.residual = residual;
  return data;
}

LengthVector length_vector(const SubstitutionMatrix& m, int level) {
  if (level < 1) {
    throw std::invalid_argument("level must be at least 1");
  }
  const std::size_t n = m.size();
  std::vector<std::uint64_t> ell(n, 1);
  for (int step = 0; step < level; ++step) {
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t term;
        if (__builtin_mul_overflow(ell[i], m(i, j), &term) ||
            __builtin_add_overflow(next[j], term, &next[j])) {
          throw OverflowError("inflation length overflows 64 bits at level " +
                              std::to_string(step + 1) + "; use length_vector_exact");
        }
      }
    }
    ell = std::move(next);
  }
  return {level, std::move(ell)};
}

std::vector<BigInt> length_vector_exact(const SubstitutionMatrix& m, int level) {
  if (level < 1) {
    throw std::invalid_argument("level must be at least 1");
  }
  const std::size_t n = m.size();
  std::vector<BigInt> ell(n, 1);
  for (int step = 0; step < level; ++step) {
    std::vector<BigInt> next(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        next[j] += ell[i] * m(i, j);
      }
    }
    ell = std::move(next);
  }
  return ell;
}

}  // namespace rsentropy
