#ifndef RSENTROPY_SPECTRAL_HPP
#define RSENTROPY_SPECTRAL_HPP

#include <cstdint>
#include <vector>

#include "rsentropy/bigint.hpp"
#include "rsentropy/substitution.hpp"

namespace rsentropy {

// Perron–Frobenius data of a primitive matrix, normalised so that
// ‖R‖₁ = 1 and LᵀR = 1.
struct PerronData {
  double lambda = 0.0;
  std::vector<double> right;
  std::vector<double> left;
  // max(‖MR − λR‖∞, ‖LᵀM − λLᵀ‖∞)
  double residual = 0.0;
  int iterations = 0;
  double tolerance = 0.0;
};

struct PowerIterationOptions {
  double tolerance = 1e-12;
  int max_iterations = 1'000'000;
};

/*
 * Power iteration on M and Mᵀ from the uniform start vector. λ is the ratio
 * 1ᵀMv / 1ᵀv at the fixed point.
 *
 * Throws ValidationError for non-primitive M or λ ≤ 1, ConvergenceError when
 * the iteration cap is reached.
 */
PerronData perron_data(const SubstitutionMatrix& m, const PowerIterationOptions& options = {});

// ℓ_m = 1ᵀ Mᵐ: entry i is the common length of all words in ϑᵐ(a_i).
struct LengthVector {
  int level = 0;
  std::vector<std::uint64_t> entries;
};

// Throws OverflowError if an entry leaves 64 bits; use length_vector_exact then.
LengthVector length_vector(const SubstitutionMatrix& m, int level);
std::vector<BigInt> length_vector_exact(const SubstitutionMatrix& m, int level);

}  // namespace rsentropy

#endif  // RSENTROPY_SPECTRAL_HPP
