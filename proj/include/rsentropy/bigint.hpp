#ifndef RSENTROPY_BIGINT_HPP
#define RSENTROPY_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace rsentropy {

using BigInt = boost::multiprecision::cpp_int;

// Natural logarithm of a positive integer of any size.
double log_of(const BigInt& value);

}  // namespace rsentropy

#endif  // RSENTROPY_BIGINT_HPP
