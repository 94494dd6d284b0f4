#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace scrollreg {

/// Unbounded integer used for every cohomology dimension.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0 or n < k or n < 0.
/// Computed multiplicatively, never through factorials.
BigInt binomial(std::int64_t n, std::int64_t k);

std::string to_string(const BigInt& v);

}  // namespace scrollreg
