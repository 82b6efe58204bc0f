#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <gmpxx.h>

namespace pathweyl {

/// Exact coefficient and count type.
using Integer = mpz_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
/// (Σ parts)! / Π parts!
Integer multinomial(std::span<const std::size_t> parts);

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace pathweyl
