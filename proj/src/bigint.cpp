#include "pathweyl/bigint.hpp"

namespace pathweyl {

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer multinomial(std::span<const std::size_t> parts) {
  Integer result = 1;
  unsigned long total = 0;
  for (std::size_t part : parts) {
    total += part;
    result *= binomial(total, part);
  }
  return result;
}

}  // namespace pathweyl
