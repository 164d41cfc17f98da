#include "slitpath/binomial.hpp"

namespace slitpath {

BigRat binom(long top, unsigned long bottom) {
  if (top >= 0 && static_cast<unsigned long>(top) < bottom)
    return BigRat{};

  mpz_class out;
  if (top >= 0) {
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), bottom);
  } else {
    // binom(-t, k) = (-1)^k binom(t + k - 1, k)
    const unsigned long t = static_cast<unsigned long>(-top);
    mpz_bin_uiui(out.get_mpz_t(), t + bottom - 1, bottom);
    if (bottom % 2 == 1)
      out = -out;
  }
  return BigRat(out);
}

} // namespace slitpath
