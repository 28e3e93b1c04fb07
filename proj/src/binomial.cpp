#include "bifib/binomial.hpp"

namespace bifib {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer c = 1;
  for (long i = 0; i < k; ++i) {
    c *= n - i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return c;
}

}  // namespace bifib
