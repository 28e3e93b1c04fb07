#pragma once

#include "bifib/poly.hpp"

namespace bifib {

/// C(n, k) by the running product C(n, i+1) = C(n, i) (n - i) / (i + 1),
/// every division exact. Zero when k > n or either argument is negative.
Integer binomial(long n, long k);

/// (-1)^e as an integer.
inline long sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace bifib
