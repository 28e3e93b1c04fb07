#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <string>

#include "bifib/poly.hpp"
#include "bifib/report.hpp"

namespace bifib {

/// U: seeds 0, 1. V: seeds 2, x. Both follow W_n = x W_{n-1} + y W_{n-2}.
enum class SequenceKind { FibonacciU, LucasV };

std::string to_string(SequenceKind kind);
/// Sequence symbol, "U" or "V".
char symbol(SequenceKind kind);

/// Memoized prefix of U or V. Extension is serialized by a mutex and the
/// backing deque never moves stored elements, so references handed out by
/// at() stay valid for the cache's lifetime.
class SequenceCache {
 public:
  explicit SequenceCache(SequenceKind kind);

  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  SequenceKind kind() const { return kind_; }

  /// W_n, extending the cache by the recurrence if needed.
  const BivarPoly& at(std::size_t n);
  const BivarPoly& operator[](std::size_t n) { return at(n); }

  std::size_t size() const;

 private:
  SequenceKind kind_;
  mutable std::mutex mutex_;
  std::deque<BivarPoly> values_;
};

/// Process-wide caches shared by every module.
SequenceCache& shared_cache(SequenceKind kind);

const BivarPoly& u_poly(std::size_t n);
const BivarPoly& v_poly(std::size_t n);

/// U_n from the binomial closed form (n >= 1), built term by term.
BivarPoly u_poly_closed(std::size_t n);
/// V_n from the weighted binomial closed form (n >= 1).
/// Throws DomainError for n = 0 and IntegralityViolation if a weight is not integral.
BivarPoly v_poly_closed(std::size_t n);

/// Checks the sequence identities
///   V_n = 2U_{n+1} - xU_n                        (n >= 0)
///   V_n = U_{n+1} + yU_{n-1}                     (n >= 1)
///   sum_{k=1..n} (-y)^{n-k} V_{2k} = U_{2n+1} - (-y)^n   (n >= 0)
///   V_{2n} = 2U_{2n+1} - xU_{2n}                 (n >= 0)
/// for every index up to n_max.
Report check_lemma2(std::size_t n_max);

}  // namespace bifib
