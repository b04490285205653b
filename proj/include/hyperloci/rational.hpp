#ifndef HYPERLOCI_RATIONAL_HPP
#define HYPERLOCI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "hyperloci/error.hpp"

namespace hyperloci {

// Exact rationals are GMP mpq_class values, always canonical:
// gcd(|num|, den) = 1 and den > 0.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Truncated integer quotient n/d with exactness flag via divisible_p.
inline bool int_divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace hyperloci

#endif
