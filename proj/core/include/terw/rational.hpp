#pragma once

// Exact scalar layer. All linear algebra in this library runs over the
// rationals; mpq_class from GMP supplies the arithmetic and canonical
// (reduced, positive-denominator) form.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace terw {

using Int = mpz_class;
using Rational = mpq_class;

// Serializes a rational as "p" when the denominator is 1, else "p/q"
// with q > 0 and gcd(p,q)=1. This is the wire format used in JSON output.
inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

// Exact conversion of a rational known to be integral.
// Throws std::invalid_argument if the value has a nontrivial denominator.
inline Int to_integer(const Rational& r) {
  if (r.get_den() != 1)
    throw std::invalid_argument("expected integer, got " + r.get_str());
  return r.get_num();
}

}  // namespace terw
