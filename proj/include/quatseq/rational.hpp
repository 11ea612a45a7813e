#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace quatseq {

// Exact arbitrary-precision integers and rationals (GMP-backed).
// Rat values are kept canonical: reduced fraction, positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_integer: " + r.get_str() + " is not an integer");
  return r.get_num();
}

// Accepts "n" or "n/d" with optional leading '-'.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  Rat r(s);
  if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace quatseq
