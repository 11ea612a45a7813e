#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatseq/rational.hpp"

namespace quatseq {

// Raised when trial division hits the configured bound before finishing.
// An incomplete factorization is an error state, never a partial answer.
struct factorization_incomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest trial divisor attempted by default.
inline constexpr unsigned long kDefaultTrialLimit = 100'000'000UL;

struct Factorization {
  int sign = 1;                                    // +1 or -1
  std::vector<std::pair<Int, unsigned>> factors;   // (prime, exponent), primes increasing

  Int value() const;  // sign * prod p^e
};

// Complete factorization of n != 0 by trial division with divisors <= trial_limit.
Factorization factorize(const Int& n, unsigned long trial_limit = kDefaultTrialLimit);

// Deterministic trial-division primality test (throws factorization_incomplete
// beyond trial_limit^2).
bool is_prime(const Int& n, unsigned long trial_limit = kDefaultTrialLimit);

struct TwoSquares {
  Int x, y;  // x^2 + y^2 = n, x >= y >= 0
};

// Representation n = x^2 + y^2 by exhaustive search, cross-checked against the
// prime-exponent criterion (every prime p = 3 mod 4 divides n to an even power).
std::optional<TwoSquares> two_squares(const Int& n,
                                      unsigned long trial_limit = kDefaultTrialLimit);

// The criterion alone, evaluated on a factorization.
bool two_squares_criterion(const Factorization& f);

// Representation n = x^2 + 9 y^2, smallest y first; absent if none exists.
std::optional<std::pair<Int, Int>> rep_x2_9y2(const Int& n);

// Solution (a^2 - m b^2, 2ab, a^2 + m b^2) of x^2 + m y^2 = z^2.
// The y component printed in some sources as 2mab fails the equation; 2ab is
// what the algebra gives, and the postcondition is checked on every call.
std::array<Int, 3> pythagorean_family(const Int& m, const Int& a, const Int& b);

// Quadratic-residue symbol (a/p) for odd prime p, via Euler's criterion.
int legendre_symbol(const Int& a, const Int& p);

// A place of Q: a finite prime or the real place.
struct Place {
  bool infinite;
  Int prime;  // meaningful when !infinite

  static Place at_infinity() { return Place{true, Int(0)}; }
  static Place at(Int p) { return Place{false, std::move(p)}; }
  std::string str() const { return infinite ? "inf" : prime.get_str(); }
};

// Local Hilbert symbol (a,b)_v over Q for nonzero rationals a, b.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// The places where (a,b)_v can be nontrivial: infinity, 2, and the odd primes
// dividing a numerator or denominator of a or b.
std::vector<Place> relevant_places(const Rat& a, const Rat& b,
                                   unsigned long trial_limit = kDefaultTrialLimit);

}  // namespace quatseq
