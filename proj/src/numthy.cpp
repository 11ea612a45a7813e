#include "quatseq/numthy.hpp"

#include <algorithm>

namespace quatseq {

namespace {

// Trial division of v (which fits in a machine word) by 2, 3, then 6k +/- 1.
// Appends prime powers to out; returns the unfactored cofactor.
unsigned long factor_word(unsigned long v, unsigned long limit,
                          std::vector<std::pair<Int, unsigned>>& out) {
  auto strip = [&](unsigned long p) {
    if (p > limit) return;
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  };
  strip(2);
  strip(3);
  for (unsigned long p = 5; p <= limit && p <= v / p; p += 6) {
    strip(p);
    if (p + 2 <= limit) strip(p + 2);
  }
  return v;
}

// Same loop over an mpz remainder (inputs too large for a machine word).
Int factor_mpz(Int v, unsigned long limit, std::vector<std::pair<Int, unsigned>>& out) {
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  };
  strip(2);
  strip(3);
  for (unsigned long p = 5; p <= limit; p += 6) {
    if (mpz_cmp_ui(v.get_mpz_t(), p * p) < 0) break;
    strip(p);
    strip(p + 2);
    if (v.fits_ulong_p()) {
      unsigned long rest = factor_word(v.get_ui(), limit, out);
      return Int(rest);
    }
  }
  return v;
}

bool residue_is_square_capable(const Int& cofactor, unsigned long limit) {
  // cofactor > 1 survived all divisors <= limit; it is prime iff <= limit^2
  Int bound = Int(limit) * Int(limit);
  return cofactor <= bound;
}

}  // namespace

Int Factorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization factorize(const Int& n, unsigned long trial_limit) {
  if (n == 0) throw std::invalid_argument("factorize: zero input");
  Factorization f;
  f.sign = (n < 0) ? -1 : 1;
  Int v = abs(n);
  if (v == 1) return f;

  Int rest;
  if (v.fits_ulong_p()) {
    rest = Int(factor_word(v.get_ui(), trial_limit, f.factors));
  } else {
    rest = factor_mpz(v, trial_limit, f.factors);
  }
  if (rest > 1) {
    if (!residue_is_square_capable(rest, trial_limit))
      throw factorization_incomplete("factorize: cofactor " + rest.get_str() +
                                     " exceeds trial bound " + std::to_string(trial_limit));
    f.factors.emplace_back(rest, 1);
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return f;
}

bool is_prime(const Int& n, unsigned long trial_limit) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t()) || mpz_divisible_ui_p(n.get_mpz_t(), 3)) return false;
  if (n.fits_ulong_p()) {
    unsigned long v = n.get_ui();
    for (unsigned long p = 5; p <= v / p; p += 6) {
      if (p > trial_limit)
        throw factorization_incomplete("is_prime: " + n.get_str() + " exceeds trial bound");
      if (v % p == 0 || v % (p + 2) == 0) return false;
    }
    return true;
  }
  for (unsigned long p = 5; p <= trial_limit; p += 6) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) || mpz_divisible_ui_p(n.get_mpz_t(), p + 2))
      return false;
  }
  throw factorization_incomplete("is_prime: " + n.get_str() + " exceeds trial bound");
}

bool two_squares_criterion(const Factorization& f) {
  for (const auto& [p, e] : f.factors)
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3 && e % 2 != 0) return false;
  return true;
}

std::optional<TwoSquares> two_squares(const Int& n, unsigned long trial_limit) {
  if (n < 1) throw std::invalid_argument("two_squares: requires n >= 1");
  std::optional<TwoSquares> found;
  for (Int y = 0; 2 * y * y <= n; ++y) {
    Int t = n - y * y;
    if (mpz_perfect_square_p(t.get_mpz_t())) {
      Int x;
      mpz_sqrt(x.get_mpz_t(), t.get_mpz_t());
      found = TwoSquares{x, y};
      break;
    }
  }
  // The search and the exponent criterion are independent routes; they must agree.
  bool criterion = two_squares_criterion(factorize(n, trial_limit));
  if (found.has_value() != criterion)
    throw std::logic_error("two_squares: search and criterion disagree at n = " + n.get_str());
  return found;
}

std::optional<std::pair<Int, Int>> rep_x2_9y2(const Int& n) {
  if (n < 1) throw std::invalid_argument("rep_x2_9y2: requires n >= 1");
  for (Int y = 0; 9 * y * y <= n; ++y) {
    Int t = n - 9 * y * y;
    if (mpz_perfect_square_p(t.get_mpz_t())) {
      Int x;
      mpz_sqrt(x.get_mpz_t(), t.get_mpz_t());
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::array<Int, 3> pythagorean_family(const Int& m, const Int& a, const Int& b) {
  Int x = a * a - m * b * b;
  Int y = 2 * a * b;
  Int z = a * a + m * b * b;
  if (x * x + m * y * y != z * z)
    throw std::logic_error("pythagorean_family: postcondition x^2 + m y^2 = z^2 failed");
  return {x, y, z};
}

int legendre_symbol(const Int& a, const Int& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw std::invalid_argument("legendre_symbol: " + p.get_str() + " is not an odd prime");
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  Int e, half = (p - 1) / 2;
  mpz_powm(e.get_mpz_t(), r.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
  if (e == 1) return 1;
  if (e == p - 1) return -1;
  throw std::logic_error("legendre_symbol: Euler criterion gave a nonunit");
}

namespace {

// p-adic valuation of r and its unit part.
long valuation(const Rat& r, const Int& p, Rat& unit) {
  Int num, den;
  long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), r.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t()));
  unit = make_rat(num, den);
  return vn - vd;
}

// Residue of a p-unit rational modulo m (denominator invertible mod m).
Int unit_residue(const Rat& u, const Int& m) {
  Int num_mod, den_mod, den_inv;
  mpz_mod(num_mod.get_mpz_t(), u.get_num().get_mpz_t(), m.get_mpz_t());
  mpz_mod(den_mod.get_mpz_t(), u.get_den().get_mpz_t(), m.get_mpz_t());
  if (mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("unit_residue: denominator not invertible");
  Int r = num_mod * den_inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

// (u-1)/2 mod 2 for a 2-adic unit u.
int eps2(const Rat& u) { return unit_residue(u, 4) == 3 ? 1 : 0; }

// (u^2-1)/8 mod 2 for a 2-adic unit u.
int omega2(const Rat& u) {
  Int r = unit_residue(u, 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (v.infinite) return (a < 0 && b < 0) ? -1 : 1;

  const Int& p = v.prime;
  if (!is_prime(p)) throw std::invalid_argument("hilbert_symbol: place " + p.get_str() + " is not prime");

  Rat u, w;
  long alpha = valuation(a, p, u);
  long beta = valuation(b, p, w);

  if (p == 2) {
    long e = static_cast<long>(eps2(u)) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
    s = -s;  // (-1/p)^{alpha beta}
  if (beta % 2 != 0) s *= legendre_symbol(unit_residue(u, p), p);
  if (alpha % 2 != 0) s *= legendre_symbol(unit_residue(w, p), p);
  return s;
}

std::vector<Place> relevant_places(const Rat& a, const Rat& b, unsigned long trial_limit) {
  std::vector<Int> odd_primes;
  auto collect = [&](const Int& n) {
    if (n == 0 || abs(n) == 1) return;
    for (const auto& [p, e] : factorize(n, trial_limit).factors)
      if (p != 2) odd_primes.push_back(p);
  };
  collect(a.get_num());
  collect(a.get_den());
  collect(b.get_num());
  collect(b.get_den());
  std::sort(odd_primes.begin(), odd_primes.end());
  odd_primes.erase(std::unique(odd_primes.begin(), odd_primes.end()), odd_primes.end());

  std::vector<Place> places;
  places.push_back(Place::at_infinity());
  places.push_back(Place::at(2));
  for (const Int& p : odd_primes) places.push_back(Place::at(p));
  return places;
}

}  // namespace quatseq
