#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "quatseq/rational.hpp"

namespace quatseq {

// Recurrence coefficient l >= 1 for a_n = l*a_{n-1} + a_{n-2} (a_0=0, a_1=1)
// and b_n = l*b_{n-1} + b_{n-2} (b_0=2, b_1=l).  Discriminant D = l^2 + 4.
struct SeqParams {
  long l;

  explicit SeqParams(long l_) : l(l_) {
    if (l < 1) throw std::invalid_argument("SeqParams: l must be a positive integer");
  }
  Int discriminant() const { return Int(l) * l + 4; }
};

// Integer weights for the combined sequence u_n = p*a_{n-1} + q*b_n.
// p = q = 0 is allowed and yields the zero sequence.
struct GLParams {
  long p = 0;
  long q = 0;
};

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
// Arithmetic between values with different d is rejected.
class QuadExt {
 public:
  QuadExt(Int d, Rat a, Rat b) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
    if (d_ <= 0) throw std::invalid_argument("QuadExt: radicand must be positive");
  }

  const Int& d() const { return d_; }
  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator+(const QuadExt& o) const {
    check_same(o);
    return QuadExt(d_, a_ + o.a_, b_ + o.b_);
  }
  QuadExt operator-(const QuadExt& o) const {
    check_same(o);
    return QuadExt(d_, a_ - o.a_, b_ - o.b_);
  }
  QuadExt operator*(const QuadExt& o) const {
    check_same(o);
    return QuadExt(d_, a_ * o.a_ + Rat(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }
  QuadExt inverse() const {
    Rat n = a_ * a_ - Rat(d_) * b_ * b_;
    if (n == 0) throw std::invalid_argument("QuadExt::inverse: zero norm");
    return QuadExt(d_, a_ / n, -b_ / n);
  }
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }

  QuadExt pow(unsigned long e) const {
    QuadExt acc(d_, 1, 0);
    for (unsigned long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  bool operator==(const QuadExt& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }

 private:
  void check_same(const QuadExt& o) const {
    if (d_ != o.d_) throw std::invalid_argument("QuadExt: mixed radicands in arithmetic");
  }

  Int d_;
  Rat a_, b_;
};

// a_n for any integer n; negative indices via a_{-n} = (-1)^{n+1} a_n.
Int seq_a(const SeqParams& sp, long n);

// b_n for n >= 0; the recurrence is not extended to negative indices.
Int seq_b(const SeqParams& sp, long n);

// Exact Binet evaluation in Q(sqrt(l^2+4)); must agree with the recurrences.
// Throws std::logic_error if the closed form fails to collapse to an integer
// (an arithmetic bug, never a property of the input).
Int binet_a(const SeqParams& sp, long n);
Int binet_b(const SeqParams& sp, long n);

// u_n = p*a_{n-1} + q*b_n (n >= 0, uses a_{-1} = 1); u_0 = p+2q, u_1 = q*l.
Int u_number(const SeqParams& sp, const GLParams& gl, long n);

enum class IdentityId {
  P31_I,    // b_n b_{n+m} = b_{2n+m} + (-1)^n b_m
  P31_II,   // a_n b_{n+m} = a_{2n+m} + (-1)^{n+1} a_m
  P31_III,  // a_{n+m} b_n = a_{2n+m} + (-1)^n a_m
  P31_IV,   // a_n a_{n+m} = [b_{2n+m} + (-1)^{n+1} b_m] / (l^2+4)
  P31_V,    // b_n + b_{n+2} = (l^2+4) a_{n+1}
  P31_VI,   // a_n^2 + a_{n+1}^2 = a_{2n+1}
  P31_VII,  // b_n^2 + b_{n+1}^2 = (l^2+4) a_{2n+1}
  P32_I,    // a_{n+1} a_{n-1} - a_n^2 = (-1)^n
  P32_II,   // b_{n+1} b_{n-1} - b_n^2 = (-1)^{n-1} (l^2+4)
  R35,      // p a_{n+1} + q b_n = u_n^{p,q} + u_{n+1}^{pl,0}
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

struct IdentityReport {
  IdentityId id;
  long l;
  long n;
  long m;  // meaningful for P31_I..IV only
  std::optional<GLParams> gl;
  Rat lhs;
  Rat rhs;
  bool holds;
};

// Evaluates both sides of the named identity exactly.  Index ranges:
// P31_I..IV need n,m >= 0; P31_V..VII need n >= 0; P32_* and R35 need n >= 1;
// R35 additionally needs gl.  Out-of-range input throws std::invalid_argument.
IdentityReport identity_check(IdentityId id, const SeqParams& sp, long n, long m = 0,
                              std::optional<GLParams> gl = std::nullopt);

struct ParityFacts {
  bool b_even;                           // parity of b_n
  std::optional<int> product_mod4;       // b_{n-1} b_{n+1} mod 4, present for n >= 1
};

ParityFacts parity_facts(const SeqParams& sp, long n);

}  // namespace quatseq
