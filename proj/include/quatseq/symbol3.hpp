#pragma once

#include <array>
#include <stdexcept>

#include "quatseq/rational.hpp"
#include "quatseq/sequences.hpp"

namespace quatseq {

// Element a + b*eps of Q(eps), eps a primitive cube root of unity.
// Normal form uses eps^2 = -1 - eps, applied eagerly on every product.
struct CycRat {
  Rat a;
  Rat b;

  CycRat() : a(0), b(0) {}
  CycRat(Rat a_) : a(std::move(a_)), b(0) {}  // NOLINT: rational embeds
  CycRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}

  static CycRat eps() { return CycRat(Rat(0), Rat(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  CycRat operator+(const CycRat& o) const { return CycRat(a + o.a, b + o.b); }
  CycRat operator-(const CycRat& o) const { return CycRat(a - o.a, b - o.b); }
  CycRat operator-() const { return CycRat(-a, -b); }
  // (a + b eps)(c + d eps) = (ac - bd) + (ad + bc - bd) eps
  CycRat operator*(const CycRat& o) const {
    return CycRat(a * o.a - b * o.b, a * o.b + b * o.a - b * o.b);
  }
  bool operator==(const CycRat& o) const { return a == o.a && b == o.b; }

  std::string str() const;
};

// Complex conjugate (a - b) - b*eps; the field norm u * conj(u) = a^2 - ab + b^2.
CycRat cyc_conj(const CycRat& u);
Rat cyc_norm(const CycRat& u);
CycRat cyc_inv(const CycRat& u);
CycRat cyc_pow(const CycRat& u, unsigned long e);

// Parameters of the degree-3 symbol algebra over Q(eps) generated by x, y with
// x^3 = alpha1, y^3 = alpha2, y x = eps x y.
struct SymAlgebra {
  CycRat alpha1;
  CycRat alpha2;

  SymAlgebra(CycRat a1, CycRat a2) : alpha1(std::move(a1)), alpha2(std::move(a2)) {
    if (alpha1.is_zero() || alpha2.is_zero())
      throw std::invalid_argument("SymAlgebra: parameters must be nonzero");
  }
  bool operator==(const SymAlgebra& o) const {
    return alpha1 == o.alpha1 && alpha2 == o.alpha2;
  }
};

// Element on the basis x^{j1} y^{j2}, 0 <= j1, j2 < 3, stored in the order
// 1, x, x^2, y, xy, x^2 y, y^2, x y^2, x^2 y^2 (slot 3*j2 + j1).
class SymbolElem {
 public:
  SymbolElem(SymAlgebra alg, std::array<CycRat, 9> coeffs)
      : alg_(std::move(alg)), c_(std::move(coeffs)) {}

  static SymbolElem zero(const SymAlgebra& alg) { return SymbolElem(alg, {}); }
  static SymbolElem one(const SymAlgebra& alg) { return basis(alg, 0, 0); }
  static SymbolElem x(const SymAlgebra& alg) { return basis(alg, 1, 0); }
  static SymbolElem y(const SymAlgebra& alg) { return basis(alg, 0, 1); }
  static SymbolElem basis(const SymAlgebra& alg, int j1, int j2);

  const SymAlgebra& algebra() const { return alg_; }
  const std::array<CycRat, 9>& coeffs() const { return c_; }
  const CycRat& coeff(int j1, int j2) const { return c_.at(3 * j2 + j1); }
  bool is_zero() const;

  SymbolElem operator+(const SymbolElem& o) const;
  SymbolElem operator-(const SymbolElem& o) const;
  SymbolElem operator*(const SymbolElem& o) const;
  bool operator==(const SymbolElem& o) const { return alg_ == o.alg_ && c_ == o.c_; }

 private:
  void check_same(const SymbolElem& o) const {
    if (!(alg_ == o.alg_))
      throw std::invalid_argument("SymbolElem: mixed algebras in arithmetic");
  }

  SymAlgebra alg_;
  std::array<CycRat, 9> c_;
};

SymbolElem operator*(const CycRat& s, const SymbolElem& u);

// Nine consecutive sequence values on the basis in storage order.
SymbolElem fibonacci_symbol(long n, const SymAlgebra& alg);
SymbolElem lucas_symbol(long n, const SymAlgebra& alg);
// U_n^{p,q} symbol element: u_n ... u_{n+8}; zero iff p = q = 0.
SymbolElem u_symbol(const SeqParams& sp, const GLParams& gl, long n, const SymAlgebra& alg);

}  // namespace quatseq
