#include "quatseq/symbol3.hpp"

namespace quatseq {

std::string CycRat::str() const {
  if (b == 0) return a.get_str();
  std::string s;
  if (a != 0) s = a.get_str();
  if (b > 0 && !s.empty()) s += "+";
  if (b == -1) {
    s += "-";
  } else if (b != 1) {
    s += b.get_str() + "*";
  }
  s += "eps";
  return s;
}

CycRat cyc_conj(const CycRat& u) { return CycRat(u.a - u.b, -u.b); }

Rat cyc_norm(const CycRat& u) { return u.a * u.a - u.a * u.b + u.b * u.b; }

CycRat cyc_inv(const CycRat& u) {
  if (u.is_zero()) throw std::invalid_argument("cyc_inv: zero argument");
  Rat n = cyc_norm(u);
  CycRat c = cyc_conj(u);
  return CycRat(c.a / n, c.b / n);
}

CycRat cyc_pow(const CycRat& u, unsigned long e) {
  CycRat acc(Rat(1));
  for (unsigned long i = 0; i < e; ++i) acc = acc * u;
  return acc;
}

namespace {

// eps^t for t >= 0: 1, eps, -1-eps cyclically.
CycRat eps_power(int t) {
  switch (t % 3) {
    case 1: return CycRat::eps();
    case 2: return CycRat(Rat(-1), Rat(-1));
    default: return CycRat(Rat(1));
  }
}

}  // namespace

SymbolElem SymbolElem::basis(const SymAlgebra& alg, int j1, int j2) {
  if (j1 < 0 || j1 > 2 || j2 < 0 || j2 > 2)
    throw std::invalid_argument("SymbolElem::basis: exponents must lie in {0,1,2}");
  std::array<CycRat, 9> c{};
  c[3 * j2 + j1] = CycRat(Rat(1));
  return SymbolElem(alg, std::move(c));
}

bool SymbolElem::is_zero() const {
  for (const CycRat& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

SymbolElem SymbolElem::operator+(const SymbolElem& o) const {
  check_same(o);
  std::array<CycRat, 9> r;
  for (int i = 0; i < 9; ++i) r[i] = c_[i] + o.c_[i];
  return SymbolElem(alg_, std::move(r));
}

SymbolElem SymbolElem::operator-(const SymbolElem& o) const {
  check_same(o);
  std::array<CycRat, 9> r;
  for (int i = 0; i < 9; ++i) r[i] = c_[i] - o.c_[i];
  return SymbolElem(alg_, std::move(r));
}

// (x^{a} y^{b}) (x^{c} y^{d}) = eps^{bc} x^{a+c} y^{b+d}, with x^3 and y^3
// reduced to the algebra parameters.  Exponent sums stay below 6, so each can
// overflow at most once.
SymbolElem SymbolElem::operator*(const SymbolElem& o) const {
  check_same(o);
  std::array<CycRat, 9> r{};
  for (int b = 0; b < 3; ++b)
    for (int a = 0; a < 3; ++a) {
      const CycRat& cx = c_[3 * b + a];
      if (cx.is_zero()) continue;
      for (int d = 0; d < 3; ++d)
        for (int c = 0; c < 3; ++c) {
          const CycRat& cy = o.c_[3 * d + c];
          if (cy.is_zero()) continue;
          CycRat term = cx * cy * eps_power(b * c);
          int e1 = a + c, e2 = b + d;
          if (e1 >= 3) {
            e1 -= 3;
            term = term * alg_.alpha1;
          }
          if (e2 >= 3) {
            e2 -= 3;
            term = term * alg_.alpha2;
          }
          r[3 * e2 + e1] = r[3 * e2 + e1] + term;
        }
    }
  return SymbolElem(alg_, std::move(r));
}

SymbolElem operator*(const CycRat& s, const SymbolElem& u) {
  std::array<CycRat, 9> r;
  for (int i = 0; i < 9; ++i) r[i] = s * u.coeffs()[i];
  return SymbolElem(u.algebra(), std::move(r));
}

namespace {

SymbolElem window_element(const SeqParams& sp, const GLParams& gl, long n,
                          const SymAlgebra& alg) {
  std::array<CycRat, 9> c;
  for (int i = 0; i < 9; ++i) c[i] = CycRat(Rat(u_number(sp, gl, n + i)));
  return SymbolElem(alg, std::move(c));
}

}  // namespace

SymbolElem fibonacci_symbol(long n, const SymAlgebra& alg) {
  if (n < 0) throw std::invalid_argument("fibonacci_symbol: negative index");
  std::array<CycRat, 9> c;  // f_k = a_k at l = 1
  SeqParams fib(1);
  for (int i = 0; i < 9; ++i) c[i] = CycRat(Rat(seq_a(fib, n + i)));
  return SymbolElem(alg, std::move(c));
}

SymbolElem lucas_symbol(long n, const SymAlgebra& alg) {
  if (n < 0) throw std::invalid_argument("lucas_symbol: negative index");
  std::array<CycRat, 9> c;
  SeqParams fib(1);
  for (int i = 0; i < 9; ++i) c[i] = CycRat(Rat(seq_b(fib, n + i)));
  return SymbolElem(alg, std::move(c));
}

SymbolElem u_symbol(const SeqParams& sp, const GLParams& gl, long n, const SymAlgebra& alg) {
  if (n < 0) throw std::invalid_argument("u_symbol: negative index");
  return window_element(sp, gl, n, alg);
}

}  // namespace quatseq
