#pragma once

#include <array>
#include <stdexcept>

#include "quatseq/rational.hpp"
#include "quatseq/sequences.hpp"

namespace quatseq {

// Parameters of the generalized quaternion algebra H(alpha, beta) over Q,
// with basis {1, i, j, k}: i^2 = alpha, j^2 = beta, ij = -ji = k.
struct QuatAlgebra {
  Rat alpha;
  Rat beta;

  QuatAlgebra(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha == 0 || beta == 0)
      throw std::invalid_argument("QuatAlgebra: parameters must be nonzero");
  }
  bool operator==(const QuatAlgebra& o) const { return alpha == o.alpha && beta == o.beta; }
};

// Element x1 + x2 i + x3 j + x4 k.  Arithmetic between elements of different
// algebras is a hard error, never a coercion.
class Quaternion {
 public:
  Quaternion(QuatAlgebra alg, std::array<Rat, 4> coords)
      : alg_(std::move(alg)), c_(std::move(coords)) {}

  static Quaternion zero(const QuatAlgebra& alg) { return Quaternion(alg, {}); }
  static Quaternion one(const QuatAlgebra& alg) {
    return Quaternion(alg, {Rat(1), Rat(0), Rat(0), Rat(0)});
  }
  // basis index 0..3 for 1, i, j, k
  static Quaternion basis(const QuatAlgebra& alg, int index);

  const QuatAlgebra& algebra() const { return alg_; }
  const std::array<Rat, 4>& coords() const { return c_; }
  const Rat& operator[](int index) const { return c_.at(index); }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  bool operator==(const Quaternion& o) const { return alg_ == o.alg_ && c_ == o.c_; }

 private:
  void check_same(const Quaternion& o) const {
    if (!(alg_ == o.alg_))
      throw std::invalid_argument("Quaternion: mixed algebras in arithmetic");
  }

  QuatAlgebra alg_;
  std::array<Rat, 4> c_;
};

Quaternion operator*(const Rat& s, const Quaternion& x);

Quaternion conjugate(const Quaternion& x);
Rat trace(const Quaternion& x);
Rat norm(const Quaternion& x);

// U_n^{p,q} = u_n + u_{n+1} i + u_{n+2} j + u_{n+3} k; zero iff p = q = 0.
Quaternion u_quaternion(const SeqParams& sp, const GLParams& gl, long n,
                        const QuatAlgebra& alg);

}  // namespace quatseq
