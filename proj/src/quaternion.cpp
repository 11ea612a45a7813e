#include "quatseq/quaternion.hpp"

namespace quatseq {

Quaternion Quaternion::basis(const QuatAlgebra& alg, int index) {
  std::array<Rat, 4> c{};
  c.at(index) = 1;
  return Quaternion(alg, std::move(c));
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  check_same(o);
  return Quaternion(alg_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  check_same(o);
  return Quaternion(alg_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]});
}

// Bilinear extension of the basis table:
//   i*j = k,  j*i = -k,  i*k = alpha j,  k*i = -alpha j,
//   j*k = -beta i,  k*j = beta i,  i^2 = alpha,  j^2 = beta,  k^2 = -alpha beta.
Quaternion Quaternion::operator*(const Quaternion& o) const {
  check_same(o);
  const Rat& al = alg_.alpha;
  const Rat& be = alg_.beta;
  const auto& x = c_;
  const auto& y = o.c_;
  Rat r1 = x[0] * y[0] + al * x[1] * y[1] + be * x[2] * y[2] - al * be * x[3] * y[3];
  Rat r2 = x[0] * y[1] + x[1] * y[0] - be * x[2] * y[3] + be * x[3] * y[2];
  Rat r3 = x[0] * y[2] + x[2] * y[0] + al * x[1] * y[3] - al * x[3] * y[1];
  Rat r4 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return Quaternion(alg_, {std::move(r1), std::move(r2), std::move(r3), std::move(r4)});
}

Quaternion operator*(const Rat& s, const Quaternion& x) {
  return Quaternion(x.algebra(),
                    {s * x[0], s * x[1], s * x[2], s * x[3]});
}

Quaternion conjugate(const Quaternion& x) {
  return Quaternion(x.algebra(), {x[0], -x[1], -x[2], -x[3]});
}

Rat trace(const Quaternion& x) { return 2 * x[0]; }

Rat norm(const Quaternion& x) {
  const Rat& al = x.algebra().alpha;
  const Rat& be = x.algebra().beta;
  return x[0] * x[0] - al * x[1] * x[1] - be * x[2] * x[2] + al * be * x[3] * x[3];
}

Quaternion u_quaternion(const SeqParams& sp, const GLParams& gl, long n,
                        const QuatAlgebra& alg) {
  if (n < 0) throw std::invalid_argument("u_quaternion: negative index");
  return Quaternion(alg, {Rat(u_number(sp, gl, n)), Rat(u_number(sp, gl, n + 1)),
                          Rat(u_number(sp, gl, n + 2)), Rat(u_number(sp, gl, n + 3))});
}

}  // namespace quatseq
