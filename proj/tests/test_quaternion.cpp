#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quatseq/quaternion.hpp"

using namespace quatseq;

namespace {

QuatAlgebra hamilton() { return QuatAlgebra(Rat(-1), Rat(-1)); }

Quaternion make(const QuatAlgebra& alg, long c1, long c2, long c3, long c4) {
  return Quaternion(alg, {Rat(c1), Rat(c2), Rat(c3), Rat(c4)});
}

Rat random_small_rat(std::mt19937_64& gen) {
  long num = static_cast<long>(gen() % 21) - 10;
  long den = 1 + static_cast<long>(gen() % 6);
  return make_rat(num, den);
}

Quaternion random_quat(const QuatAlgebra& alg, std::mt19937_64& gen) {
  return Quaternion(alg, {random_small_rat(gen), random_small_rat(gen), random_small_rat(gen),
                          random_small_rat(gen)});
}

QuatAlgebra random_algebra(std::mt19937_64& gen) {
  Rat a = 0, b = 0;
  while (a == 0) a = random_small_rat(gen);
  while (b == 0) b = random_small_rat(gen);
  return QuatAlgebra(a, b);
}

}  // namespace

TEST_CASE("basis products follow the multiplication table") {
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 10; ++rep) {
    QuatAlgebra alg = random_algebra(gen);
    const Rat& al = alg.alpha;
    const Rat& be = alg.beta;
    Quaternion one = Quaternion::one(alg);
    Quaternion i = Quaternion::basis(alg, 1);
    Quaternion j = Quaternion::basis(alg, 2);
    Quaternion k = Quaternion::basis(alg, 3);

    CHECK(i * j == k);
    CHECK(j * i == Rat(-1) * k);
    CHECK(i * i == al * one);
    CHECK(j * j == be * one);
    CHECK(i * k == al * j);
    CHECK(k * i == -al * j);
    CHECK(j * k == -be * i);
    CHECK(k * j == be * i);
    CHECK(k * k == -(al * be) * one);
    for (const Quaternion& e : {one, i, j, k}) {
      CHECK(one * e == e);
      CHECK(e * one == e);
    }
  }
}

TEST_CASE("Hamilton parameters give i^2 = -1") {
  QuatAlgebra alg = hamilton();
  Quaternion i = Quaternion::basis(alg, 1);
  CHECK(i * i == Rat(-1) * Quaternion::one(alg));
}

TEST_CASE("mixed-algebra arithmetic is rejected") {
  Quaternion a = Quaternion::one(hamilton());
  Quaternion b = Quaternion::one(QuatAlgebra(Rat(-1), Rat(2)));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("conjugate, trace and norm") {
  QuatAlgebra alg = hamilton();
  Quaternion one = Quaternion::one(alg);
  CHECK(trace(one) == 2);
  CHECK(norm(one) == 1);

  Quaternion x = make(alg, 1, 1, 1, 1);
  CHECK(norm(x) == 4);

  // alpha = -1, beta = -4 (the l = 1 product -b_3 b_1), pure-i unit
  Quaternion y = make(QuatAlgebra(Rat(-1), Rat(-4)), 0, 1, 0, 0);
  CHECK(norm(y) == 1);

  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 50; ++rep) {
    QuatAlgebra ralg = random_algebra(gen);
    Quaternion u = random_quat(ralg, gen), v = random_quat(ralg, gen);
    CHECK(conjugate(conjugate(u)) == u);
    CHECK(trace(u + v) == trace(u) + trace(v));
    // x * conj(x) must be the scalar norm with zero vector part
    Quaternion prod = u * conjugate(u);
    CHECK(prod[0] == norm(u));
    CHECK(prod[1] == 0);
    CHECK(prod[2] == 0);
    CHECK(prod[3] == 0);
  }
}

TEST_CASE("associativity and norm multiplicativity on random data") {
  std::mt19937_64 gen(12);
  for (int rep = 0; rep < 200; ++rep) {
    QuatAlgebra alg = random_algebra(gen);
    Quaternion x = random_quat(alg, gen), y = random_quat(alg, gen), z = random_quat(alg, gen);
    CHECK((x * y) * z == x * (y * z));
    CHECK(norm(x * y) == norm(x) * norm(y));
  }
}

TEST_CASE("negative parameters force an anisotropic norm") {
  std::mt19937_64 gen(9);
  for (int rep = 0; rep < 100; ++rep) {
    Rat a = -1 - Rat(static_cast<long>(gen() % 8));
    Rat b = -1 - Rat(static_cast<long>(gen() % 8));
    QuatAlgebra alg(a, b);
    Quaternion x = random_quat(alg, gen);
    if (norm(x) == 0) CHECK(x.is_zero());
    if (!x.is_zero()) CHECK(norm(x) > 0);
  }
}

TEST_CASE("u_quaternion windows") {
  QuatAlgebra alg(Rat(-1), Rat(2));
  Quaternion u0 = u_quaternion(SeqParams(2), GLParams{1, 1}, 0, alg);
  CHECK(u0 == make(alg, 3, 2, 7, 16));

  Quaternion zero = u_quaternion(SeqParams(3), GLParams{0, 0}, 5, alg);
  CHECK(zero.is_zero());

  Quaternion fib = u_quaternion(SeqParams(1), GLParams{1, 0}, 1, alg);
  CHECK(fib == make(alg, 0, 1, 1, 2));  // a_0 .. a_3
}

TEST_CASE("u_quaternion vanishes only at p = q = 0") {
  QuatAlgebra alg(Rat(-1), Rat(2));
  for (long l = 1; l <= 3; ++l)
    for (long p = -5; p <= 5; ++p)
      for (long q = -5; q <= 5; ++q)
        for (long n = 0; n <= 20; ++n) {
          bool zero = u_quaternion(SeqParams(l), GLParams{p, q}, n, alg).is_zero();
          CHECK(zero == (p == 0 && q == 0));
        }
}

TEST_CASE("U combinations are linear in the weights") {
  QuatAlgebra alg(Rat(2), Rat(3));
  SeqParams sp(2);
  for (long n : {0L, 1L, 4L})
    for (long m : {2L, 5L})
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          Quaternion lhs = u_quaternion(sp, GLParams{c * 1, c * -2}, n, alg) +
                           u_quaternion(sp, GLParams{d * 3, d * 1}, m, alg);
          Quaternion rhs = Rat(c) * u_quaternion(sp, GLParams{1, -2}, n, alg) +
                           Rat(d) * u_quaternion(sp, GLParams{3, 1}, m, alg);
          CHECK(lhs == rhs);
        }
}
