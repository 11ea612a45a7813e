#include "quatseq/classify.hpp"

#include <string>

namespace quatseq {

bool verify_conic_point(const Rat& alpha, const Rat& beta, const ConicPoint& pt) {
  if (pt.x == 0 && pt.y == 0 && pt.z == 0) return false;
  return alpha * pt.x * pt.x + beta * pt.y * pt.y == pt.z * pt.z;
}

std::optional<ConicPoint> conic_search(const Rat& alpha, const Rat& beta, long height) {
  if (height < 1) throw std::invalid_argument("conic_search: height must be >= 1");
  // Clear denominators: a X^2 + b Y^2 = c Z^2 with integer a, b, c.  Any
  // integer solution of this form satisfies the original conic directly.
  Int a = alpha.get_num() * beta.get_den();
  Int b = beta.get_num() * alpha.get_den();
  Int c = alpha.get_den() * beta.get_den();
  for (Int x = 0; x <= height; ++x)
    for (Int y = (x == 0) ? 1 : 0; y <= height; ++y) {
      Int t = a * x * x + b * y * y;
      if (t < 0 || !mpz_divisible_p(t.get_mpz_t(), c.get_mpz_t())) continue;
      Int zz = t / c;
      if (!mpz_perfect_square_p(zz.get_mpz_t())) continue;
      Int z;
      mpz_sqrt(z.get_mpz_t(), zz.get_mpz_t());
      if (z > height) continue;
      ConicPoint pt{Rat(x), Rat(y), Rat(z)};
      if (!verify_conic_point(alpha, beta, pt))
        throw std::logic_error("conic_search: candidate failed verification");
      return pt;
    }
  return std::nullopt;
}

Classification classify(const Rat& alpha, const Rat& beta, long conic_height,
                        unsigned long trial_limit) {
  if (alpha == 0 || beta == 0)
    throw std::invalid_argument("classify: algebra parameters must be nonzero");

  HilbertEvidence ev;
  int product = 1;
  bool split = true;
  for (const Place& v : relevant_places(alpha, beta, trial_limit)) {
    int s = hilbert_symbol(alpha, beta, v);
    product *= s;
    if (s == -1) split = false;
    ev.symbols.push_back({v, s});
  }
  if (product != 1)
    throw std::logic_error("classify: Hilbert reciprocity self-check failed");

  if (!split) return Classification{Verdict::kDivision, std::move(ev)};

  if (auto pt = conic_search(alpha, beta, conic_height))
    return Classification{Verdict::kSplit, std::move(*pt)};
  return Classification{Verdict::kSplit, std::move(ev)};
}

const char* family_name(FamilyCase c) {
  switch (c) {
    case FamilyCase::kI: return "i";
    case FamilyCase::kII: return "ii";
    case FamilyCase::kIII: return "iii";
    case FamilyCase::kIV: return "iv";
    case FamilyCase::kV: return "v";
    case FamilyCase::kVI: return "vi";
    case FamilyCase::kVII: return "vii";
    case FamilyCase::kVIII: return "viii";
    case FamilyCase::kIX: return "ix";
    case FamilyCase::kX: return "x";
    case FamilyCase::kXI: return "xi";
  }
  return "?";
}

std::optional<FamilyCase> family_from_name(const std::string& name) {
  static const FamilyCase all[] = {
      FamilyCase::kI,   FamilyCase::kII, FamilyCase::kIII, FamilyCase::kIV,
      FamilyCase::kV,   FamilyCase::kVI, FamilyCase::kVII, FamilyCase::kVIII,
      FamilyCase::kIX,  FamilyCase::kX,  FamilyCase::kXI,
  };
  for (FamilyCase c : all)
    if (name == family_name(c)) return c;
  return std::nullopt;
}

namespace {

SeqParams effective_params(FamilyCase c, const SeqParams& sp) {
  switch (c) {
    case FamilyCase::kI:
    case FamilyCase::kII:
    case FamilyCase::kV:
    case FamilyCase::kXI:
      return SeqParams(1);  // Fibonacci statements
    default:
      return sp;
  }
}

}  // namespace

std::pair<Rat, Rat> family_algebra(FamilyCase c, const SeqParams& sp, long n) {
  SeqParams ep = effective_params(c, sp);
  switch (c) {
    case FamilyCase::kI:
    case FamilyCase::kIII:
      return {Rat(-1), Rat(seq_a(ep, 2 * n + 1))};
    case FamilyCase::kII:
    case FamilyCase::kIV:
      return {Rat(-1), Rat(ep.discriminant() * seq_a(ep, 2 * n + 1))};
    case FamilyCase::kV:
    case FamilyCase::kVI:
      return {Rat(-1), Rat(seq_a(ep, 2 * n + 1) * seq_a(ep, 2 * n - 1))};
    case FamilyCase::kVII:
      return {Rat(-1), Rat(-seq_b(ep, n + 1) * seq_b(ep, n - 1))};
    case FamilyCase::kVIII:
      return {Rat(1), Rat(seq_b(ep, n + 1) * seq_b(ep, n - 1))};
    case FamilyCase::kIX:
    case FamilyCase::kX:
      return {Rat(-1), Rat(seq_b(ep, n + 1) * seq_b(ep, n - 1))};
    case FamilyCase::kXI:
      return {Rat(-9), Rat(seq_a(ep, n))};
  }
  throw std::logic_error("family_algebra: unreachable");
}

std::optional<Classification> family_certificate(FamilyCase c, const SeqParams& sp, long n) {
  if (n < 1)
    throw std::invalid_argument(std::string("family ") + family_name(c) + ": requires n >= 1");
  SeqParams ep = effective_params(c, sp);
  auto [alpha, beta] = family_algebra(c, sp, n);

  auto split_with = [&](ConicPoint pt) -> Classification {
    if (!verify_conic_point(alpha, beta, pt))
      throw std::logic_error(std::string("family ") + family_name(c) +
                             ": certificate point failed verification");
    return Classification{Verdict::kSplit, std::move(pt)};
  };

  switch (c) {
    case FamilyCase::kI:
    case FamilyCase::kIII:
      // -a_n^2 + a_{2n+1} = a_{n+1}^2
      return split_with({Rat(seq_a(ep, n)), Rat(1), Rat(seq_a(ep, n + 1))});
    case FamilyCase::kII:
    case FamilyCase::kIV:
      // -b_n^2 + (l^2+4) a_{2n+1} = b_{n+1}^2
      return split_with({Rat(seq_b(ep, n)), Rat(1), Rat(seq_b(ep, n + 1))});
    case FamilyCase::kV:
    case FamilyCase::kVI:
      // -1 + a_{2n+1} a_{2n-1} = a_{2n}^2
      return split_with({Rat(n % 2 == 0 ? 1 : -1), Rat(1), Rat(seq_a(ep, 2 * n))});
    case FamilyCase::kVII: {
      if (!(alpha < 0 && beta < 0))
        throw std::logic_error("family vii: definiteness condition violated");
      return Classification{Verdict::kDivision, PositiveDefiniteNorm{}};
    }
    case FamilyCase::kVIII: {
      auto sol = pythagorean_family(to_integer(beta), 1, 1);
      return split_with({Rat(sol[0]), Rat(sol[1]), Rat(sol[2])});
    }
    case FamilyCase::kIX: {
      if (ep.l % 2 == 0)
        throw std::invalid_argument("family ix: requires odd l");
      if (n % 6 != 0)
        throw std::invalid_argument("family ix: requires n = 0 (mod 6)");
      Int product = to_integer(beta);
      int residue = static_cast<int>(mpz_fdiv_ui(product.get_mpz_t(), 4));
      if (residue != 3)
        throw std::logic_error("family ix: product residue mod 4 is not 3");
      Classification check = classify(alpha, beta, /*conic_height=*/1);
      if (check.verdict != Verdict::kDivision)
        throw std::logic_error("family ix: Hilbert decision disagrees with the obstruction");
      return Classification{Verdict::kDivision, Mod4Obstruction{product, residue}};
    }
    case FamilyCase::kX: {
      if (n % 6 == 0)
        throw std::invalid_argument("family x: requires 6 not dividing n");
      auto rep = two_squares(to_integer(beta));
      if (!rep) return std::nullopt;  // representability criterion not satisfied
      // -x0^2 + (x0^2 + z0^2) = z0^2
      return split_with({Rat(rep->x), Rat(1), Rat(rep->y)});
    }
    case FamilyCase::kXI: {
      if (n % 16 != 7)
        throw std::invalid_argument("family xi: requires n = 7 (mod 16)");
      auto rep = rep_x2_9y2(to_integer(beta));
      if (!rep)
        throw std::logic_error("family xi: expected representation f_n = x^2 + 9y^2 missing");
      // -9 y0^2 + f_n = x0^2
      return split_with({Rat(rep->second), Rat(1), Rat(rep->first)});
    }
  }
  throw std::logic_error("family_certificate: unreachable");
}

}  // namespace quatseq
