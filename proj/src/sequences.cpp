#include "quatseq/sequences.hpp"

namespace quatseq {

Int seq_a(const SeqParams& sp, long n) {
  if (n < 0) {
    Int v = seq_a(sp, -n);
    return ((-n) % 2 == 0) ? Int(-v) : v;  // a_{-n} = (-1)^{n+1} a_n
  }
  if (n == 0) return 0;
  Int prev = 0, cur = 1;
  for (long i = 2; i <= n; ++i) {
    Int next = sp.l * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Int seq_b(const SeqParams& sp, long n) {
  if (n < 0) throw std::invalid_argument("seq_b: negative index " + std::to_string(n));
  if (n == 0) return 2;
  Int prev = 2, cur = sp.l;
  for (long i = 2; i <= n; ++i) {
    Int next = sp.l * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

QuadExt root_alpha(const SeqParams& sp) {
  return QuadExt(sp.discriminant(), make_rat(sp.l, 2), make_rat(1, 2));
}

QuadExt root_beta(const SeqParams& sp) {
  return QuadExt(sp.discriminant(), make_rat(sp.l, 2), make_rat(-1, 2));
}

Int require_integer_value(const QuadExt& v, const char* who) {
  if (!v.is_rational()) throw std::logic_error(std::string(who) + ": nonzero radical component");
  if (!is_integer(v.rational_part()))
    throw std::logic_error(std::string(who) + ": non-integral rational part");
  return v.rational_part().get_num();
}

}  // namespace

Int binet_a(const SeqParams& sp, long n) {
  if (n < 0) throw std::invalid_argument("binet_a: negative index");
  QuadExt alpha = root_alpha(sp), beta = root_beta(sp);
  QuadExt sqrt_d(sp.discriminant(), 0, 1);  // alpha - beta
  QuadExt v = (alpha.pow(n) - beta.pow(n)) / sqrt_d;
  return require_integer_value(v, "binet_a");
}

Int binet_b(const SeqParams& sp, long n) {
  if (n < 0) throw std::invalid_argument("binet_b: negative index");
  QuadExt alpha = root_alpha(sp), beta = root_beta(sp);
  QuadExt v = alpha.pow(n) + beta.pow(n);
  return require_integer_value(v, "binet_b");
}

Int u_number(const SeqParams& sp, const GLParams& gl, long n) {
  if (n < 0) throw std::invalid_argument("u_number: negative index");
  return Int(gl.p) * seq_a(sp, n - 1) + Int(gl.q) * seq_b(sp, n);
}

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::P31_I: return "P31_I";
    case IdentityId::P31_II: return "P31_II";
    case IdentityId::P31_III: return "P31_III";
    case IdentityId::P31_IV: return "P31_IV";
    case IdentityId::P31_V: return "P31_V";
    case IdentityId::P31_VI: return "P31_VI";
    case IdentityId::P31_VII: return "P31_VII";
    case IdentityId::P32_I: return "P32_I";
    case IdentityId::P32_II: return "P32_II";
    case IdentityId::R35: return "R35";
  }
  return "?";
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
  static const IdentityId all[] = {
      IdentityId::P31_I,  IdentityId::P31_II, IdentityId::P31_III, IdentityId::P31_IV,
      IdentityId::P31_V,  IdentityId::P31_VI, IdentityId::P31_VII, IdentityId::P32_I,
      IdentityId::P32_II, IdentityId::R35,
  };
  for (IdentityId id : all)
    if (name == identity_name(id)) return id;
  return std::nullopt;
}

IdentityReport identity_check(IdentityId id, const SeqParams& sp, long n, long m,
                              std::optional<GLParams> gl) {
  auto need = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string(identity_name(id)) + ": " + what);
  };
  const Int disc = sp.discriminant();
  long sign_n = (n % 2 == 0) ? 1 : -1;  // (-1)^n, n >= 0 below
  Rat lhs, rhs;
  bool uses_m = false;

  switch (id) {
    case IdentityId::P31_I:
      need(n >= 0 && m >= 0, "requires n, m >= 0");
      uses_m = true;
      lhs = Rat(seq_b(sp, n) * seq_b(sp, n + m));
      rhs = Rat(seq_b(sp, 2 * n + m) + sign_n * seq_b(sp, m));
      break;
    case IdentityId::P31_II:
      need(n >= 0 && m >= 0, "requires n, m >= 0");
      uses_m = true;
      lhs = Rat(seq_a(sp, n) * seq_b(sp, n + m));
      rhs = Rat(seq_a(sp, 2 * n + m) - sign_n * seq_a(sp, m));
      break;
    case IdentityId::P31_III:
      need(n >= 0 && m >= 0, "requires n, m >= 0");
      uses_m = true;
      lhs = Rat(seq_a(sp, n + m) * seq_b(sp, n));
      rhs = Rat(seq_a(sp, 2 * n + m) + sign_n * seq_a(sp, m));
      break;
    case IdentityId::P31_IV:
      need(n >= 0 && m >= 0, "requires n, m >= 0");
      uses_m = true;
      lhs = Rat(seq_a(sp, n) * seq_a(sp, n + m));
      rhs = make_rat(seq_b(sp, 2 * n + m) - sign_n * seq_b(sp, m), disc);
      break;
    case IdentityId::P31_V:
      need(n >= 0, "requires n >= 0");
      lhs = Rat(seq_b(sp, n) + seq_b(sp, n + 2));
      rhs = Rat(disc * seq_a(sp, n + 1));
      break;
    case IdentityId::P31_VI:
      need(n >= 0, "requires n >= 0");
      lhs = Rat(seq_a(sp, n) * seq_a(sp, n) + seq_a(sp, n + 1) * seq_a(sp, n + 1));
      rhs = Rat(seq_a(sp, 2 * n + 1));
      break;
    case IdentityId::P31_VII:
      need(n >= 0, "requires n >= 0");
      lhs = Rat(seq_b(sp, n) * seq_b(sp, n) + seq_b(sp, n + 1) * seq_b(sp, n + 1));
      rhs = Rat(disc * seq_a(sp, 2 * n + 1));
      break;
    case IdentityId::P32_I:
      need(n >= 1, "requires n >= 1");
      lhs = Rat(seq_a(sp, n + 1) * seq_a(sp, n - 1) - seq_a(sp, n) * seq_a(sp, n));
      rhs = Rat(sign_n);
      break;
    case IdentityId::P32_II:
      // The right side is (-1)^{n-1} (l^2+4); the statement's (-1)^n does not
      // match the l=1 Lucas case b_2 b_0 - b_1^2 = +5.
      need(n >= 1, "requires n >= 1");
      lhs = Rat(seq_b(sp, n + 1) * seq_b(sp, n - 1) - seq_b(sp, n) * seq_b(sp, n));
      rhs = Rat(-sign_n * disc);
      break;
    case IdentityId::R35:
      need(n >= 1, "requires n >= 1");
      need(gl.has_value(), "requires p, q");
      lhs = Rat(Int(gl->p) * seq_a(sp, n + 1) + Int(gl->q) * seq_b(sp, n));
      rhs = Rat(u_number(sp, *gl, n) +
                u_number(sp, GLParams{gl->p * sp.l, 0}, n + 1));
      break;
  }

  IdentityReport rep;
  rep.id = id;
  rep.l = sp.l;
  rep.n = n;
  rep.m = uses_m ? m : 0;
  rep.gl = gl;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.holds = (lhs == rhs);
  return rep;
}

ParityFacts parity_facts(const SeqParams& sp, long n) {
  ParityFacts facts;
  facts.b_even = mpz_even_p(seq_b(sp, n).get_mpz_t());
  if (n >= 1) {
    Int prod = seq_b(sp, n - 1) * seq_b(sp, n + 1);
    facts.product_mod4 = static_cast<int>(mpz_fdiv_ui(prod.get_mpz_t(), 4));
  }
  return facts;
}

}  // namespace quatseq
