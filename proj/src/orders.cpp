#include "quatseq/orders.hpp"

#include <map>
#include <random>

namespace quatseq {

Combination scalar_product_decompose(const SeqParams& sp, const GeneratorTerm& g1,
                                     const GeneratorTerm& g2) {
  const long n = g1.n, m = g2.n;
  if (n < 0 || m < 0) throw std::invalid_argument("scalar_product_decompose: negative index");
  if (n > m)
    throw std::invalid_argument(
        "scalar_product_decompose: requires n <= m (swap operands; the product commutes)");
  if (n + m < 2) throw std::invalid_argument("scalar_product_decompose: requires n + m >= 2");

  const long L = sp.l * sp.l + 4;
  const long l = sp.l;
  const long s = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  const long p = g1.p, q = g1.q, p2 = g2.p, q2 = g2.q;

  Combination comb;
  comb.terms = {
      {m + n, L * p * q2, L * q * q2},
      {m - n, s * L * p2 * q, s * L * q * q2},
      {m - n, s * L * p * q2, s * p * p2},
      {m - n + 1, s * l * L * p * q2, 0},
      {m + n - 2, L * p2 * q, p * p2},
      {m + n - 1, l * L * p2 * q, 0},
  };
  return comb;
}

Int eval_combination(const SeqParams& sp, const Combination& comb) {
  Int disc = sp.discriminant();
  Int total = comb.unit;
  for (const GeneratorTerm& t : comb.terms)
    total += disc * u_number(sp, GLParams{t.p, t.q}, t.n);
  return total;
}

Quaternion eval_combination(const SeqParams& sp, const Combination& comb,
                            const QuatAlgebra& alg) {
  Rat disc(sp.discriminant());
  Quaternion total = Rat(comb.unit) * Quaternion::one(alg);
  for (const GeneratorTerm& t : comb.terms)
    total = total + disc * u_quaternion(sp, GLParams{t.p, t.q}, t.n, alg);
  return total;
}

SymbolElem eval_combination(const SeqParams& sp, const Combination& comb,
                            const SymAlgebra& alg) {
  CycRat disc{Rat(sp.discriminant())};
  SymbolElem total = CycRat(Rat(comb.unit)) * SymbolElem::one(alg);
  for (const GeneratorTerm& t : comb.terms)
    total = total + disc * u_symbol(sp, GLParams{t.p, t.q}, t.n, alg);
  return total;
}

Quaternion eval_witness(const SeqParams& sp, const Witness& w, const QuatAlgebra& alg) {
  if (w.unit.b != 0)
    throw std::invalid_argument("eval_witness: eps component in a quaternion witness");
  Rat disc(sp.discriminant());
  Quaternion total = Rat(w.unit.a) * Quaternion::one(alg);
  for (const WitnessTerm& t : w.terms) {
    if (t.p.b != 0 || t.q.b != 0)
      throw std::invalid_argument("eval_witness: eps component in a quaternion witness");
    Quaternion gen = Rat(t.p.a) * u_quaternion(sp, GLParams{1, 0}, t.n, alg) +
                     Rat(t.q.a) * u_quaternion(sp, GLParams{0, 1}, t.n, alg);
    total = total + disc * gen;
  }
  return total;
}

SymbolElem eval_witness(const SeqParams& sp, const Witness& w, const SymAlgebra& alg) {
  CycRat disc{Rat(sp.discriminant())};
  SymbolElem total = w.unit.to_cyc() * SymbolElem::one(alg);
  for (const WitnessTerm& t : w.terms) {
    SymbolElem gen = t.p.to_cyc() * u_symbol(sp, GLParams{1, 0}, t.n, alg) +
                     t.q.to_cyc() * u_symbol(sp, GLParams{0, 1}, t.n, alg);
    total = total + disc * gen;
  }
  return total;
}

namespace {

void check_window(const IndexWindow& w) {
  if (w.lo < 0 || w.lo > w.hi) throw std::invalid_argument("lattice window must satisfy 0 <= lo <= hi");
}

// Columns: per index k the scaled windows U_k^{1,0}, U_k^{0,1} (and, over
// Z[eps], their eps multiples), then the unit block.
IntMatrix quaternion_generator_matrix(const SeqParams& sp, const IndexWindow& w) {
  Int disc = sp.discriminant();
  std::size_t count = static_cast<std::size_t>(w.hi - w.lo + 1);
  IntMatrix m(4, 2 * count + 1);
  for (std::size_t c = 0; c < count; ++c) {
    long k = w.lo + static_cast<long>(c);
    for (int r = 0; r < 4; ++r) {
      m.at(r, 2 * c) = disc * seq_a(sp, k + r - 1);      // u^{1,0} window
      m.at(r, 2 * c + 1) = disc * seq_b(sp, k + r);      // u^{0,1} window
    }
  }
  m.at(0, 2 * count) = 1;  // adjoined unit
  return m;
}

IntMatrix symbol_generator_matrix(const SeqParams& sp, const IndexWindow& w) {
  Int disc = sp.discriminant();
  std::size_t count = static_cast<std::size_t>(w.hi - w.lo + 1);
  // Rows 2i / 2i+1 hold the rational / eps parts of coefficient slot i.
  IntMatrix m(18, 4 * count + 2);
  for (std::size_t c = 0; c < count; ++c) {
    long k = w.lo + static_cast<long>(c);
    for (int r = 0; r < 9; ++r) {
      Int ua = disc * seq_a(sp, k + r - 1);
      Int ub = disc * seq_b(sp, k + r);
      m.at(2 * r, 4 * c) = ua;
      m.at(2 * r, 4 * c + 1) = ub;
      m.at(2 * r + 1, 4 * c + 2) = ua;  // eps * generator
      m.at(2 * r + 1, 4 * c + 3) = ub;
    }
  }
  m.at(0, 4 * count) = 1;
  m.at(1, 4 * count + 1) = 1;  // eps * unit
  return m;
}

Witness quaternion_witness(const std::vector<Int>& x, const IndexWindow& w) {
  std::size_t count = static_cast<std::size_t>(w.hi - w.lo + 1);
  Witness out;
  for (std::size_t c = 0; c < count; ++c) {
    CycInt p{x[2 * c], 0}, q{x[2 * c + 1], 0};
    if (p.is_zero() && q.is_zero()) continue;
    out.terms.push_back({w.lo + static_cast<long>(c), std::move(p), std::move(q)});
  }
  out.unit = CycInt{x[2 * count], 0};
  return out;
}

Witness symbol_witness(const std::vector<Int>& x, const IndexWindow& w) {
  std::size_t count = static_cast<std::size_t>(w.hi - w.lo + 1);
  Witness out;
  for (std::size_t c = 0; c < count; ++c) {
    CycInt p{x[4 * c], x[4 * c + 2]}, q{x[4 * c + 1], x[4 * c + 3]};
    if (p.is_zero() && q.is_zero()) continue;
    out.terms.push_back({w.lo + static_cast<long>(c), std::move(p), std::move(q)});
  }
  out.unit = CycInt{x[4 * count], x[4 * count + 1]};
  return out;
}

std::vector<Int> quaternion_rhs(const Quaternion& elem) {
  std::vector<Int> b;
  b.reserve(4);
  for (const Rat& v : elem.coords()) b.push_back(to_integer(v));
  return b;
}

std::vector<Int> symbol_rhs(const SymbolElem& elem) {
  std::vector<Int> b;
  b.reserve(18);
  for (const CycRat& v : elem.coeffs()) {
    b.push_back(to_integer(v.a));
    b.push_back(to_integer(v.b));
  }
  return b;
}

void require_integral(const QuatAlgebra& alg) {
  if (!is_integer(alg.alpha) || !is_integer(alg.beta))
    throw std::invalid_argument("lattice_membership: algebra parameters must be integers");
}

void require_integral(const SymAlgebra& alg) {
  if (!is_integer(alg.alpha1.a) || !is_integer(alg.alpha1.b) || !is_integer(alg.alpha2.a) ||
      !is_integer(alg.alpha2.b))
    throw std::invalid_argument("lattice_membership: algebra parameters must lie in Z[eps]");
}

}  // namespace

std::optional<Witness> lattice_membership(const SeqParams& sp, const QuatAlgebra& alg,
                                          const Quaternion& elem, const IndexWindow& window) {
  check_window(window);
  require_integral(alg);
  LatticeSolver solver(quaternion_generator_matrix(sp, window));
  auto x = solver.solve(quaternion_rhs(elem));
  if (!x) return std::nullopt;
  return quaternion_witness(*x, window);
}

std::optional<Witness> lattice_membership(const SeqParams& sp, const SymAlgebra& alg,
                                          const SymbolElem& elem, const IndexWindow& window) {
  check_window(window);
  require_integral(alg);
  LatticeSolver solver(symbol_generator_matrix(sp, window));
  auto x = solver.solve(symbol_rhs(elem));
  if (!x) return std::nullopt;
  return symbol_witness(*x, window);
}

namespace {

// Shared trial loop; Context supplies the product, the solve and the witness
// re-evaluation for its algebra.
template <class MakeMatrix, class MakeRhs, class MakeWitness, class Reeval>
ClosureReport run_closure(const SeqParams& sp, std::size_t trials, unsigned long seed,
                          MakeMatrix make_matrix, MakeRhs make_rhs, MakeWitness make_witness,
                          Reeval reeval) {
  std::mt19937_64 gen(seed);
  auto draw = [&gen](long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long long>(hi - lo + 1));
  };

  std::map<long, LatticeSolver> solvers;  // keyed by window end
  auto solver_for = [&](long hi) -> LatticeSolver& {
    auto it = solvers.find(hi);
    if (it == solvers.end())
      it = solvers.emplace(hi, LatticeSolver(make_matrix(IndexWindow{0, hi}))).first;
    return it->second;
  };

  Int disc = sp.discriminant();
  ClosureReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    GeneratorTerm g1{draw(0, 8), draw(-5, 5), draw(-5, 5)};
    GeneratorTerm g2{draw(0, 8), draw(-5, 5), draw(-5, 5)};
    auto fail = [&](std::string reason) {
      report.failures.push_back({t, g1, g2, std::move(reason)});
    };

    // Scalar decomposition identity, whenever the six indices are in range.
    const GeneratorTerm& lo = (g1.n <= g2.n) ? g1 : g2;
    const GeneratorTerm& hi = (g1.n <= g2.n) ? g2 : g1;
    if (lo.n + hi.n >= 2) {
      Int lhs = disc * u_number(sp, GLParams{lo.p, lo.q}, lo.n) * disc *
                u_number(sp, GLParams{hi.p, hi.q}, hi.n);
      Int rhs = eval_combination(sp, scalar_product_decompose(sp, lo, hi));
      if (lhs != rhs) {
        fail("scalar decomposition identity violated");
        continue;
      }
    }

    auto rhs_vec = make_rhs(g1, g2);
    long base = g1.n + g2.n + 4;
    auto x = solver_for(base).solve(rhs_vec);
    IndexWindow used{0, base};
    if (!x) {
      used.hi = 2 * base;
      x = solver_for(used.hi).solve(rhs_vec);
    }
    if (!x) {
      fail("product has no lattice witness");
      continue;
    }
    if (!reeval(make_witness(*x, used), rhs_vec)) fail("witness failed to re-evaluate");
  }
  return report;
}

}  // namespace

ClosureReport closure_check(const SeqParams& sp, const QuatAlgebra& alg, std::size_t trials,
                            unsigned long seed) {
  require_integral(alg);
  Rat disc(sp.discriminant());
  return run_closure(
      sp, trials, seed,
      [&](const IndexWindow& w) { return quaternion_generator_matrix(sp, w); },
      [&](const GeneratorTerm& g1, const GeneratorTerm& g2) {
        Quaternion product = (disc * u_quaternion(sp, GLParams{g1.p, g1.q}, g1.n, alg)) *
                             (disc * u_quaternion(sp, GLParams{g2.p, g2.q}, g2.n, alg));
        return quaternion_rhs(product);
      },
      [&](const std::vector<Int>& x, const IndexWindow& w) { return quaternion_witness(x, w); },
      [&](const Witness& w, const std::vector<Int>& rhs) {
        return quaternion_rhs(eval_witness(sp, w, alg)) == rhs;
      });
}

ClosureReport closure_check(const SeqParams& sp, const SymAlgebra& alg, std::size_t trials,
                            unsigned long seed) {
  require_integral(alg);
  CycRat disc{Rat(sp.discriminant())};
  return run_closure(
      sp, trials, seed,
      [&](const IndexWindow& w) { return symbol_generator_matrix(sp, w); },
      [&](const GeneratorTerm& g1, const GeneratorTerm& g2) {
        SymbolElem product = (disc * u_symbol(sp, GLParams{g1.p, g1.q}, g1.n, alg)) *
                             (disc * u_symbol(sp, GLParams{g2.p, g2.q}, g2.n, alg));
        return symbol_rhs(product);
      },
      [&](const std::vector<Int>& x, const IndexWindow& w) { return symbol_witness(x, w); },
      [&](const Witness& w, const std::vector<Int>& rhs) {
        return symbol_rhs(eval_witness(sp, w, alg)) == rhs;
      });
}

}  // namespace quatseq
