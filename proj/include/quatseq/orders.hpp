#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatseq/linsolve.hpp"
#include "quatseq/quaternion.hpp"
#include "quatseq/sequences.hpp"
#include "quatseq/symbol3.hpp"

namespace quatseq {

// Index and weights of one scaled generator: (l^2+4) u_n^{p,q} in the scalar
// setting, (l^2+4) U_n^{p,q} in an algebra.
struct GeneratorTerm {
  long n;
  long p;
  long q;
};

// Integer combination of scaled generators plus a multiple of the adjoined 1.
struct Combination {
  std::vector<GeneratorTerm> terms;
  long unit = 0;
};

// Six-term expansion of (l^2+4) u_n^{p,q} * (l^2+4) u_m^{p',q'} for n <= m,
// n+m >= 2 (indices m+n, m-n, m-n, m-n+1, m+n-2, m+n-1).  Terms 3 and 4 carry
// (-1)^n on their pq' weights; the printed (-1)^{n-1} fails numerically (the
// l=1 anchor gives 150 instead of 100).  Callers swap operands for n > m.
Combination scalar_product_decompose(const SeqParams& sp, const GeneratorTerm& g1,
                                     const GeneratorTerm& g2);

// Sum of (l^2+4)-scaled terms plus the unit, in each setting.
Int eval_combination(const SeqParams& sp, const Combination& comb);
Quaternion eval_combination(const SeqParams& sp, const Combination& comb,
                            const QuatAlgebra& alg);
SymbolElem eval_combination(const SeqParams& sp, const Combination& comb,
                            const SymAlgebra& alg);

// Integer of Z[eps].  Lattice witnesses over the symbol algebra need eps
// components; quaternion witnesses keep b = 0.
struct CycInt {
  Int a;
  Int b;
  bool is_zero() const { return a == 0 && b == 0; }
  CycRat to_cyc() const { return CycRat(Rat(a), Rat(b)); }
};

struct WitnessTerm {
  long n;
  CycInt p;
  CycInt q;
};

// Combination produced by lattice solving: coefficients may be large and, in
// the symbol setting, non-rational.
struct Witness {
  std::vector<WitnessTerm> terms;
  CycInt unit;
};

Quaternion eval_witness(const SeqParams& sp, const Witness& w, const QuatAlgebra& alg);
SymbolElem eval_witness(const SeqParams& sp, const Witness& w, const SymAlgebra& alg);

struct IndexWindow {
  long lo = 0;
  long hi = 8;
};

// Exact membership of elem in the lattice spanned by the scaled generator
// windows {(l^2+4) U_n^{1,0}, (l^2+4) U_n^{0,1} : n in window} and the unit,
// over Z for quaternions and over Z[eps] for symbol elements.  Requires
// integral algebra parameters and coordinates.  A witness re-evaluates to elem
// exactly; absence means no solution within the window.
std::optional<Witness> lattice_membership(const SeqParams& sp, const QuatAlgebra& alg,
                                          const Quaternion& elem, const IndexWindow& window);
std::optional<Witness> lattice_membership(const SeqParams& sp, const SymAlgebra& alg,
                                          const SymbolElem& elem, const IndexWindow& window);

struct ClosureFailure {
  std::size_t trial;
  GeneratorTerm g1, g2;
  std::string reason;
};

struct ClosureReport {
  std::size_t trials = 0;
  std::vector<ClosureFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Deterministic randomized closure check: multiplies random pairs of scaled
// generators (indices within [0,8], |p|,|q| <= 5) in the target algebra,
// verifies the scalar decomposition identity where its index domain applies,
// and demands a lattice witness for every product (default window
// [0, n+m+4], retried once doubled).  Failures are data, not errors.
ClosureReport closure_check(const SeqParams& sp, const QuatAlgebra& alg, std::size_t trials,
                            unsigned long seed);
ClosureReport closure_check(const SeqParams& sp, const SymAlgebra& alg, std::size_t trials,
                            unsigned long seed);

}  // namespace quatseq
