#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "quatseq/numthy.hpp"
#include "quatseq/rational.hpp"
#include "quatseq/sequences.hpp"

namespace quatseq {

// Rational point on the conic alpha x^2 + beta y^2 = z^2, not all coordinates zero.
struct ConicPoint {
  Rat x, y, z;
};

enum class Verdict { kSplit, kDivision };

// Division evidence: alpha < 0 and beta < 0 make the norm form positive definite.
struct PositiveDefiniteNorm {};

// Division evidence: beta = 3 (mod 4) obstructs -x^2 + beta y^2 = z^2 over Z.
struct Mod4Obstruction {
  Int product;
  int residue;
};

struct HilbertEntry {
  Place place;
  int symbol;
};

// The full list of computed local symbols; on a division verdict at least one is -1.
struct HilbertEvidence {
  std::vector<HilbertEntry> symbols;
};

using Evidence = std::variant<ConicPoint, PositiveDefiniteNorm, Mod4Obstruction, HilbertEvidence>;

struct Classification {
  Verdict verdict;
  Evidence evidence;
};

// Exact check of alpha x^2 + beta y^2 = z^2 plus the not-all-zero condition.
bool verify_conic_point(const Rat& alpha, const Rat& beta, const ConicPoint& pt);

// Exhaustive scan over integer triples with coordinates bounded by height,
// after clearing denominators.  Returns the lexicographically smallest point
// found; absence is never a proof of division.
std::optional<ConicPoint> conic_search(const Rat& alpha, const Rat& beta, long height);

// Split/division decision for H(alpha, beta) over Q via local Hilbert symbols
// at infinity, 2, and the odd primes of alpha and beta.  A split verdict tries
// to attach a conic point; division evidence names a place with symbol -1.
Classification classify(const Rat& alpha, const Rat& beta, long conic_height = 200,
                        unsigned long trial_limit = kDefaultTrialLimit);

// The certificate families.  Cases kI, kII, kV, kXI are statements about
// Fibonacci numbers and always run the l = 1 sequences.
enum class FamilyCase { kI, kII, kIII, kIV, kV, kVI, kVII, kVIII, kIX, kX, kXI };

const char* family_name(FamilyCase c);
std::optional<FamilyCase> family_from_name(const std::string& name);

// The algebra each case classifies, as (alpha, beta).
std::pair<Rat, Rat> family_algebra(FamilyCase c, const SeqParams& sp, long n);

// Certificate with the family's explicit evidence.  Empty result means the
// case's representability criterion is not satisfied (case kX only); verdicts
// are never claimed in that situation.  Violated congruence or parity
// preconditions throw std::invalid_argument.
std::optional<Classification> family_certificate(FamilyCase c, const SeqParams& sp, long n);

}  // namespace quatseq
