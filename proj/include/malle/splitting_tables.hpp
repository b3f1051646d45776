#pragma once

// Tame splitting patterns (e, f data of a prime in a field), the pattern
// grammar "(1^2 12)", inertia and decomposition orbits in S_d x A, and the
// discriminant valuation tables for S_d x C_p.

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "malle/group_model.hpp"
#include "malle/perm_core.hpp"

namespace malle {

struct PrimeFactor {
  int e = 1;  // ramification index
  int f = 1;  // inertial degree

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

class SplittingPattern {
 public:
  SplittingPattern() = default;
  // Any order; stored with e descending, then f ascending.
  explicit SplittingPattern(std::vector<PrimeFactor> factors);

  // "(" token+ ")" where a token is f or f^e; f and e are a single digit or
  // "{digits}", and whitespace between tokens is optional ("(1^41)" is 1^4
  // followed by 1). If expected_degree > 0 the pattern must have that degree.
  static SplittingPattern parse(std::string_view text, int expected_degree = 0);

  const std::vector<PrimeFactor>& factors() const noexcept { return factors_; }
  int degree() const noexcept;
  bool is_unramified() const noexcept;
  // sum f (e - 1): the discriminant valuation of a tamely ramified prime.
  int disc_valuation() const noexcept;
  // The ramification indices repeated f times: the cycle type of an inertia generator.
  CycleType inertia_type() const;

  // Ramified tokens separated by spaces, then the unramified f values
  // juxtaposed: "(1^2 12)", "(1^{10} 1^5 1^5 2^5)", "(111)".
  std::string to_string() const;

  friend bool operator==(const SplittingPattern&, const SplittingPattern&) = default;
  friend bool operator<(const SplittingPattern& a, const SplittingPattern& b);

 private:
  std::vector<PrimeFactor> factors_;
};

// Cycle lengths of (g, h_reg) on the d|A| pairs: the ramification indices of
// the primes of FK above p. Throws ValidationError if g is not of degree d or
// h is not in A.
CycleType inertia_orbits(const CycleType& g, const AbelianElement& h, int d, const AbelianGroup& A);

// Patterns in F, K and FK cut out by one decomposition group D = <iota, phi>.
struct DecompositionPatterns {
  SplittingPattern f;
  SplittingPattern k;
  SplittingPattern fk;

  friend bool operator==(const DecompositionPatterns&, const DecompositionPatterns&) = default;
  friend bool operator<(const DecompositionPatterns& a, const DecompositionPatterns& b);
};

// Every phi = (sigma, a) in S_d x A with phi iota phi^-1 = iota^u, u a unit mod
// ord(iota), where iota = (representative(g), h). Each D-orbit of length e f
// made of f inertia orbits of length e contributes the factor (e, f).
std::set<DecompositionPatterns> decomposition_triples(const CycleType& g, const AbelianElement& h, int d,
                                                      const AbelianGroup& A);

// The FK patterns of decomposition_triples.
std::set<SplittingPattern> decomposition_patterns(const CycleType& g, const AbelianElement& h, int d,
                                                  const AbelianGroup& A);

int disc_valuation(const CycleType& g);
long long disc_valuation_pair(const CycleType& g, const AbelianElement& h, int d, const AbelianGroup& A);

// sum_{i,j} f_i f_j gcd(e_i, e_j) (lcm(e_i, e_j) - 1); exact when p is tame in both.
long long remark_formula(const SplittingPattern& pattern_f, const SplittingPattern& pattern_k);

struct TableRow {
  std::vector<SplittingPattern> f_splitting;
  std::vector<SplittingPattern> fk_splitting;
  CycleType generator;
  int v_disc_f = 0;
  long long v_disc_fk = 0;
  long long delta = 0;
};

struct DiscTable {
  int d = 0;
  AbelianGroup A;
  std::vector<TableRow> rows;
  long long bound = 0;  // d * ind(h_reg): the largest possible delta
};

// One row per nontrivial class of S_d with h a generator of A = C_p. Throws
// ValidationError unless A is cyclic of prime order and 1 <= d <= 7.
DiscTable generate_table(int d, const AbelianGroup& A);

// Tab-separated, with a header line.
std::string format_table_tsv(const DiscTable& table);
// Space-padded columns with a caption line.
std::string format_table_text(const DiscTable& table);

}  // namespace malle
