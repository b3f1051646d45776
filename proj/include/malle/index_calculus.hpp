#pragma once

// The discrepancy Delta(g, h) between the naive and true discriminant
// valuation of a compositum at a tame prime, the index inequality and its
// equality cases, the theta/beta exponent bookkeeping of the tail estimate,
// and the dyadic tail series.

#include <map>
#include <vector>

#include "malle/group_model.hpp"
#include "malle/perm_core.hpp"
#include "malle/rational.hpp"

namespace malle {

// |A| * ind(g) + d * ind(h_reg) - ind(g, h_reg), with h_reg the regular cycle
// type of h. Throws ValidationError if g does not have degree d or h is not in A.
long long delta(int d, const AbelianGroup& A, const CycleType& g, const AbelianElement& h);

// n * sum(|c_i| - 1) + m * sum(|d_j| - 1) - (mn - sum gcd(|c_i|, |d_j|)) for g
// of degree m and h of degree n, evaluated term by term.
long long delta_closed_form(const CycleType& g, const CycleType& h, int m, int n);

struct IndexComparison {
  long long lhs = 0;   // |A| * ind(g) = ind(g, e)
  long long rhs = 0;   // ind(g, h_reg)
  bool equality = false;
  bool order_divides_gcd = false;  // ord(h) | gcd of the cycle lengths of g
};

IndexComparison index_compare(const CycleType& g, const AbelianElement& h);

// Nontrivial (g, h) with h != e and |A| ind(g) = ind(g, h_reg).
std::vector<ProductClass> equality_cases(int d, const AbelianGroup& A);

// Delta(g_k)/d - ind(h_reg).
Rational theta(const ProductClass& cls, int d, const AbelianGroup& A);

// Exponents r_g of the averaged uniformity bound, keyed by S_d cycle type.
using ExponentMap = std::map<CycleType, Rational>;

// Which classes of S_d x A enter the beta maximum.
enum class ClassScope {
  // g != e and h != e: classes at primes ramified in both F and K, which are
  // the only ones indexing the tail sum.
  ramified_pairs,
  // every nontrivial class; r_e defaults to 0 when absent from the map.
  all_nontrivial,
};

struct TailParams {
  int d = 3;
  AbelianGroup A;
  ExponentMap r;
  Rational epsilon{1, 1000};
  double Y = 1024.0;
  ClassScope scope = ClassScope::ramified_pairs;
};

struct BetaTerm {
  ProductClass cls;
  long long delta = 0;
  Rational theta;
  Rational value;   // (d/|A|) theta + r_g
  Rational middle;  // Delta/|A| - d ind(h_reg)/|A| + r_g
};

struct BetaResult {
  Rational beta;
  ProductClass argmax;
  std::vector<BetaTerm> terms;
};

// Exact maximum of (d/|A|) theta_k + r over the classes in scope. Throws
// ValidationError when an exponent is missing or |A| < 2.
BetaResult beta(const TailParams& params);

// For each nontrivial S_d class g: max over h != e of
// r_g + ind(g) - ind(g, h_reg)/|A|.
std::map<CycleType, Rational> hypothesis_b_margin(int d, const AbelianGroup& A, const ExponentMap& r);

// Presets for d = 3, 4, 5: r = eps on the classes of the first dyadic
// variable and -1 + eps (d = 3, 4) or -1/20 + eps (d = 5) on the rest.
ExponentMap uniformity_preset(int d, const Rational& eps);
ExponentMap zero_exponents(int d);

struct TailSeries {
  double value = 0;       // sum_{r >= first_r} C(r+m-1, m-1) 2^{(beta+eps) r}
  double comparator = 0;  // (log Y)^{m-1} Y^{beta+eps}
  long long first_r = 0;  // max(0, ceil(log2 Y - m))
  long long terms = 0;
};

inline constexpr double kDefaultTailFloor = 1e-15;

// Sums until a term falls below floor times the running sum on the
// decreasing side of the series. Throws ValidationError unless
// beta + epsilon < 0, Y > 1 and m >= 1.
TailSeries tail_series(const Rational& beta, const Rational& epsilon, int m, double Y,
                       double floor = kDefaultTailFloor);

}  // namespace malle
