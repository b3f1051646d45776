#pragma once

// Pairwise composition oracle for count_N: the remark formula at each prime
// and a disjointness test from integer factorizations.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "malle/field_census.hpp"
#include "malle/splitting_tables.hpp"

namespace census_oracle {

using namespace malle;

// Test-local trial division.
inline std::map<long long, int> factor(long long n) {
  std::map<long long, int> out;
  if (n < 0) n = -n;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

inline long long squarefree_kernel_disc(long long D) {
  long long k = D < 0 ? -1 : 1;
  for (auto [p, e] : factor(D))
    if (e % 2) k *= p;
  return ((k % 4) + 4) % 4 == 1 ? k : 4 * k;
}

// All-ones pattern of degree n, or the inertia orbits of a tame datum with f = 1.
inline SplittingPattern local_pattern(const FieldRecord& r, long long p) {
  std::vector<PrimeFactor> f;
  if (const LocalDatum* l = r.at(p))
    for (int c : l->inertia.parts()) f.push_back({c, 1});
  else
    for (int i = 0; i < r.degree; ++i) f.push_back({1, 1});
  return SplittingPattern(f);
}

struct Brute {
  long long count = 0;
  long long flagged = 0;
  long long excluded = 0;
};

// Pairwise composition from the remark formula at each prime, with the
// disjointness test done from integer factorizations.
inline Brute brute_force(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X, long long Y = 0) {
  Brute b;
  for (const auto& F : data.records) {
    if (F.sd_degree != d) continue;
    for (const auto& K : data.records) {
      if (K.is_symmetric() || K.abelian != A) continue;
      std::set<long long> primes;
      for (const auto& l : F.local) primes.insert(l.prime);
      for (const auto& l : K.local) primes.insert(l.prime);
      BigInt disc = 1, lower = 1;
      bool unresolved = false;
      for (long long p : primes) {
        const LocalDatum* lf = F.at(p);
        const LocalDatum* lk = K.at(p);
        const long long vf = lf ? lf->valuation() : 0, vk = lk ? lk->valuation() : 0;
        long long v;
        if (lf && lk && Y > 0 && p > Y) {
          v = A.order() * vf + d * vk;
        } else if (lf && lk && !(lf->is_tame() && lk->is_tame())) {
          unresolved = true;
          lower *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(std::max(A.order() * vf, d * vk)));
          continue;
        } else if ((lf && !lf->is_tame()) || (lk && !lk->is_tame())) {
          v = A.order() * vf + d * vk;
        } else {
          v = remark_formula(local_pattern(F, p), local_pattern(K, p));
        }
        disc *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(v));
        lower *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(v));
      }
      if (unresolved) {
        if (lower < X) ++b.flagged;
        continue;
      }
      if (disc >= X) continue;
      const bool same_quadratic =
          A.order() % 2 == 0 && K.degree == 2 && static_cast<long long>(K.disc) ==
                                                     squarefree_kernel_disc(static_cast<long long>(F.disc));
      if (same_quadratic)
        ++b.excluded;
      else
        ++b.count;
    }
  }
  return b;
}

}  // namespace census_oracle
