#pragma once

// Finite abelian groups in invariant-factor form, the regular representation,
// the cyclotomic action on classes, and Malle's a/b invariants for A and for
// S_d x A (the natural action of S_d times the regular action of A).

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "malle/perm_core.hpp"
#include "malle/rational.hpp"

namespace malle {

class AbelianElement;

class AbelianGroup {
 public:
  // The trivial group.
  AbelianGroup() = default;

  // Any list of cyclic orders (entries of 1 are dropped); the result is
  // re-normalized to the invariant-factor chain d_1 | d_2 | ... | d_r.
  static AbelianGroup from_factors(std::vector<int> cyclic_orders);
  // "C" INT ("x" "C" INT)*, e.g. "C6", "C2xC4", "C3xC2". "C1" is the trivial group.
  static AbelianGroup parse(std::string_view label);

  std::span<const int> invariant_factors() const noexcept { return factors_; }
  int rank() const noexcept { return static_cast<int>(factors_.size()); }
  int order() const noexcept;
  int exponent() const noexcept;
  bool is_trivial() const noexcept { return factors_.empty(); }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }
  // Smallest prime dividing the order; 0 for the trivial group.
  int smallest_prime() const noexcept;

  // "C2xC4"; "C1" for the trivial group.
  std::string label() const;

  AbelianElement identity() const;
  // All elements, residues in lexicographic order.
  std::vector<AbelianElement> elements() const;
  // Some element of exactly this order; throws if none exists.
  AbelianElement element_of_order(int order) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<int> factors_;
};

class AbelianElement {
 public:
  // The identity of the trivial group.
  AbelianElement() = default;
  // Residues are reduced modulo the invariant factors.
  AbelianElement(AbelianGroup group, std::vector<int> residues);

  const AbelianGroup& group() const noexcept { return group_; }
  std::span<const int> residues() const noexcept { return residues_; }
  bool is_identity() const noexcept;

  // k * a in additive notation.
  AbelianElement scaled(long long k) const;
  AbelianElement operator+(const AbelianElement& rhs) const;

  // "(1,0)"; "0" in the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
  friend auto operator<=>(const AbelianElement&, const AbelianElement&) = default;

 private:
  AbelianGroup group_;
  std::vector<int> residues_;
};

// lcm over i of d_i / gcd(a_i, d_i).
int element_order(const AbelianElement& a);

// Cycle type of left translation by a on the |A| points of A:
// |A|/ord(a) cycles of length ord(a).
CycleType regular_cycle_type(const AbelianElement& a);

// Translation by a as an explicit permutation of A's elements (numbered in
// elements() order, starting at 1).
Permutation regular_permutation(const AbelianElement& a);

// Orbits of a -> k*a over units k modulo the exponent. Each orbit is sorted;
// orbits are ordered by their first element.
std::vector<std::vector<AbelianElement>> galois_orbits(const AbelianGroup& A);

// Every isomorphism class of abelian group of the given order, sorted.
std::vector<AbelianGroup> abelian_groups_of_order(int order);

// A conjugacy class of S_d x A.
struct ProductClass {
  CycleType sd_part;
  AbelianElement a_part;

  bool is_identity() const noexcept { return sd_part.is_identity() && a_part.is_identity(); }
  std::string to_string() const;

  friend bool operator==(const ProductClass&, const ProductClass&) = default;
  friend auto operator<=>(const ProductClass&, const ProductClass&) = default;
};

// All (cycle type of d, element of A) pairs, S_d part major; the identity
// pair is dropped when nontrivial_only is set.
std::vector<ProductClass> conjugacy_classes_product(int d, const AbelianGroup& A,
                                                    bool nontrivial_only = true);

struct MalleInvariants {
  int a = 0;           // minimal index over nontrivial elements
  Rational exponent;   // 1/a
  int b = 0;           // number of cyclotomic orbits of minimal classes
  std::vector<ProductClass> minimal_classes;
};

// Malle invariants of S_d x A inside S_{d|A|}; the orbit of (g, h) under
// k in (Z/exp)^x is computed as (cycle_type(g^k), k*h). Requires d >= 3.
MalleInvariants malle_invariants_product(int d, const AbelianGroup& A);

struct AbelianCountingConstants {
  Rational a_A;  // (|A| (1 - 1/p))^{-1}, p the smallest prime divisor of |A|
  int b_of_A = 0;
  int b_A = 0;   // b(A) - 1
};

// Constants of the abelian counting asymptotic. Requires |A| >= 2.
AbelianCountingConstants abelian_counting_constants(const AbelianGroup& A);

// Brute-force homomorphism census behind the pairs <-> composita bijection.
struct CompositaUniqueness {
  long long homs_to_sd = 0;         // homomorphisms S_d x A -> S_d
  long long surjections_to_sd = 0;  // ...that are onto
  bool surjections_kill_A = true;   // every onto map is trivial on e x A
  long long surjections_to_A = 0;   // onto maps S_d x A -> A
  // Every onto map to A whose kernel contains S_{d-1} x e has kernel S_d x e.
  bool unique_abelian_quotient = true;
};

// Enumerates homomorphisms through generator images; intended for d <= 4 and
// small A.
CompositaUniqueness verify_composita_uniqueness(int d, const AbelianGroup& A);

}  // namespace malle
