#pragma once

// Permutations of {1..n}, cycle types, and the index calculus of the product
// action S_m x S_n on pairs of points.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace malle {

// Upper bound on permutation degrees built by this library (including the
// mn points of a product embedding).
inline constexpr int kDefaultMaxDegree = 10000;

class Permutation {
 public:
  // One-line notation, 1-based: images[i-1] is the image of i.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Disjoint cycles on 1..n; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  // (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const noexcept;

  // Cycle notation with fixed points omitted, e.g. "(12)(34)"; "()" for the identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Conjugacy class of S_n: the multiset of cycle lengths, fixed points included
// as parts of size 1, stored in descending order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  static CycleType identity(int n);
  // Accepts "2.1", "2,1", "(2,1)" or "(2.1)".
  static CycleType parse(std::string_view text);

  int degree() const noexcept { return degree_; }
  std::span<const int> parts() const noexcept { return parts_; }
  int num_cycles() const noexcept { return static_cast<int>(parts_.size()); }
  bool is_identity() const noexcept;
  // gcd of the cycle lengths.
  int parts_gcd() const noexcept;
  // lcm of the cycle lengths (the order of any permutation of this type).
  long long order() const noexcept;

  // Dot-separated parts: "2.1.1".
  std::string to_string() const;
  // Canonical representative in cycle notation: (2,2,1) -> "(12)(34)".
  std::string generator_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  // Orders by degree, then index, then parts lexicographically, which lists
  // S_5 as (1^5), (2,1,1,1), (2,2,1), (3,1,1), (3,2), (4,1), (5).
  friend std::strong_ordering operator<=>(const CycleType& a, const CycleType& b);

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

CycleType cycle_type(const Permutation& p);

// n minus the number of cycles.
int ind(const CycleType& ct) noexcept;

// Number of cycles of (g, h) acting on pairs: sum over parts of gcd(c_i, d_j).
long long pair_cycle_count(const CycleType& g, const CycleType& h) noexcept;

// Index of (g, h) in S_{mn}: mn - pair_cycle_count(g, h).
long long pair_index(const CycleType& g, const CycleType& h) noexcept;

// The permutation (i, j) -> (g(i), h(j)) on mn points, pair (i, j) numbered
// (i-1)*n + j.
Permutation product_embed(const Permutation& g, const Permutation& h,
                          int max_degree = kDefaultMaxDegree);

// Canonical permutation with the given cycle type, cycles on consecutive points.
Permutation representative(const CycleType& ct);

// All cycle types of degree n in CycleType order (identity first).
std::vector<CycleType> cycle_types(int n);

// All n! permutations of degree n in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

// Subgroup of S_n generated by gens (closure under multiplication).
std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& gens);

}  // namespace malle
