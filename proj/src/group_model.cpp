#include "malle/group_model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "malle/error.hpp"

namespace malle {

namespace {

std::vector<std::pair<int, int>> factor_small(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::vector<int> units_mod(long long n) {
  std::vector<int> out;
  for (long long k = 1; k <= std::max<long long>(n, 1); ++k)
    if (std::gcd(k, n) == 1) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::from_factors(std::vector<int> cyclic_orders) {
  std::map<int, std::vector<int>> by_prime;
  for (int n : cyclic_orders) {
    if (n < 1) throw ValidationError("cyclic factor orders must be positive");
    for (auto [p, e] : factor_small(n)) by_prime[p].push_back(e);
  }
  std::size_t rank = 0;
  for (auto& [p, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  // factors_[rank-1] collects the largest prime power of every prime, and so on down.
  std::vector<int> chain(rank, 1);
  for (const auto& [p, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) chain[rank - 1 - i] *= ipow(p, exps[i]);
  AbelianGroup g;
  g.factors_ = std::move(chain);
  return g;
}

AbelianGroup AbelianGroup::parse(std::string_view label) {
  std::vector<int> orders;
  std::size_t i = 0;
  if (label.empty()) throw ParseError("empty group label");
  while (i < label.size()) {
    if (label[i] != 'C') throw ParseError(fmt::format("bad group label '{}'", label));
    ++i;
    std::size_t j = i;
    while (j < label.size() && label[j] >= '0' && label[j] <= '9') ++j;
    if (j == i || j - i > 6) throw ParseError(fmt::format("bad group label '{}'", label));
    const int n = std::stoi(std::string(label.substr(i, j - i)));
    if (n < 1) throw ParseError(fmt::format("bad cyclic order in '{}'", label));
    orders.push_back(n);
    i = j;
    if (i < label.size()) {
      if (label[i] != 'x' || i + 1 == label.size())
        throw ParseError(fmt::format("bad group label '{}'", label));
      ++i;
    }
  }
  return from_factors(std::move(orders));
}

int AbelianGroup::order() const noexcept {
  return std::accumulate(factors_.begin(), factors_.end(), 1, std::multiplies<>());
}

int AbelianGroup::exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }

int AbelianGroup::smallest_prime() const noexcept {
  if (factors_.empty()) return 0;
  return factor_small(order()).front().first;
}

std::string AbelianGroup::label() const {
  if (factors_.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'C' + std::to_string(factors_[i]);
  }
  return out;
}

AbelianElement AbelianGroup::identity() const {
  return AbelianElement(*this, std::vector<int>(factors_.size(), 0));
}

std::vector<AbelianElement> AbelianGroup::elements() const {
  std::vector<AbelianElement> out;
  std::vector<int> residues(factors_.size(), 0);
  while (true) {
    out.emplace_back(*this, residues);
    int pos = static_cast<int>(residues.size()) - 1;
    while (pos >= 0 && ++residues[static_cast<std::size_t>(pos)] == factors_[static_cast<std::size_t>(pos)]) {
      residues[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

AbelianElement AbelianGroup::element_of_order(int order) const {
  for (const auto& a : elements())
    if (element_order(a) == order) return a;
  throw ValidationError(fmt::format("{} has no element of order {}", label(), order));
}

AbelianElement::AbelianElement(AbelianGroup group, std::vector<int> residues)
    : group_(std::move(group)), residues_(std::move(residues)) {
  const auto f = group_.invariant_factors();
  if (residues_.size() != f.size())
    throw ValidationError(fmt::format("element needs {} residues for {}", f.size(), group_.label()));
  for (std::size_t i = 0; i < f.size(); ++i) residues_[i] = ((residues_[i] % f[i]) + f[i]) % f[i];
}

bool AbelianElement::is_identity() const noexcept {
  return std::all_of(residues_.begin(), residues_.end(), [](int r) { return r == 0; });
}

AbelianElement AbelianElement::scaled(long long k) const {
  const auto f = group_.invariant_factors();
  std::vector<int> out(residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<int>(((k % f[i]) * residues_[i] % f[i] + f[i]) % f[i]);
  return AbelianElement(group_, std::move(out));
}

AbelianElement AbelianElement::operator+(const AbelianElement& rhs) const {
  if (group_ != rhs.group_) throw ValidationError("adding elements of different groups");
  std::vector<int> out(residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = residues_[i] + rhs.residues_[i];
  return AbelianElement(group_, std::move(out));
}

std::string AbelianElement::to_string() const {
  if (residues_.empty()) return "0";
  if (residues_.size() == 1) return std::to_string(residues_[0]);
  return fmt::format("({})", fmt::join(residues_, ","));
}

int element_order(const AbelianElement& a) {
  const auto f = a.group().invariant_factors();
  const auto r = a.residues();
  int l = 1;
  for (std::size_t i = 0; i < f.size(); ++i) l = std::lcm(l, f[i] / std::gcd(r[i], f[i]));
  return l;
}

CycleType regular_cycle_type(const AbelianElement& a) {
  const int n = a.group().order();
  const int k = element_order(a);
  return CycleType(std::vector<int>(static_cast<std::size_t>(n / k), k));
}

Permutation regular_permutation(const AbelianElement& a) {
  const auto elems = a.group().elements();
  std::map<AbelianElement, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i) + 1);
  std::vector<int> images(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) images[i] = index.at(a + elems[i]);
  return Permutation(std::move(images));
}

std::vector<std::vector<AbelianElement>> galois_orbits(const AbelianGroup& A) {
  const auto units = units_mod(A.exponent());
  std::set<AbelianElement> assigned;
  std::vector<std::vector<AbelianElement>> orbits;
  for (const auto& a : A.elements()) {
    if (assigned.count(a)) continue;
    std::set<AbelianElement> orbit;
    for (int k : units) orbit.insert(a.scaled(k));
    assigned.insert(orbit.begin(), orbit.end());
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return orbits;
}

std::vector<AbelianGroup> abelian_groups_of_order(int order) {
  if (order < 1) throw ValidationError("group order must be positive");
  // Choose a partition of each prime exponent; combine into cyclic factors.
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : factor_small(order)) {
    std::vector<std::vector<int>> choices;
    for (const auto& ct : cycle_types(e)) {
      std::vector<int> powers;
      for (int part : ct.parts()) powers.push_back(ipow(p, part));
      choices.push_back(std::move(powers));
    }
    per_prime.push_back(std::move(choices));
  }
  std::set<AbelianGroup> out;
  std::vector<int> current;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_prime.size()) {
      out.insert(AbelianGroup::from_factors(current));
      return;
    }
    for (const auto& powers : per_prime[i]) {
      const std::size_t mark = current.size();
      current.insert(current.end(), powers.begin(), powers.end());
      rec(i + 1);
      current.resize(mark);
    }
  };
  rec(0);
  return {out.begin(), out.end()};
}

std::string ProductClass::to_string() const {
  return fmt::format("({}, {})", sd_part.generator_string(), a_part.to_string());
}

std::vector<ProductClass> conjugacy_classes_product(int d, const AbelianGroup& A, bool nontrivial_only) {
  std::vector<ProductClass> out;
  const auto elems = A.elements();
  for (const auto& g : cycle_types(d))
    for (const auto& h : elems) {
      ProductClass c{g, h};
      if (nontrivial_only && c.is_identity()) continue;
      out.push_back(std::move(c));
    }
  return out;
}

MalleInvariants malle_invariants_product(int d, const AbelianGroup& A) {
  if (d < 3) throw ValidationError("malle_invariants_product requires d >= 3");
  const auto classes = conjugacy_classes_product(d, A, true);
  long long best = -1;
  for (const auto& c : classes) {
    const long long idx = pair_index(c.sd_part, regular_cycle_type(c.a_part));
    if (best < 0 || idx < best) best = idx;
  }
  MalleInvariants inv;
  inv.a = static_cast<int>(best);
  inv.exponent = Rational(1, best);
  for (const auto& c : classes)
    if (pair_index(c.sd_part, regular_cycle_type(c.a_part)) == best) inv.minimal_classes.push_back(c);

  long long sd_exponent = 1;
  for (int k = 2; k <= d; ++k) sd_exponent = std::lcm(sd_exponent, static_cast<long long>(k));
  const auto units = units_mod(std::lcm(sd_exponent, static_cast<long long>(A.exponent())));
  std::set<ProductClass> assigned;
  for (const auto& c : inv.minimal_classes) {
    if (assigned.count(c)) continue;
    ++inv.b;
    const Permutation rep = representative(c.sd_part);
    for (int k : units) assigned.insert(ProductClass{cycle_type(rep.pow(k)), c.a_part.scaled(k)});
  }
  return inv;
}

AbelianCountingConstants abelian_counting_constants(const AbelianGroup& A) {
  if (A.order() < 2) throw ValidationError("abelian_counting_constants requires |A| >= 2");
  const int p = A.smallest_prime();
  AbelianCountingConstants out;
  out.a_A = Rational(p, static_cast<long long>(A.order()) * (p - 1));

  long long min_index = -1;
  for (const auto& a : A.elements()) {
    if (a.is_identity()) continue;
    const long long idx = ind(regular_cycle_type(a));
    if (min_index < 0 || idx < min_index) min_index = idx;
  }
  for (const auto& orbit : galois_orbits(A)) {
    const auto& a = orbit.front();
    if (!a.is_identity() && ind(regular_cycle_type(a)) == min_index) ++out.b_of_A;
  }
  out.b_A = out.b_of_A - 1;
  return out;
}

namespace {

// Extends generator images to a homomorphism on the group generated by gens,
// if consistent. Elements are enumerated by BFS from the identity.
template <typename Elem, typename Target, typename MulG, typename MulT>
std::optional<std::map<Elem, Target>> extend_hom(const Elem& id, const std::vector<Elem>& gens,
                                                 const Target& target_id,
                                                 const std::vector<Target>& images, MulG mul_g,
                                                 MulT mul_t) {
  std::map<Elem, Target> phi{{id, target_id}};
  std::vector<Elem> frontier{id};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const Elem w = frontier[head];
    const Target fw = phi.at(w);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem next = mul_g(gens[i], w);
      Target value = mul_t(images[i], fw);
      auto [it, inserted] = phi.emplace(next, value);
      if (inserted) {
        frontier.push_back(next);
      } else if (!(it->second == value)) {
        return std::nullopt;
      }
    }
  }
  return phi;
}

std::vector<Permutation> sd_generators(int d) {
  std::vector<int> cycle(static_cast<std::size_t>(d));
  std::iota(cycle.begin(), cycle.end(), 1);
  return {Permutation::from_cycles(d, {{1, 2}}), Permutation::from_cycles(d, {cycle})};
}

std::vector<AbelianElement> basis(const AbelianGroup& A) {
  std::vector<AbelianElement> out;
  for (int i = 0; i < A.rank(); ++i) {
    std::vector<int> r(static_cast<std::size_t>(A.rank()), 0);
    r[static_cast<std::size_t>(i)] = 1;
    out.emplace_back(A, std::move(r));
  }
  return out;
}

bool commute(const Permutation& a, const Permutation& b) { return a * b == b * a; }

}  // namespace

CompositaUniqueness verify_composita_uniqueness(int d, const AbelianGroup& A) {
  if (d < 3 || d > 5) throw ValidationError("composita check supports 3 <= d <= 5");
  CompositaUniqueness out;
  const auto sd = all_permutations(d);
  const auto gens = sd_generators(d);
  const auto pmul = [](const Permutation& a, const Permutation& b) { return a * b; };
  const Permutation e = Permutation::identity(d);

  // Homomorphisms S_d -> S_d.
  std::vector<std::pair<Permutation, Permutation>> sd_homs;
  for (const auto& x : sd)
    for (const auto& y : sd)
      if (extend_hom(e, gens, e, std::vector<Permutation>{x, y}, pmul, pmul)) sd_homs.emplace_back(x, y);

  // Homomorphisms A -> S_d: commuting images with orders dividing the factors.
  const auto factors = A.invariant_factors();
  std::vector<std::vector<Permutation>> a_homs{{}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& partial : a_homs)
      for (const auto& z : sd) {
        if (!z.pow(factors[i]).is_identity()) continue;
        if (!std::all_of(partial.begin(), partial.end(), [&](const auto& w) { return commute(z, w); }))
          continue;
        auto extended = partial;
        extended.push_back(z);
        next.push_back(std::move(extended));
      }
    a_homs = std::move(next);
  }

  for (const auto& [x, y] : sd_homs)
    for (const auto& zs : a_homs) {
      if (!std::all_of(zs.begin(), zs.end(), [&](const auto& z) { return commute(z, x) && commute(z, y); }))
        continue;
      ++out.homs_to_sd;
      std::vector<Permutation> image_gens{x, y};
      image_gens.insert(image_gens.end(), zs.begin(), zs.end());
      if (generated_subgroup(d, image_gens).size() != sd.size()) continue;
      ++out.surjections_to_sd;
      if (!std::all_of(zs.begin(), zs.end(), [](const auto& z) { return z.is_identity(); }))
        out.surjections_kill_A = false;
    }

  // Homomorphisms S_d x A -> A.
  if (!A.is_trivial()) {
    const auto elems = A.elements();
    const auto amul = [](const AbelianElement& a, const AbelianElement& b) { return a + b; };
    const AbelianElement zero = A.identity();
    std::vector<int> stab_cycle(static_cast<std::size_t>(d - 1));
    std::iota(stab_cycle.begin(), stab_cycle.end(), 1);
    const std::vector<Permutation> stab_gens{Permutation::from_cycles(d, {{1, 2}}),
                                             Permutation::from_cycles(d, {stab_cycle})};
    const auto a_basis = basis(A);
    // Endomorphisms of A: basis images of compatible order.
    std::vector<std::vector<AbelianElement>> endos{{}};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<std::vector<AbelianElement>> next;
      for (const auto& partial : endos)
        for (const auto& z : elems) {
          if (!z.scaled(factors[i]).is_identity()) continue;
          auto extended = partial;
          extended.push_back(z);
          next.push_back(std::move(extended));
        }
      endos = std::move(next);
    }
    for (const auto& x : elems)
      for (const auto& y : elems) {
        auto f1 = extend_hom(e, gens, zero, std::vector<AbelianElement>{x, y}, pmul, amul);
        if (!f1) continue;
        for (const auto& zs : endos) {
          auto f2 = extend_hom(zero, a_basis, zero, zs, amul, amul);
          if (!f2) continue;
          std::set<AbelianElement> image;
          for (const auto& [g, v] : *f1)
            for (const auto& [a, w] : *f2) image.insert(v + w);
          if (static_cast<int>(image.size()) != A.order()) continue;
          ++out.surjections_to_A;
          const bool contains_stabilizer =
              std::all_of(stab_gens.begin(), stab_gens.end(), [&](const auto& s) { return f1->at(s).is_identity(); });
          if (!contains_stabilizer) continue;
          // Kernel equals S_d x e iff f1 is trivial and f2 is injective.
          const bool f1_trivial =
              std::all_of(f1->begin(), f1->end(), [](const auto& kv) { return kv.second.is_identity(); });
          long long f2_kernel = 0;
          for (const auto& [a, w] : *f2) f2_kernel += w.is_identity() ? 1 : 0;
          if (!f1_trivial || f2_kernel != 1) out.unique_abelian_quotient = false;
        }
      }
  }
  return out;
}

}  // namespace malle
