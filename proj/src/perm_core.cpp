#include "malle/perm_core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include <fmt/format.h>

#include "malle/error.hpp"

namespace malle {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw ValidationError("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw ValidationError("permutation images must be a bijection on 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ValidationError("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      if (from < 1 || from > n || used[static_cast<std::size_t>(from - 1)])
        throw ValidationError("cycles must be disjoint and lie in 1..n");
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw ValidationError("degree mismatch in permutation product");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  const bool wide = degree() > 9;
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += '(';
    int p = start;
    bool first = true;
    do {
      if (wide && !first) out += ' ';
      out += std::to_string(p);
      seen[static_cast<std::size_t>(p - 1)] = true;
      p = (*this)(p);
      first = false;
    } while (p != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw ValidationError("cycle lengths must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

CycleType CycleType::identity(int n) {
  return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1));
}

CycleType CycleType::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == i) throw ParseError(fmt::format("bad cycle type '{}'", text));
    parts.push_back(std::stoi(std::string(text.substr(i, j - i))));
    if (j < text.size()) {
      if (text[j] != '.' && text[j] != ',') throw ParseError(fmt::format("bad cycle type '{}'", text));
      ++j;
      if (j == text.size()) throw ParseError(fmt::format("bad cycle type '{}'", text));
    }
    i = j;
  }
  if (parts.empty()) throw ParseError("empty cycle type");
  return CycleType(std::move(parts));
}

bool CycleType::is_identity() const noexcept {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

int CycleType::parts_gcd() const noexcept {
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

long long CycleType::order() const noexcept {
  long long l = 1;
  for (int p : parts_) l = std::lcm(l, static_cast<long long>(p));
  return l;
}

std::string CycleType::to_string() const {
  return fmt::format("{}", fmt::join(parts_, "."));
}

std::string CycleType::generator_string() const {
  return representative(*this).to_cycle_string();
}

std::strong_ordering operator<=>(const CycleType& a, const CycleType& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = ind(a) <=> ind(b); c != 0) return c;
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                b.parts_.begin(), b.parts_.end());
}

CycleType cycle_type(const Permutation& p) {
  std::vector<int> parts;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int len = 0;
    int q = start;
    do {
      seen[static_cast<std::size_t>(q - 1)] = true;
      q = p(q);
      ++len;
    } while (q != start);
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

int ind(const CycleType& ct) noexcept { return ct.degree() - ct.num_cycles(); }

long long pair_cycle_count(const CycleType& g, const CycleType& h) noexcept {
  long long total = 0;
  for (int c : g.parts())
    for (int d : h.parts()) total += std::gcd(c, d);
  return total;
}

long long pair_index(const CycleType& g, const CycleType& h) noexcept {
  return static_cast<long long>(g.degree()) * h.degree() - pair_cycle_count(g, h);
}

Permutation product_embed(const Permutation& g, const Permutation& h, int max_degree) {
  const long long m = g.degree();
  const long long n = h.degree();
  if (m * n > max_degree)
    throw ValidationError(fmt::format("product degree {} exceeds the bound {}", m * n, max_degree));
  std::vector<int> images(static_cast<std::size_t>(m * n));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      images[static_cast<std::size_t>((i - 1) * n + (j - 1))] =
          static_cast<int>((g(i) - 1) * n + h(j));
  return Permutation(std::move(images));
}

Permutation representative(const CycleType& ct) {
  if (ct.degree() < 1) throw ValidationError("cycle type of degree 0 has no representative");
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : ct.parts()) {
    std::vector<int> cycle(static_cast<std::size_t>(len));
    std::iota(cycle.begin(), cycle.end(), next);
    next += len;
    if (len > 1) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(ct.degree(), cycles);
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& current,
                     std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_into(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<CycleType> cycle_types(int n) {
  if (n < 1) throw ValidationError("degree must be positive");
  std::vector<CycleType> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 10) throw ValidationError("all_permutations supports 1 <= n <= 10");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> generated_subgroup(int n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::queue<Permutation> frontier;
  frontier.push(Permutation::identity(n));
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Permutation next = g * cur;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace malle
