#include "malle/index_calculus.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "malle/error.hpp"

namespace malle {

long long delta(int d, const AbelianGroup& A, const CycleType& g, const AbelianElement& h) {
  if (g.degree() != d) throw ValidationError(fmt::format("cycle type {} is not of degree {}", g.to_string(), d));
  if (h.group() != A) throw ValidationError(fmt::format("element {} is not in {}", h.to_string(), A.label()));
  const CycleType h_reg = regular_cycle_type(h);
  return static_cast<long long>(A.order()) * ind(g) + static_cast<long long>(d) * ind(h_reg) -
         pair_index(g, h_reg);
}

long long delta_closed_form(const CycleType& g, const CycleType& h, int m, int n) {
  if (g.degree() != m || h.degree() != n)
    throw ValidationError(fmt::format("degrees ({}, {}) do not match m = {}, n = {}", g.degree(), h.degree(), m, n));
  long long sum_g = 0;
  for (int c : g.parts()) sum_g += c - 1;
  long long sum_h = 0;
  for (int dj : h.parts()) sum_h += dj - 1;
  long long gcds = 0;
  for (int c : g.parts())
    for (int dj : h.parts()) gcds += std::gcd(c, dj);
  return static_cast<long long>(n) * sum_g + static_cast<long long>(m) * sum_h -
         (static_cast<long long>(m) * n - gcds);
}

IndexComparison index_compare(const CycleType& g, const AbelianElement& h) {
  IndexComparison out;
  out.lhs = static_cast<long long>(h.group().order()) * ind(g);
  out.rhs = pair_index(g, regular_cycle_type(h));
  out.equality = out.lhs == out.rhs;
  out.order_divides_gcd = g.parts_gcd() % element_order(h) == 0;
  return out;
}

std::vector<ProductClass> equality_cases(int d, const AbelianGroup& A) {
  std::vector<ProductClass> out;
  for (const auto& cls : conjugacy_classes_product(d, A, true)) {
    if (cls.a_part.is_identity()) continue;
    if (index_compare(cls.sd_part, cls.a_part).equality) out.push_back(cls);
  }
  return out;
}

Rational theta(const ProductClass& cls, int d, const AbelianGroup& A) {
  return Rational(delta(d, A, cls.sd_part, cls.a_part), d) - ind(regular_cycle_type(cls.a_part));
}

namespace {

const Rational& exponent_for(const ExponentMap& r, const CycleType& g, ClassScope scope) {
  static const Rational zero(0);
  if (auto it = r.find(g); it != r.end()) return it->second;
  if (g.is_identity() && scope == ClassScope::all_nontrivial) return zero;
  throw ValidationError(fmt::format("no exponent r for class {}", g.generator_string()));
}

}  // namespace

BetaResult beta(const TailParams& params) {
  const int d = params.d;
  const auto& A = params.A;
  if (A.order() < 2) throw ValidationError("beta requires a nontrivial abelian group");
  const long long order = A.order();
  BetaResult out;
  bool first = true;
  for (const auto& cls : conjugacy_classes_product(d, A, true)) {
    if (params.scope == ClassScope::ramified_pairs && (cls.sd_part.is_identity() || cls.a_part.is_identity()))
      continue;
    const Rational& r = exponent_for(params.r, cls.sd_part, params.scope);
    BetaTerm term;
    term.cls = cls;
    term.delta = delta(d, A, cls.sd_part, cls.a_part);
    term.theta = theta(cls, d, A);
    term.value = Rational(d, order) * term.theta + r;
    term.middle = Rational(term.delta, order) -
                  Rational(static_cast<long long>(d) * ind(regular_cycle_type(cls.a_part)), order) + r;
    if (term.value != term.middle)
      throw std::logic_error("theta identity failed for " + cls.to_string());
    if (first || term.value > out.beta) {
      out.beta = term.value;
      out.argmax = cls;
      first = false;
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::map<CycleType, Rational> hypothesis_b_margin(int d, const AbelianGroup& A, const ExponentMap& r) {
  if (A.order() < 2) throw ValidationError("hypothesis_b_margin requires a nontrivial abelian group");
  std::map<CycleType, Rational> out;
  const auto elems = A.elements();
  for (const auto& g : cycle_types(d)) {
    if (g.is_identity()) continue;
    const Rational& rg = exponent_for(r, g, ClassScope::ramified_pairs);
    bool first = true;
    Rational best;
    for (const auto& h : elems) {
      if (h.is_identity()) continue;
      const Rational m = rg + ind(g) - Rational(pair_index(g, regular_cycle_type(h)), A.order());
      if (first || m > best) {
        best = m;
        first = false;
      }
    }
    out.emplace(g, best);
  }
  return out;
}

ExponentMap uniformity_preset(int d, const Rational& eps) {
  ExponentMap r;
  switch (d) {
    case 3:
      r[CycleType({2, 1})] = eps;
      r[CycleType({3})] = eps - 1;
      break;
    case 4:
      r[CycleType({2, 1, 1})] = eps;
      r[CycleType({3, 1})] = eps;
      r[CycleType({2, 2})] = eps - 1;
      r[CycleType({4})] = eps - 1;
      break;
    case 5:
      for (const auto& g : cycle_types(5)) {
        if (g.is_identity()) continue;
        r[g] = ind(g) == 1 ? eps : eps - Rational(1, 20);
      }
      break;
    default:
      throw ValidationError(fmt::format("no exponent preset for d = {}", d));
  }
  return r;
}

ExponentMap zero_exponents(int d) {
  ExponentMap r;
  for (const auto& g : cycle_types(d))
    if (!g.is_identity()) r[g] = 0;
  return r;
}

TailSeries tail_series(const Rational& beta, const Rational& epsilon, int m, double Y, double floor) {
  const Rational s_exact = beta + epsilon;
  if (s_exact >= 0) throw ValidationError("tail series diverges: beta + epsilon must be negative");
  if (!(Y > 1.0)) throw ValidationError("tail series needs Y > 1");
  if (m < 1) throw ValidationError("tail series needs m >= 1");
  const double s = to_double(s_exact);
  const double x = std::exp2(s);

  TailSeries out;
  out.first_r = std::max<long long>(0, static_cast<long long>(std::ceil(std::log2(Y) - m)));
  // C(r+m-1, m-1) x^r, advanced by the ratio (r+m)/(r+1) * x.
  double binom = 1.0;
  for (int k = 1; k <= m - 1; ++k) binom = binom * static_cast<double>(out.first_r + k) / k;
  double term = binom * std::pow(x, static_cast<double>(out.first_r));
  double sum = 0.0;
  for (long long r = out.first_r;; ++r) {
    sum += term;
    ++out.terms;
    const double ratio = static_cast<double>(r + m) / static_cast<double>(r + 1) * x;
    const double next = term * ratio;
    if (ratio < 1.0 && next < floor * sum) break;
    if (out.terms > 100'000'000) throw std::runtime_error("tail series failed to converge");
    term = next;
  }
  out.value = sum;
  out.comparator = std::pow(std::log(Y), m - 1) * std::pow(Y, s);
  return out;
}

}  // namespace malle
