#include "malle/splitting_tables.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "malle/error.hpp"
#include "malle/index_calculus.hpp"

namespace malle {

namespace {

bool factor_less(const PrimeFactor& a, const PrimeFactor& b) {
  if (a.e != b.e) return a.e > b.e;
  return a.f < b.f;
}

std::string braced(int v) { return v >= 10 ? fmt::format("{{{}}}", v) : std::to_string(v); }

class PatternLexer {
 public:
  explicit PatternLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void expect(char c) {
    if (peek() != c) fail(fmt::format("expected '{}'", c));
    ++pos_;
  }
  // A single digit, or "{digits}".
  int number() {
    if (peek() == '{') {
      ++pos_;
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) fail("empty braces");
      const int v = to_int(text_.substr(start, pos_ - start));
      expect('}');
      return v;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
    return text_[pos_++] - '0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(fmt::format("bad splitting pattern '{}' at offset {}: {}", text_, pos_, why));
  }

 private:
  int to_int(std::string_view digits) const {
    if (digits.size() > 6) fail("number too large");
    int v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Factors (e, f) of the action of D = <gens> relative to the cycles of iota.
SplittingPattern orbit_pattern(const Permutation& iota, const std::vector<Permutation>& gens) {
  const int n = iota.degree();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : gens)
    for (int i = 1; i <= n; ++i) parent[static_cast<std::size_t>(find(i))] = find(g(i));

  const CycleType ct = cycle_type(iota);
  std::vector<int> inertia_len(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    if (inertia_len[static_cast<std::size_t>(i)] != 0) continue;
    int len = 0;
    for (int j = i; len == 0 || j != i; j = iota(j)) ++len;
    for (int j = i, k = 0; k < len; j = iota(j), ++k) inertia_len[static_cast<std::size_t>(j)] = len;
  }
  std::vector<int> orbit_size(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) ++orbit_size[static_cast<std::size_t>(find(i))];
  std::vector<PrimeFactor> factors;
  for (int i = 1; i <= n; ++i) {
    if (find(i) != i) continue;
    const int e = inertia_len[static_cast<std::size_t>(i)];
    factors.push_back({e, orbit_size[static_cast<std::size_t>(i)] / e});
  }
  return SplittingPattern(std::move(factors));
}

void check_class(const CycleType& g, const AbelianElement& h, int d, const AbelianGroup& A) {
  if (g.degree() != d) throw ValidationError(fmt::format("cycle type {} is not of degree {}", g.to_string(), d));
  if (h.group() != A) throw ValidationError(fmt::format("element {} is not in {}", h.to_string(), A.label()));
}

bool pattern_list_less(const SplittingPattern& a, const SplittingPattern& b) {
  if (a.factors().size() != b.factors().size()) return a.factors().size() > b.factors().size();
  return a < b;
}

}  // namespace

SplittingPattern::SplittingPattern(std::vector<PrimeFactor> factors) : factors_(std::move(factors)) {
  for (const auto& p : factors_)
    if (p.e < 1 || p.f < 1) throw ValidationError("ramification index and inertial degree must be positive");
  std::sort(factors_.begin(), factors_.end(), factor_less);
}

SplittingPattern SplittingPattern::parse(std::string_view text, int expected_degree) {
  PatternLexer lex(text);
  lex.skip_space();
  lex.expect('(');
  std::vector<PrimeFactor> factors;
  for (;;) {
    lex.skip_space();
    if (lex.peek() == ')') break;
    if (lex.at_end()) lex.fail("missing ')'");
    PrimeFactor p;
    p.f = lex.number();
    if (lex.peek() == '^') {
      lex.expect('^');
      p.e = lex.number();
    }
    if (p.e < 1 || p.f < 1) lex.fail("indices must be positive");
    factors.push_back(p);
  }
  lex.expect(')');
  lex.skip_space();
  if (!lex.at_end()) lex.fail("trailing characters");
  if (factors.empty()) lex.fail("empty pattern");
  SplittingPattern out(std::move(factors));
  if (expected_degree > 0 && out.degree() != expected_degree)
    throw ValidationError(fmt::format("pattern {} has degree {}, expected {}", std::string(text), out.degree(),
                                      expected_degree));
  return out;
}

int SplittingPattern::degree() const noexcept {
  int n = 0;
  for (const auto& p : factors_) n += p.e * p.f;
  return n;
}

bool SplittingPattern::is_unramified() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimeFactor& p) { return p.e == 1; });
}

int SplittingPattern::disc_valuation() const noexcept {
  int v = 0;
  for (const auto& p : factors_) v += p.f * (p.e - 1);
  return v;
}

CycleType SplittingPattern::inertia_type() const {
  std::vector<int> parts;
  for (const auto& p : factors_) parts.insert(parts.end(), static_cast<std::size_t>(p.f), p.e);
  return CycleType(std::move(parts));
}

std::string SplittingPattern::to_string() const {
  std::vector<std::string> tokens;
  std::string unramified;
  for (const auto& p : factors_) {
    if (p.e > 1)
      tokens.push_back(braced(p.f) + "^" + braced(p.e));
    else
      unramified += braced(p.f);
  }
  if (!unramified.empty()) tokens.push_back(unramified);
  std::string out = "(";
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out + ")";
}

bool operator<(const SplittingPattern& a, const SplittingPattern& b) {
  return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                                      [](const PrimeFactor& x, const PrimeFactor& y) {
                                        return x.e != y.e ? x.e < y.e : x.f < y.f;
                                      });
}

bool operator<(const DecompositionPatterns& a, const DecompositionPatterns& b) {
  if (a.f < b.f) return true;
  if (b.f < a.f) return false;
  if (a.k < b.k) return true;
  if (b.k < a.k) return false;
  return a.fk < b.fk;
}

CycleType inertia_orbits(const CycleType& g, const AbelianElement& h, int d, const AbelianGroup& A) {
  check_class(g, h, d, A);
  const CycleType h_reg = regular_cycle_type(h);
  std::vector<int> parts;
  for (int c : g.parts())
    for (int dj : h_reg.parts()) {
      const int gc = std::gcd(c, dj);
      parts.insert(parts.end(), static_cast<std::size_t>(gc), c / gc * dj);
    }
  return CycleType(std::move(parts));
}

std::set<DecompositionPatterns> decomposition_triples(const CycleType& g, const AbelianElement& h, int d,
                                                      const AbelianGroup& A) {
  check_class(g, h, d, A);
  const Permutation g_rep = representative(g);
  const Permutation h_rep = regular_permutation(h);
  const Permutation iota = product_embed(g_rep, h_rep);
  const long long ord = std::lcm(g.order(), static_cast<long long>(element_order(h)));

  std::vector<Permutation> g_powers;  // g_rep^u for units u
  std::vector<long long> units;
  for (long long u = 1; u <= std::max(1LL, ord); ++u)
    if (std::gcd(u, ord) == 1) units.push_back(u);

  const auto elems = A.elements();
  std::set<DecompositionPatterns> out;
  for (const auto& sigma : all_permutations(d)) {
    const Permutation conj = sigma * g_rep * sigma.inverse();
    for (long long u : units) {
      if (conj != g_rep.pow(u)) continue;
      // A is abelian, so the A-part of the condition is h = u h.
      if (h.scaled(u) != h) continue;
      for (const auto& a : elems) {
        const Permutation a_rep = regular_permutation(a);
        DecompositionPatterns pats;
        pats.f = orbit_pattern(g_rep, {g_rep, sigma});
        pats.k = orbit_pattern(h_rep, {h_rep, a_rep});
        pats.fk = orbit_pattern(iota, {iota, product_embed(sigma, a_rep)});
        out.insert(std::move(pats));
      }
      break;
    }
  }
  return out;
}

std::set<SplittingPattern> decomposition_patterns(const CycleType& g, const AbelianElement& h, int d,
                                                  const AbelianGroup& A) {
  std::set<SplittingPattern> out;
  for (const auto& t : decomposition_triples(g, h, d, A)) out.insert(t.fk);
  return out;
}

int disc_valuation(const CycleType& g) { return ind(g); }

long long disc_valuation_pair(const CycleType& g, const AbelianElement& h, int d, const AbelianGroup& A) {
  check_class(g, h, d, A);
  return pair_index(g, regular_cycle_type(h));
}

long long remark_formula(const SplittingPattern& pattern_f, const SplittingPattern& pattern_k) {
  long long v = 0;
  for (const auto& a : pattern_f.factors())
    for (const auto& b : pattern_k.factors()) {
      const long long gc = std::gcd(a.e, b.e);
      const long long lc = std::lcm(static_cast<long long>(a.e), static_cast<long long>(b.e));
      v += static_cast<long long>(a.f) * b.f * gc * (lc - 1);
    }
  return v;
}

DiscTable generate_table(int d, const AbelianGroup& A) {
  if (!A.is_cyclic() || A.is_trivial() || A.smallest_prime() != A.order())
    throw ValidationError(fmt::format("tables are defined for cyclic A of prime order, not {}", A.label()));
  if (d < 1 || d > 7) throw ValidationError(fmt::format("table degree {} out of range 1..7", d));
  DiscTable table;
  table.d = d;
  table.A = A;
  const AbelianElement h = A.element_of_order(A.order());
  table.bound = static_cast<long long>(d) * ind(regular_cycle_type(h));
  for (const auto& g : cycle_types(d)) {
    if (g.is_identity()) continue;
    TableRow row;
    row.generator = g;
    std::set<SplittingPattern> fs, fks;
    for (const auto& t : decomposition_triples(g, h, d, A)) {
      fs.insert(t.f);
      fks.insert(t.fk);
    }
    row.f_splitting.assign(fs.begin(), fs.end());
    row.fk_splitting.assign(fks.begin(), fks.end());
    std::sort(row.f_splitting.begin(), row.f_splitting.end(), pattern_list_less);
    std::sort(row.fk_splitting.begin(), row.fk_splitting.end(), pattern_list_less);
    row.v_disc_f = disc_valuation(g);
    row.v_disc_fk = disc_valuation_pair(g, h, d, A);
    const long long v_disc_k = ind(regular_cycle_type(h));
    row.delta = static_cast<long long>(A.order()) * row.v_disc_f + d * v_disc_k - row.v_disc_fk;
    if (row.delta != delta(d, A, g, h)) throw std::logic_error("table delta disagrees with delta()");
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string join_patterns(const std::vector<SplittingPattern>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out;
}

std::vector<std::vector<std::string>> table_cells(const DiscTable& table) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"splitting_F", "splitting_FK", "generator", "v_disc_F", "v_disc_FK", "delta"});
  for (const auto& row : table.rows)
    cells.push_back({join_patterns(row.f_splitting), join_patterns(row.fk_splitting),
                     row.generator.generator_string(), std::to_string(row.v_disc_f),
                     std::to_string(row.v_disc_fk), std::to_string(row.delta)});
  return cells;
}

}  // namespace

std::string format_table_tsv(const DiscTable& table) {
  std::string out;
  for (const auto& line : table_cells(table)) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out += '\t';
      out += line[i];
    }
    out += '\n';
  }
  return out;
}

std::string format_table_text(const DiscTable& table) {
  const auto cells = table_cells(table);
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::string out = fmt::format("Discriminant valuations for S_{} x {} (delta <= {})\n", table.d, table.A.label(),
                                table.bound);
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += "  ";
      text += fmt::format("{:<{}}", line[i], width[i]);
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  }
  return out;
}

}  // namespace malle
