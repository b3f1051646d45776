#include "malle/field_census.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>
#include <fmt/format.h>

#include "malle/error.hpp"
#include "malle/index_calculus.hpp"

namespace malle {

namespace mp = boost::multiprecision;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

long long parse_ll(std::string_view text, std::size_t line, std::string_view what) {
  const BigInt v = [&] {
    try {
      return parse_bigint(text);
    } catch (const ParseError&) {
      throw ParseError(fmt::format("bad {} '{}'", what, text), line);
    }
  }();
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw ParseError(fmt::format("{} '{}' out of range", what, text), line);
  return static_cast<long long>(v);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  return mp::miller_rabin_test(BigInt(p), 25);
}

long long factorial(int d) {
  long long f = 1;
  for (int k = 2; k <= d; ++k) f *= k;
  return f;
}

BigInt ipow(BigInt base, long long e) {
  return mp::pow(base, static_cast<unsigned>(e));
}

std::string symmetric_label(int d) { return "S" + std::to_string(d); }

bool squarefree(long long n) {
  if (n < 0) n = -n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

void validate_record(FieldRecord& r, std::size_t line) {
  auto fail = [&](const std::string& why) {
    throw ValidationError(line ? fmt::format("line {}: record {}: {}", line, r.label, why)
                               : fmt::format("record {}: {}", r.label, why));
  };
  if (r.label.empty()) fail("empty label");
  if (r.disc == 0) fail("zero discriminant");
  const int expected = r.is_symmetric() ? r.sd_degree : r.abelian.order();
  if (r.degree != expected) fail(fmt::format("degree {} does not match group {}", r.degree, r.group));
  const long long order = r.group_order();
  BigInt product = 1;
  long long prev = 0;
  for (const auto& loc : r.local) {
    if (!is_prime(loc.prime)) fail(fmt::format("{} is not prime", loc.prime));
    if (loc.prime <= prev) fail("ramified primes must be distinct and increasing");
    prev = loc.prime;
    if (loc.is_tame()) {
      if (order % loc.prime == 0) fail(fmt::format("prime {} divides the group order and cannot be tame", loc.prime));
      if (loc.inertia.degree() != r.degree)
        fail(fmt::format("inertia type {} at {} is not of degree {}", loc.inertia.to_string(), loc.prime, r.degree));
      if (loc.inertia.is_identity()) fail(fmt::format("trivial inertia at {}", loc.prime));
      if (!r.is_symmetric()) {
        const int k = loc.inertia.parts().front();
        const bool regular = std::all_of(loc.inertia.parts().begin(), loc.inertia.parts().end(),
                                         [k](int c) { return c == k; });
        if (!regular || r.abelian.exponent() % k != 0)
          fail(fmt::format("inertia type {} at {} is not regular in {}", loc.inertia.to_string(), loc.prime,
                           r.group));
      }
    } else if (loc.wild_valuation < 1) {
      fail(fmt::format("wild valuation at {} must be positive", loc.prime));
    }
    product *= ipow(BigInt(loc.prime), loc.valuation());
  }
  if (product != mp::abs(r.disc))
    fail(fmt::format("local data gives |disc| = {}, record says {}", product.str(), r.disc.str()));
  if (r.is_symmetric() && !r.quad_subfield_discs.empty()) fail("quadratic subfields are listed for abelian records only");
  for (long long q : r.quad_subfield_discs)
    if (!is_fundamental_discriminant(q)) fail(fmt::format("{} is not a fundamental discriminant", q));
}

LocalDatum parse_local(std::string_view text, std::size_t line) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(fmt::format("bad local datum '{}'", text), line);
  LocalDatum loc;
  loc.prime = parse_ll(text.substr(0, colon), line, "prime");
  auto body = text.substr(colon + 1);
  if (body.size() < 4 || body[1] != '(' || body.back() != ')')
    throw ParseError(fmt::format("bad local datum '{}'", text), line);
  const auto inner = body.substr(2, body.size() - 3);
  if (body[0] == 't') {
    loc.kind = LocalDatum::Kind::tame;
    try {
      loc.inertia = CycleType::parse(inner);
    } catch (const Error& e) {
      throw ParseError(fmt::format("bad inertia type in '{}': {}", text, e.what()), line);
    }
  } else if (body[0] == 'w') {
    loc.kind = LocalDatum::Kind::wild;
    const long long v = parse_ll(inner, line, "wild valuation");
    if (v < 0 || v > 1'000'000) throw ParseError(fmt::format("wild valuation out of range in '{}'", text), line);
    loc.wild_valuation = static_cast<int>(v);
  } else {
    throw ParseError(fmt::format("local type must be t(...) or w(...) in '{}'", text), line);
  }
  return loc;
}

void parse_coverage(std::string_view line, std::size_t line_number, Dataset& data) {
  std::string group;
  std::optional<BigInt> maxdisc;
  std::istringstream in{std::string(line.substr(std::string_view("#coverage").size()))};
  std::string kv;
  while (in >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError(fmt::format("bad coverage field '{}'", kv), line_number);
    const auto key = kv.substr(0, eq);
    const auto value = kv.substr(eq + 1);
    if (key == "group") {
      group = value;
    } else if (key == "maxdisc") {
      try {
        maxdisc = parse_bigint(value);
      } catch (const ParseError&) {
        throw ParseError(fmt::format("bad maxdisc '{}'", value), line_number);
      }
    } else {
      throw ParseError(fmt::format("unknown coverage key '{}'", key), line_number);
    }
  }
  if (group.empty() || !maxdisc) throw ParseError("coverage needs group= and maxdisc=", line_number);
  data.coverage.emplace_back(group, *maxdisc);
}

bool record_less(const FieldRecord& a, const FieldRecord& b) {
  const BigInt aa = mp::abs(a.disc), ab = mp::abs(b.disc);
  return std::tie(a.degree, a.group, aa, a.disc, a.label) < std::tie(b.degree, b.group, ab, b.disc, b.label);
}

void check_pair(const FieldRecord& F, const FieldRecord& K) {
  if (!F.is_symmetric()) throw ValidationError(fmt::format("{} is not an S_d record", F.label));
  if (K.is_symmetric()) throw ValidationError(fmt::format("{} is not an abelian record", K.label));
}

// Both tame: delta of (inertia of F, an element of K's inertia order).
long long tame_delta(const FieldRecord& F, const FieldRecord& K, const LocalDatum& lf, const LocalDatum& lk) {
  const AbelianElement h = K.abelian.element_of_order(lk.inertia.parts().front());
  return delta(F.degree, K.abelian, lf.inertia, h);
}

Composition compose_impl(const FieldRecord& F, const FieldRecord& K, std::optional<long long> Y,
                         const WildOverrides& overrides) {
  check_pair(F, K);
  const long long n = K.degree;  // |A|
  const long long d = F.degree;
  Composition out;
  out.naive = ipow(mp::abs(F.disc), n) * ipow(mp::abs(K.disc), d);
  std::set<long long> primes;
  for (const auto& l : F.local) primes.insert(l.prime);
  for (const auto& l : K.local) primes.insert(l.prime);
  BigInt disc = 1, lower = 1;
  for (long long p : primes) {
    const LocalDatum* lf = F.at(p);
    const LocalDatum* lk = K.at(p);
    PrimeComposition pc;
    pc.prime = p;
    pc.v_f = lf ? lf->valuation() : 0;
    pc.v_k = lk ? lk->valuation() : 0;
    if (lf && lk && !(Y && p > *Y)) {
      if (lf->is_tame() && lk->is_tame()) {
        pc.delta = tame_delta(F, K, *lf, *lk);
      } else {
        pc.wild_overlap = true;
        out.wild_overlap = true;
        if (auto o = overrides.lookup(F, K, p)) {
          const long long cap = std::min(n * pc.v_f, d * pc.v_k);
          if (*o < 0 || *o > cap)
            throw ValidationError(fmt::format("override delta {} at {} for ({}, {}) outside [0, {}]", *o, p, F.label,
                                              K.label, cap));
          pc.delta = *o;
        } else {
          pc.resolved = false;
          out.resolved = false;
        }
      }
    }
    const BigInt pp(p);
    if (pc.resolved) {
      pc.v_fk = n * pc.v_f + d * pc.v_k - pc.delta;
      const BigInt f = ipow(pp, pc.v_fk);
      disc *= f;
      lower *= f;
    } else {
      lower *= ipow(pp, std::max(n * pc.v_f, d * pc.v_k));
    }
    out.primes.push_back(pc);
  }
  out.disc = out.resolved ? disc : BigInt(0);
  out.lower_bound = lower;
  return out;
}

bool covers(const BigInt& cov, long long k, const BigInt& X) {
  // Every field with |disc|^k < X has |disc| <= cov.
  return ipow(cov + 1, k) >= X;
}

struct PairFilter {
  std::vector<const FieldRecord*> fs;
  std::vector<const FieldRecord*> ks;
};

PairFilter select(const Dataset& data, int d, const AbelianGroup& A) {
  PairFilter out;
  for (const auto& r : data.records) {
    if (r.is_symmetric() && r.sd_degree == d) out.fs.push_back(&r);
    if (!r.is_symmetric() && r.abelian == A) out.ks.push_back(&r);
  }
  return out;
}

CensusResult census(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X, std::optional<long long> Y,
                    const WildOverrides& overrides) {
  if (d < 2) throw ValidationError("census needs d >= 2");
  if (A.order() < 2) throw ValidationError("census needs a nontrivial abelian group");
  if (X < 1) throw ValidationError("X must be positive");
  CensusResult res;
  res.X = X;
  const auto cov_f = data.coverage_for_symmetric(d);
  const auto cov_k = data.coverage_for_abelian(A);
  if (!cov_f || !covers(*cov_f, A.order(), X)) {
    res.complete = false;
    res.warnings.push_back(fmt::format("{} coverage does not reach X^(1/{}); counts are lower bounds",
                                       symmetric_label(d), A.order()));
  }
  if (!cov_k || !covers(*cov_k, d, X)) {
    res.complete = false;
    res.warnings.push_back(
        fmt::format("{} coverage does not reach X^(1/{}); counts are lower bounds", A.label(), d));
  }
  const auto sel = select(data, d, A);
  for (const FieldRecord* F : sel.fs) {
    // |Disc FK| >= |Disc F|^{|A|}, so larger F cannot contribute.
    if (ipow(mp::abs(F->disc), A.order()) >= X) continue;
    for (const FieldRecord* K : sel.ks) {
      if (ipow(mp::abs(K->disc), d) >= X) continue;
      const Composition c = compose_impl(*F, *K, Y, overrides);
      if (!c.resolved) {
        if (c.lower_bound < X) ++res.flagged_wild_pairs;
        continue;
      }
      if (c.disc >= X) continue;
      if (linearly_disjoint(*F, *K))
        ++res.count;
      else
        ++res.excluded_nondisjoint;
    }
  }
  if (res.flagged_wild_pairs > 0)
    res.warnings.push_back(fmt::format("{} pairs with unresolved wild overlap excluded", res.flagged_wild_pairs));
  res.fit_constant = static_cast<double>(res.count) / std::pow(to_double(Rational(X)), 1.0 / A.order());
  return res;
}

}  // namespace

int LocalDatum::valuation() const noexcept { return is_tame() ? ind(inertia) : wild_valuation; }

std::string LocalDatum::to_string() const {
  return is_tame() ? fmt::format("{}:t({})", prime, inertia.to_string()) : fmt::format("{}:w({})", prime, wild_valuation);
}

long long FieldRecord::group_order() const { return is_symmetric() ? factorial(sd_degree) : abelian.order(); }

const LocalDatum* FieldRecord::at(long long p) const {
  auto it = std::lower_bound(local.begin(), local.end(), p,
                             [](const LocalDatum& l, long long q) { return l.prime < q; });
  return it != local.end() && it->prime == p ? &*it : nullptr;
}

std::string FieldRecord::to_string() const {
  std::string loc, quads;
  for (std::size_t i = 0; i < local.size(); ++i) loc += (i ? "," : "") + local[i].to_string();
  for (std::size_t i = 0; i < quad_subfield_discs.size(); ++i)
    quads += (i ? "," : "") + std::to_string(quad_subfield_discs[i]);
  return fmt::format("{};{};{};{};{};{}", label, degree, group, disc.str(), loc, quads);
}

std::map<std::string, int> Dataset::group_counts() const {
  std::map<std::string, int> out;
  for (const auto& r : records) ++out[r.group];
  return out;
}

const FieldRecord* Dataset::find(std::string_view label) const {
  for (const auto& r : records)
    if (r.label == label) return &r;
  return nullptr;
}

std::optional<BigInt> Dataset::coverage_for_symmetric(int d) const {
  for (const auto& [g, n] : coverage)
    if (g == symmetric_label(d)) return n;
  return std::nullopt;
}

std::optional<BigInt> Dataset::coverage_for_abelian(const AbelianGroup& A) const {
  for (const auto& [g, n] : coverage) {
    if (g.empty() || g.front() != 'C') continue;
    try {
      if (AbelianGroup::parse(g) == A) return n;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

FieldRecord parse_record(std::string_view line, std::size_t line_number) {
  const auto fields = split(line, ';');
  if (fields.size() != 6)
    throw ParseError(fmt::format("expected 6 ';'-separated fields, found {}", fields.size()), line_number);
  FieldRecord r;
  r.label = std::string(trim(fields[0]));
  const long long deg = parse_ll(trim(fields[1]), line_number, "degree");
  if (deg < 1 || deg > 1000) throw ParseError(fmt::format("degree {} out of range", deg), line_number);
  r.degree = static_cast<int>(deg);
  r.group = std::string(trim(fields[2]));
  if (r.group.size() >= 2 && r.group[0] == 'S') {
    const long long d = parse_ll(std::string_view(r.group).substr(1), line_number, "symmetric degree");
    if (d < 2 || d > 20) throw ParseError(fmt::format("unsupported group {}", r.group), line_number);
    r.sd_degree = static_cast<int>(d);
  } else {
    try {
      r.abelian = AbelianGroup::parse(r.group);
    } catch (const Error& e) {
      throw ParseError(fmt::format("bad group '{}': {}", r.group, e.what()), line_number);
    }
    if (r.abelian.is_trivial()) throw ParseError("trivial group record", line_number);
  }
  try {
    r.disc = parse_bigint(trim(fields[3]));
  } catch (const ParseError&) {
    throw ParseError(fmt::format("bad discriminant '{}'", fields[3]), line_number);
  }
  if (const auto loc = trim(fields[4]); !loc.empty())
    for (auto item : split(loc, ',')) r.local.push_back(parse_local(trim(item), line_number));
  if (const auto qs = trim(fields[5]); !qs.empty())
    for (auto item : split(qs, ',')) r.quad_subfield_discs.push_back(parse_ll(trim(item), line_number, "discriminant"));
  validate_record(r, line_number);
  return r;
}

Dataset parse_dataset(std::istream& in) {
  Dataset data;
  std::set<std::string> labels;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      data.header.push_back(raw);
      if (line.rfind("#coverage", 0) == 0) parse_coverage(line, line_number, data);
      continue;
    }
    FieldRecord r = parse_record(line, line_number);
    if (!labels.insert(r.label).second)
      throw ValidationError(fmt::format("line {}: duplicate label {}", line_number, r.label));
    data.records.push_back(std::move(r));
  }
  return data;
}

Dataset parse_dataset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

Dataset ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open dataset '{}'", path));
  return parse_dataset(in);
}

std::string write_dataset(const Dataset& data) {
  std::string out;
  for (const auto& h : data.header) out += h + '\n';
  std::vector<const FieldRecord*> sorted;
  for (const auto& r : data.records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FieldRecord* a, const FieldRecord* b) { return record_less(*a, *b); });
  for (const auto* r : sorted) out += r->to_string() + '\n';
  return out;
}

bool is_fundamental_discriminant(long long D) {
  if (D == 0 || D == 1) return false;
  const long long r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  const long long m = D / 4;
  const long long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

long long fundamental_discriminant(const FieldRecord& F) {
  BigInt kernel = F.disc < 0 ? -1 : 1;
  for (const auto& loc : F.local)
    if (loc.valuation() % 2 == 1) kernel *= loc.prime;
  if (kernel == 1) throw ValidationError(fmt::format("record {}: discriminant is a square", F.label));
  const BigInt r = ((kernel % 4) + 4) % 4;
  const BigInt D = r == 1 ? kernel : BigInt(4 * kernel);
  if (D > std::numeric_limits<long long>::max() || D < std::numeric_limits<long long>::min())
    throw ValidationError(fmt::format("record {}: fundamental discriminant out of range", F.label));
  return static_cast<long long>(D);
}

WildOverrides WildOverrides::parse(std::istream& in) {
  WildOverrides out;
  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls{std::string(line)};
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w[0] == "pair" && w.size() == 5) {
      out.add_pair(w[1], w[2], parse_ll(w[3], line_number, "prime"), parse_ll(w[4], line_number, "delta"));
    } else if (w[0] == "local" && w.size() == 5) {
      const long long vf = parse_ll(w[2], line_number, "valuation");
      const long long vk = parse_ll(w[3], line_number, "valuation");
      if (vf < 0 || vk < 0 || vf > 1'000'000 || vk > 1'000'000)
        throw ParseError("valuation out of range", line_number);
      out.add_local(parse_ll(w[1], line_number, "prime"), static_cast<int>(vf), static_cast<int>(vk),
                    parse_ll(w[4], line_number, "delta"));
    } else {
      throw ParseError(fmt::format("expected 'pair F K p delta' or 'local p vF vK delta', got '{}'", line),
                       line_number);
    }
  }
  return out;
}

WildOverrides WildOverrides::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open override file '{}'", path));
  return parse(in);
}

void WildOverrides::add_pair(std::string f_label, std::string k_label, long long p, long long delta) {
  pairs_[{std::move(f_label), std::move(k_label), p}] = delta;
}

void WildOverrides::add_local(long long p, int v_f, int v_k, long long delta) { locals_[{p, v_f, v_k}] = delta; }

std::optional<long long> WildOverrides::lookup(const FieldRecord& F, const FieldRecord& K, long long p) const {
  if (auto it = pairs_.find({F.label, K.label, p}); it != pairs_.end()) return it->second;
  const LocalDatum* lf = F.at(p);
  const LocalDatum* lk = K.at(p);
  if (lf && lk)
    if (auto it = locals_.find({p, lf->valuation(), lk->valuation()}); it != locals_.end()) return it->second;
  return std::nullopt;
}

Composition compose_disc(const FieldRecord& F, const FieldRecord& K, const WildOverrides& overrides) {
  return compose_impl(F, K, std::nullopt, overrides);
}

Composition compose_disc_truncated(const FieldRecord& F, const FieldRecord& K, long long Y,
                                   const WildOverrides& overrides) {
  return compose_impl(F, K, Y, overrides);
}

bool linearly_disjoint(const FieldRecord& F, const FieldRecord& K) {
  check_pair(F, K);
  if (K.abelian.order() % 2 == 1) return true;
  if (K.quad_subfield_discs.empty())
    throw InsufficientDataError(
        fmt::format("record {} has even order but lists no quadratic subfields", K.label));
  const long long fd = fundamental_discriminant(F);
  return std::find(K.quad_subfield_discs.begin(), K.quad_subfield_discs.end(), fd) == K.quad_subfield_discs.end();
}

CensusResult count_N(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X,
                     const WildOverrides& overrides) {
  return census(data, d, A, X, std::nullopt, overrides);
}

CensusResult count_N_truncated(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X, long long Y,
                               const WildOverrides& overrides) {
  const long long threshold = static_cast<long long>(A.order()) * factorial(d);
  if (Y <= threshold) throw ValidationError(fmt::format("Y = {} must exceed |A| d! = {}", Y, threshold));
  return census(data, d, A, X, Y, overrides);
}

std::vector<UniformityRange> parse_uniformity_spec(std::string_view text) {
  std::vector<UniformityRange> out;
  std::size_t line_number = 0;
  for (auto raw_line : split(text, '\n')) {
    ++line_number;
    auto line = trim(raw_line);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    for (auto item : split(line, ';')) {
      item = trim(item);
      if (item.empty()) continue;
      std::istringstream ls{std::string(item)};
      std::string classes, q, r, extra;
      if (!(ls >> classes >> q >> r) || (ls >> extra))
        throw ParseError(fmt::format("expected 'classes Q r', got '{}'", item), line_number);
      UniformityRange range;
      for (auto c : split(classes, ',')) {
        try {
          range.classes.push_back(CycleType::parse(trim(c)));
        } catch (const Error& e) {
          throw ParseError(fmt::format("bad class '{}': {}", c, e.what()), line_number);
        }
      }
      try {
        range.Q = parse_bigint(q);
        range.r = parse_rational(r);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_number);
      }
      if (range.Q < 1) throw ValidationError(fmt::format("line {}: Q must be positive", line_number));
      out.push_back(std::move(range));
    }
  }
  std::set<CycleType> seen;
  for (const auto& range : out)
    for (const auto& c : range.classes) {
      if (c.is_identity()) throw ValidationError("uniformity classes must be nontrivial");
      if (!seen.insert(c).second)
        throw ValidationError(fmt::format("class {} appears in two uniformity ranges", c.to_string()));
    }
  return out;
}

UniformityResult measure_uniformity(const Dataset& data, int d, const std::vector<UniformityRange>& spec,
                                    const BigInt& X) {
  std::set<CycleType> seen;
  for (const auto& range : spec)
    for (const auto& c : range.classes) {
      if (c.degree() != d) throw ValidationError(fmt::format("class {} is not of degree {}", c.to_string(), d));
      if (!seen.insert(c).second)
        throw ValidationError(fmt::format("class {} appears in two uniformity ranges", c.to_string()));
    }
  UniformityResult res;
  res.X = X;
  for (const auto& F : data.records) {
    if (!F.is_symmetric() || F.sd_degree != d || mp::abs(F.disc) >= X) continue;
    ++res.fields;
    BigInt weight = 1;
    for (const auto& range : spec) {
      std::vector<long long> primes;
      for (const auto& loc : F.local)
        if (loc.is_tame() && std::find(range.classes.begin(), range.classes.end(), loc.inertia) != range.classes.end())
          primes.push_back(loc.prime);
      if (primes.size() > 30) throw ValidationError(fmt::format("record {} has too many primes", F.label));
      long long subsets = 0;
      for (unsigned long mask = 0; mask < (1UL << primes.size()); ++mask) {
        BigInt q = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask & (1UL << i)) q *= primes[i];
        if (q >= range.Q && q < 2 * range.Q) ++subsets;
      }
      weight *= subsets;
      if (weight == 0) break;
    }
    res.count += weight;
  }
  double denom = to_double(Rational(X));
  for (const auto& range : spec) denom *= std::pow(to_double(Rational(range.Q)), to_double(range.r));
  res.ratio = to_double(Rational(res.count)) / denom;
  return res;
}

}  // namespace malle
