#include "malle/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "malle/error.hpp"
#include "malle/field_census.hpp"
#include "malle/group_model.hpp"
#include "malle/index_calculus.hpp"
#include "malle/splitting_tables.hpp"
#include "malle/verification.hpp"

namespace malle::cli {

namespace {

enum class Format { text, tsv };

// Two-column key/value output.
class Report {
 public:
  explicit Report(Format fmt) : fmt_(fmt) {}
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void print(std::ostream& out) const {
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    for (const auto& [k, v] : rows_) {
      if (fmt_ == Format::tsv)
        out << k << '\t' << v << '\n';
      else
        out << fmt::format("{:<{}}  {}\n", k, w, v);
    }
  }

 private:
  Format fmt_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

// Header plus rows; text output pads columns.
class Table {
 public:
  Table(Format fmt, std::vector<std::string> header) : fmt_(fmt) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> w(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (fmt_ == Format::tsv) {
          if (i) line += '\t';
          line += r[i];
        } else {
          if (i) line += "  ";
          line += fmt::format("{:<{}}", r[i], w[i]);
        }
      }
      while (fmt_ == Format::text && !line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  Format fmt_;
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string classes_string(const std::vector<ProductClass>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " " : "") + cs[i].to_string();
  return s;
}

void add_format(CLI::App* sub, Format& fmt) {
  static const std::map<std::string, Format> names{{"text", Format::text}, {"tsv", Format::tsv}};
  sub->add_option("--format", fmt, "output format: text or tsv")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case))
      ->capture_default_str();
}

int cmd_invariants(int d, const std::string& a_label, Format fmt, std::ostream& out) {
  const AbelianGroup A = AbelianGroup::parse(a_label);
  const auto inv = malle_invariants_product(d, A);
  Report r(fmt);
  r.add("group", fmt::format("S{} x {}", d, A.label()));
  r.add("a", std::to_string(inv.a));
  r.add("exponent", to_string(inv.exponent));
  r.add("b", std::to_string(inv.b));
  r.add("minimal_classes", classes_string(inv.minimal_classes));
  if (!A.is_trivial()) {
    const auto c = abelian_counting_constants(A);
    r.add("a_A", to_string(c.a_A));
    r.add("b(A)", std::to_string(c.b_of_A));
    r.add("b_A", std::to_string(c.b_A));
  }
  r.print(out);
  return 0;
}

int cmd_delta_table(int d, const std::string& a_label, Format fmt, std::ostream& out) {
  const auto table = generate_table(d, AbelianGroup::parse(a_label));
  out << (fmt == Format::tsv ? format_table_tsv(table) : format_table_text(table));
  return 0;
}

int cmd_verify(int dmax, int amax, Format fmt, std::ostream& out) {
  const auto results = verify_lemmas(dmax, amax);
  Table t(fmt, {"status", "property", "cases", "detail"});
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    t.add({r.pass ? "PASS" : "FAIL", r.name, std::to_string(r.cases), r.detail});
  }
  t.print(out);
  out << (all ? "all properties hold\n" : "some properties FAILED\n");
  return all ? 0 : 1;
}

struct TailOptions {
  int d = 3;
  std::string A = "C2";
  std::string preset = "uniformity";
  std::string epsilon = "1/1000";
  std::string scope = "pairs";
  double Y = 1024;
  int m = 0;
};

int cmd_tail(const TailOptions& o, Format fmt, std::ostream& out) {
  TailParams p;
  p.d = o.d;
  p.A = AbelianGroup::parse(o.A);
  p.epsilon = parse_rational(o.epsilon);
  if (p.epsilon <= 0) throw ValidationError("epsilon must be positive");
  p.Y = o.Y;
  p.scope = o.scope == "all" ? ClassScope::all_nontrivial : ClassScope::ramified_pairs;
  p.r = o.preset == "zero" ? zero_exponents(o.d) : uniformity_preset(o.d, p.epsilon);
  const auto b = beta(p);
  const auto margins = hypothesis_b_margin(p.d, p.A, p.r);

  Table terms(fmt, {"class", "delta", "theta", "r", "value"});
  for (const auto& t : b.terms) {
    const auto it = p.r.find(t.cls.sd_part);
    const Rational r = it == p.r.end() ? Rational(0) : it->second;
    terms.add({t.cls.to_string(), std::to_string(t.delta), to_string(t.theta), to_string(r), to_string(t.value)});
  }
  terms.print(out);
  out << '\n';
  Table marg(fmt, {"class", "margin"});
  for (const auto& [g, m] : margins) marg.add({g.generator_string(), to_string(m)});
  marg.print(out);
  out << '\n';

  Report r(fmt);
  r.add("beta", to_string(b.beta));
  r.add("argmax", b.argmax.to_string());
  r.add("beta_negative", yes_no(b.beta < 0));
  const int m = o.m > 0 ? o.m : static_cast<int>(conjugacy_classes_product(p.d, p.A, true).size());
  r.add("m", std::to_string(m));
  r.add("Y", fmt::format("{}", p.Y));
  const auto s = tail_series(b.beta, p.epsilon, m, p.Y);
  r.add("first_r", std::to_string(s.first_r));
  r.add("series", fmt::format("{:.12g}", s.value));
  r.add("comparator", fmt::format("{:.12g}", s.comparator));
  r.add("ratio", fmt::format("{:.12g}", s.value / s.comparator));
  r.print(out);
  return 0;
}

struct CensusOptions {
  std::string dataset;
  int d = 3;
  std::string A = "C2";
  std::vector<std::string> X;
  std::vector<long long> Y;
  std::string overrides;
};

int cmd_census(const CensusOptions& o, Format fmt, std::ostream& out, std::ostream& err) {
  const Dataset data = ingest(o.dataset);
  const AbelianGroup A = AbelianGroup::parse(o.A);
  const WildOverrides wo = o.overrides.empty() ? WildOverrides{} : WildOverrides::load(o.overrides);
  std::vector<std::string> header{"X", "N"};
  for (long long y : o.Y) header.push_back(fmt::format("N_Y(Y={})", y));
  for (const char* h : {"flagged_wild", "excluded_nondisjoint", "fit_constant", "complete"}) header.push_back(h);
  Table t(fmt, header);
  std::set<std::string> warnings;
  for (const auto& xs : o.X) {
    const BigInt X = parse_bigint(xs);
    const auto res = count_N(data, o.d, A, X, wo);
    std::vector<std::string> row{X.str(), std::to_string(res.count)};
    for (long long y : o.Y) row.push_back(std::to_string(count_N_truncated(data, o.d, A, X, y, wo).count));
    row.push_back(std::to_string(res.flagged_wild_pairs));
    row.push_back(std::to_string(res.excluded_nondisjoint));
    row.push_back(fmt::format("{:.6g}", res.fit_constant));
    row.push_back(yes_no(res.complete));
    t.add(std::move(row));
    for (const auto& w : res.warnings) warnings.insert(fmt::format("X={}: {}", X.str(), w));
  }
  t.print(out);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return 0;
}

struct UniformityOptions {
  std::string dataset;
  int d = 3;
  std::string spec;
  std::vector<std::string> X;
};

int cmd_uniformity(const UniformityOptions& o, Format fmt, std::ostream& out) {
  const Dataset data = ingest(o.dataset);
  std::ifstream in(o.spec);
  if (!in) throw Error(fmt::format("cannot open uniformity spec '{}'", o.spec));
  std::stringstream buf;
  buf << in.rdbuf();
  const auto spec = parse_uniformity_spec(buf.str());
  Table t(fmt, {"X", "fields", "count", "ratio"});
  for (const auto& xs : o.X) {
    const auto res = measure_uniformity(data, o.d, spec, parse_bigint(xs));
    t.add({res.X.str(), std::to_string(res.fields), res.count.str(), fmt::format("{:.6g}", res.ratio)});
  }
  t.print(out);
  return 0;
}

struct ComposeOptions {
  std::string dataset;
  std::string F;
  std::string K;
  std::string overrides;
};

int cmd_compose(const ComposeOptions& o, Format fmt, std::ostream& out) {
  const Dataset data = ingest(o.dataset);
  const FieldRecord* F = data.find(o.F);
  const FieldRecord* K = data.find(o.K);
  if (!F) throw ValidationError(fmt::format("no record labelled {}", o.F));
  if (!K) throw ValidationError(fmt::format("no record labelled {}", o.K));
  const WildOverrides wo = o.overrides.empty() ? WildOverrides{} : WildOverrides::load(o.overrides);
  const auto c = compose_disc(*F, *K, wo);
  Table t(fmt, {"p", "v_F", "v_K", "delta", "v_FK", "status"});
  for (const auto& p : c.primes) {
    const std::string status = !p.wild_overlap ? "tame" : p.resolved ? "wild-override" : "wild-overlap";
    t.add({std::to_string(p.prime), std::to_string(p.v_f), std::to_string(p.v_k),
           p.resolved ? std::to_string(p.delta) : "?", p.resolved ? std::to_string(p.v_fk) : "?", status});
  }
  t.print(out);
  out << '\n';
  Report r(fmt);
  r.add("naive", c.naive.str());
  r.add("disc_FK", c.resolved ? c.disc.str() : "unresolved");
  r.add("lower_bound", c.lower_bound.str());
  r.add("wild_overlap", yes_no(c.wild_overlap));
  try {
    r.add("linearly_disjoint", yes_no(linearly_disjoint(*F, *K)));
  } catch (const InsufficientDataError&) {
    r.add("linearly_disjoint", "unknown");
  }
  r.print(out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index calculus, discriminant tables and composita counts for S_d x A"};
  app.require_subcommand(1);
  Format fmt = Format::text;

  int d = 3;
  std::string a_label = "C2";
  auto* inv = app.add_subcommand("invariants", "Malle invariants of S_d x A and abelian counting constants");
  inv->add_option("--d", d, "degree d >= 3")->required();
  inv->add_option("--A", a_label, "abelian group label, e.g. C2 or C2xC4")->required();
  add_format(inv, fmt);

  auto* tab = app.add_subcommand("delta-table", "discriminant valuation table for S_d x C_p");
  tab->add_option("--d", d, "degree")->required();
  tab->add_option("--A", a_label, "cyclic group of prime order")->required();
  add_format(tab, fmt);

  int dmax = 5, amax = 8;
  auto* ver = app.add_subcommand("verify-lemmas", "exhaustive index-calculus checks");
  ver->add_option("--dmax", dmax, "largest degree")->check(CLI::Range(1, 7))->capture_default_str();
  ver->add_option("--amax", amax, "largest |A|")->check(CLI::Range(1, 16))->capture_default_str();
  add_format(ver, fmt);

  TailOptions tail;
  auto* tb = app.add_subcommand("tail-bound", "beta exponent and the dyadic tail series");
  tb->add_option("--d", tail.d, "degree 3, 4 or 5")->required();
  tb->add_option("--A", tail.A, "abelian group label")->required();
  tb->add_option("--preset", tail.preset, "exponents r_g: uniformity or zero")
      ->check(CLI::IsMember({"uniformity", "zero"}))
      ->capture_default_str();
  tb->add_option("--epsilon", tail.epsilon, "epsilon as p/q")->capture_default_str();
  tb->add_option("--Y", tail.Y, "cutoff Y > 1")->capture_default_str();
  tb->add_option("--scope", tail.scope, "classes in the maximum: pairs (g, h both nontrivial) or all")
      ->check(CLI::IsMember({"pairs", "all"}))
      ->capture_default_str();
  tb->add_option("--m", tail.m, "number of dyadic variables (default: nontrivial classes of S_d x A)");
  add_format(tb, fmt);

  CensusOptions cen;
  auto* cs = app.add_subcommand("census", "count composita FK with |Disc FK| < X");
  cs->add_option("--dataset", cen.dataset, "record file")->required()->check(CLI::ExistingFile);
  cs->add_option("--d", cen.d, "degree of F")->required();
  cs->add_option("--A", cen.A, "Galois group of K")->required();
  cs->add_option("--X", cen.X, "bounds (repeatable)")->required();
  cs->add_option("--Y", cen.Y, "truncation parameters for N_Y (repeatable)");
  cs->add_option("--wild-overrides", cen.overrides, "exact delta_p at wild primes")->check(CLI::ExistingFile);
  add_format(cs, fmt);

  UniformityOptions uni;
  auto* un = app.add_subcommand("uniformity", "dyadic splitting-type counts");
  un->add_option("--dataset", uni.dataset, "record file")->required()->check(CLI::ExistingFile);
  un->add_option("--d", uni.d, "degree")->required();
  un->add_option("--uniformity-spec", uni.spec, "ranges 'classes Q r', one per line")
      ->required()
      ->check(CLI::ExistingFile);
  un->add_option("--X", uni.X, "bounds (repeatable)")->required();
  add_format(un, fmt);

  ComposeOptions com;
  auto* co = app.add_subcommand("compose", "discriminant of one compositum FK");
  co->add_option("--dataset", com.dataset, "record file")->required()->check(CLI::ExistingFile);
  co->add_option("--F", com.F, "label of the S_d field")->required();
  co->add_option("--K", com.K, "label of the abelian field")->required();
  co->add_option("--wild-overrides", com.overrides, "exact delta_p at wild primes")->check(CLI::ExistingFile);
  add_format(co, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  try {
    if (*inv) return cmd_invariants(d, a_label, fmt, out);
    if (*tab) return cmd_delta_table(d, a_label, fmt, out);
    if (*ver) return cmd_verify(dmax, amax, fmt, out);
    if (*tb) return cmd_tail(tail, fmt, out);
    if (*cs) return cmd_census(cen, fmt, out, err);
    if (*un) return cmd_uniformity(uni, fmt, out);
    if (*co) return cmd_compose(com, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace malle::cli
