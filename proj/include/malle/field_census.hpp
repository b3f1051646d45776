#pragma once

// Number-field records with per-prime ramification data, composition of an
// S_d field F with an abelian field K, the quadratic-resolvent disjointness
// test, and empirical counts of composita FK by discriminant.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "malle/group_model.hpp"
#include "malle/perm_core.hpp"
#include "malle/rational.hpp"

namespace malle {

struct LocalDatum {
  enum class Kind { tame, wild };

  long long prime = 0;
  Kind kind = Kind::tame;
  CycleType inertia;       // tame only
  int wild_valuation = 0;  // wild only

  bool is_tame() const noexcept { return kind == Kind::tame; }
  // v_p(Disc): ind(inertia) when tame.
  int valuation() const noexcept;
  // "23:t(2.1)" or "2:w(3)".
  std::string to_string() const;
};

struct FieldRecord {
  std::string label;
  int degree = 0;
  std::string group;     // "S3", "S4", ... or an abelian label such as "C2xC2"
  int sd_degree = 0;     // d for S_d records, 0 for abelian ones
  AbelianGroup abelian;  // meaningful when sd_degree == 0
  BigInt disc;
  std::vector<LocalDatum> local;  // ramified primes, increasing
  std::vector<long long> quad_subfield_discs;

  bool is_symmetric() const noexcept { return sd_degree > 0; }
  // d! or |A|: a prime dividing this may only carry wild data.
  long long group_order() const;
  const LocalDatum* at(long long p) const;
  std::string to_string() const;
};

struct Dataset {
  std::vector<std::string> header;  // '#' lines, verbatim and in order
  std::vector<FieldRecord> records;
  // From "#coverage group=G maxdisc=N": every field of group G with
  // |disc| <= N is present.
  std::vector<std::pair<std::string, BigInt>> coverage;

  std::map<std::string, int> group_counts() const;
  const FieldRecord* find(std::string_view label) const;
  std::optional<BigInt> coverage_for_symmetric(int d) const;
  std::optional<BigInt> coverage_for_abelian(const AbelianGroup& A) const;
};

// One record line "label;degree;group;disc;p:t(c1.c2),p:w(v);q1,q2".
// Throws ParseError for grammar problems and ValidationError when the record
// is inconsistent.
FieldRecord parse_record(std::string_view line, std::size_t line_number = 0);

Dataset parse_dataset(std::istream& in);
Dataset parse_dataset_text(std::string_view text);
Dataset ingest(const std::string& path);

// Header lines, then records sorted by (degree, group, |disc|, disc, label).
std::string write_dataset(const Dataset& data);

// The fundamental discriminant of Q(sqrt(disc)), from the record's local data.
// Throws ValidationError when disc is a square.
long long fundamental_discriminant(const FieldRecord& F);
bool is_fundamental_discriminant(long long D);

// Exact delta_p for wild primes, which no formula determines.
class WildOverrides {
 public:
  // Lines "pair FLABEL KLABEL p delta" or "local p vF vK delta"; '#' comments.
  static WildOverrides parse(std::istream& in);
  static WildOverrides load(const std::string& path);

  void add_pair(std::string f_label, std::string k_label, long long p, long long delta);
  void add_local(long long p, int v_f, int v_k, long long delta);
  std::optional<long long> lookup(const FieldRecord& F, const FieldRecord& K, long long p) const;
  bool empty() const noexcept { return pairs_.empty() && locals_.empty(); }

 private:
  std::map<std::tuple<std::string, std::string, long long>, long long> pairs_;
  std::map<std::tuple<long long, int, int>, long long> locals_;
};

struct PrimeComposition {
  long long prime = 0;
  int v_f = 0;
  int v_k = 0;
  long long delta = 0;
  bool wild_overlap = false;  // both ramified and one datum is wild
  bool resolved = true;       // false for a wild overlap with no override
  long long v_fk = 0;         // |A| vF + d vK - delta, when resolved
};

struct Composition {
  BigInt naive;        // |Disc F|^{|A|} |Disc K|^d
  BigInt disc;         // |Disc FK|; meaningful when resolved
  BigInt lower_bound;  // equals disc when resolved
  bool wild_overlap = false;
  bool resolved = true;
  std::vector<PrimeComposition> primes;
};

// Throws ValidationError unless F is an S_d record and K an abelian one, or
// when an override is outside 0 <= delta <= min(|A| vF, d vK).
Composition compose_disc(const FieldRecord& F, const FieldRecord& K, const WildOverrides& overrides = {});

// Like compose_disc, but primes above Y use the naive valuation.
Composition compose_disc_truncated(const FieldRecord& F, const FieldRecord& K, long long Y,
                                   const WildOverrides& overrides = {});

// False iff Q(sqrt(Disc F)) is a subfield of K. Throws InsufficientDataError
// for even |A| when K lists no quadratic subfields.
bool linearly_disjoint(const FieldRecord& F, const FieldRecord& K);

struct CensusResult {
  BigInt X;
  long long count = 0;
  long long flagged_wild_pairs = 0;     // unresolved pairs that may lie below X
  long long excluded_nondisjoint = 0;   // pairs below X with F^c and K not disjoint
  double fit_constant = 0;              // count / X^{1/|A|}
  bool complete = true;
  std::vector<std::string> warnings;
};

CensusResult count_N(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X,
                     const WildOverrides& overrides = {});

// Throws ValidationError unless Y > |A| d!.
CensusResult count_N_truncated(const Dataset& data, int d, const AbelianGroup& A, const BigInt& X, long long Y,
                               const WildOverrides& overrides = {});

struct UniformityRange {
  std::vector<CycleType> classes;
  BigInt Q;
  Rational r;
};

// One range per line "classes Q r", e.g. "2.1 1 1/1000" and "3 7 -999/1000";
// ranges may also be separated by ';'. Throws ValidationError when class
// sets overlap.
std::vector<UniformityRange> parse_uniformity_spec(std::string_view text);

struct UniformityResult {
  BigInt X;
  BigInt count;
  long long fields = 0;  // S_d records with |disc| < X
  double ratio = 0;      // count / (X prod Q_k^{r_k})
};

// Sum over tuples (q_1, ..., q_m), q_k in [Q_k, 2 Q_k) squarefree with every
// p | q_k tamely ramified in F with inertia in the k-th class set, of the
// number of S_d fields F with |disc| < X.
UniformityResult measure_uniformity(const Dataset& data, int d, const std::vector<UniformityRange>& spec,
                                    const BigInt& X);

}  // namespace malle
