#include "malle/rational.hpp"

#include <cctype>

#include <fmt/format.h>

#include "malle/error.hpp"

namespace malle {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  BigInt value;
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const auto base = text.substr(0, caret);
    const auto exp = text.substr(caret + 1);
    if (!all_digits(base) || !all_digits(exp) || exp.size() > 4)
      throw ParseError(fmt::format("bad integer '{}'", text));
    value = boost::multiprecision::pow(BigInt(std::string(base)), std::stoi(std::string(exp)));
  } else if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const auto mant = text.substr(0, e);
    const auto exp = text.substr(e + 1);
    if (!all_digits(mant) || !all_digits(exp) || exp.size() > 4)
      throw ParseError(fmt::format("bad integer '{}'", text));
    value = BigInt(std::string(mant)) * boost::multiprecision::pow(BigInt(10), std::stoi(std::string(exp)));
  } else {
    if (!all_digits(text)) throw ParseError(fmt::format("bad integer '{}'", text));
    value = BigInt(std::string(text));
  }
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError(fmt::format("bad rational '{}'", text));
    const BigInt d(std::string{den});
    if (d == 0) throw ParseError(fmt::format("zero denominator in '{}'", text));
    value = Rational(BigInt(std::string(num)), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw ParseError(fmt::format("bad rational '{}'", text));
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    const BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    value = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) throw ParseError(fmt::format("bad rational '{}'", text));
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace malle
