#include "brokentoric/exactla/rational.hpp"

#include <cctype>

#include "brokentoric/error.hpp"

namespace brokentoric::exactla {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  Rational r(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      (slash != std::string_view::npos && (den.front() == '-' || den.front() == '+'))) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw PreconditionError("rational with zero denominator '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace brokentoric::exactla
