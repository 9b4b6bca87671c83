#include "pflat/rational.hpp"

#include <cctype>

#include "pflat/error.hpp"

namespace pflat {

namespace {

bool valid_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::PreconditionViolated, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!valid_integer_literal(num_part)) {
    throw Error(ErrorCode::Schema, "malformed rational '" + std::string(text) + "'");
  }
  mpq_class value(parse_integer(num_part));
  if (slash != std::string_view::npos) {
    const auto den_part = text.substr(slash + 1);
    if (!valid_integer_literal(den_part) || den_part[0] == '-' || den_part[0] == '+') {
      throw Error(ErrorCode::Schema, "malformed rational '" + std::string(text) + "'");
    }
    const mpz_class den = parse_integer(den_part);
    if (den == 0) {
      throw Error(ErrorCode::Schema, "zero denominator in '" + std::string(text) + "'");
    }
    value /= mpq_class(den);
  }
  return Rational(std::move(value));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::PreconditionViolated, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace pflat
