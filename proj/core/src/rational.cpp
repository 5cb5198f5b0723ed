#include "ellone/rational.hpp"

#include <algorithm>
#include <cctype>

#include "ellone/error.hpp"

namespace ellone {
namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not an exact rational literal: '" + std::string(text) + "'");
  }
  std::string num_text(num);
  if (num_text.front() == '+') num_text.erase(0, 1);
  Integer p(num_text);
  Integer q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_decimal(const Rational& value, int digits) {
  Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Integer whole = num / den;
  Integer rest = num % den;
  std::string out = sign + whole.str();
  if (digits <= 0) return out;
  out += '.';
  for (int i = 0; i < digits; ++i) {
    rest *= 10;
    out += static_cast<char>('0' + static_cast<int>(rest / den));
    rest %= den;
  }
  return out;
}

}  // namespace ellone
