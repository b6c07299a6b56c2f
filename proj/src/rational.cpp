#include "omni/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace omni {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer");
  s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
  Integer v{std::string(s)};
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    den_text.remove_prefix(std::min(den_text.find_first_not_of('0'), den_text.size() - 1));
    Integer den{std::string(den_text)};
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    std::string text_digits = std::string(whole) + std::string(frac);
    // cpp_int reads a leading 0 as an octal prefix.
    text_digits.erase(0, std::min(text_digits.find_first_not_of('0'), text_digits.size()));
    Integer digits{text_digits.empty() ? std::string("0") : text_digits};
    Rational value(digits, scale);
    return negative ? Rational(-value) : value;
  }

  try {
    return Rational(parse_integer(text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  Integer num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;
  Integer scaled = num * scale;
  Integer q = scaled / den;
  Integer rem = scaled % den;
  if (rem * 2 >= den) q += 1;

  std::string text = q.str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) text.insert(0, "-");
  return text;
}

}  // namespace omni
