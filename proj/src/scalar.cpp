#include "sublinear/scalar.hpp"

#include "sublinear/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace sublinear {

std::string_view to_string(Mode mode) {
  return mode == Mode::Rational ? "rational" : "float";
}

Mode parse_mode(std::string_view text) {
  if (text == "rational") return Mode::Rational;
  if (text == "float") return Mode::Float;
  throw InvalidInput("unknown mode '" + std::string(text) + "' (expected rational|float)");
}

namespace {

boost::multiprecision::mpz_int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return boost::multiprecision::mpz_int{std::string(digits)};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidInput("malformed number '" + std::string(whole) + "'");
  boost::multiprecision::mpz_int z = decimal_integer(s);
  return Rational(neg ? -z : z);
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_neg = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_neg = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw InvalidInput("malformed number '" + std::string(whole) + "'");
    exponent = std::stol(std::string(exp_text));
    if (exp_neg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)))
      throw InvalidInput("malformed number '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw InvalidInput("malformed number '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  boost::multiprecision::mpz_int mantissa = decimal_integer(digits);
  boost::multiprecision::mpz_int scale = boost::multiprecision::pow(
      boost::multiprecision::mpz_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational value = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  return neg ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(text.substr(0, slash), text);
    Rational den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
  return parse_integer(text, text);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite number");
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw InvalidInput("cannot format number");
  return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::string format_rational(const Rational& x) {
  return x.str();
}

}  // namespace sublinear
