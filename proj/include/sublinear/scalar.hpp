#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace sublinear {

using Rational = boost::multiprecision::mpq_rational;

/// Arithmetic mode a verdict was produced in. Rational verdicts are exact;
/// float verdicts compare with an absolute tolerance.
enum class Mode { Rational, Float };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Mode mode = Mode::Rational;
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool positive(const Rational& x) { return x > 0; }
  static bool negative(const Rational& x) { return x < 0; }
  /// Point identity used when deduplicating supports, grids and point sets.
  static bool same_point_coord(const Rational& a, const Rational& b) { return a == b; }
  static bool normalized(const Rational& sum) { return sum == 1; }
};

template <>
struct ScalarTraits<double> {
  static constexpr Mode mode = Mode::Float;
  static constexpr double tolerance = 1e-9;
  static constexpr double dedupe_tolerance = 1e-12;
  static constexpr double normalization_tolerance = 1e-12;

  static bool is_zero(double x) { return std::abs(x) <= tolerance; }
  static bool equal(double a, double b) { return std::abs(a - b) <= tolerance; }
  static bool positive(double x) { return x > tolerance; }
  static bool negative(double x) { return x < -tolerance; }
  static bool same_point_coord(double a, double b) { return std::abs(a - b) <= dedupe_tolerance; }
  static bool normalized(double sum) { return std::abs(sum - 1.0) <= normalization_tolerance; }
};

template <Scalar T>
constexpr Mode mode_of() {
  return ScalarTraits<T>::mode;
}

template <Scalar T>
T positive_part(const T& x) {
  return x > 0 ? x : T(0);
}

template <Scalar T>
T negative_part(const T& x) {
  return x < 0 ? T(-x) : T(0);
}

template <Scalar T>
T ratio(std::int64_t num, std::int64_t den) {
  if constexpr (std::same_as<T, Rational>) {
    return Rational(num, den);
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <Scalar T>
double to_double(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return x.template convert_to<double>();
  } else {
    return x;
  }
}

/// Exact power by repeated squaring.
template <Scalar T>
T power(T base, std::uint64_t exponent) {
  T result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

/// Accepts "p/q", integers and decimal literals ("0.25", "-1e-3").
Rational parse_rational(std::string_view text);
/// Exact rational value of the shortest decimal that round-trips `x`.
Rational rational_from_double(double x);
std::string format_rational(const Rational& x);

template <Scalar T>
T parse_scalar(std::string_view text) {
  if constexpr (std::same_as<T, Rational>) {
    return parse_rational(text);
  } else {
    return parse_rational(text).convert_to<double>();
  }
}

}  // namespace sublinear
