#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vietoris {

/// Exact rational scalar (GMP backed, no expression templates so it plays
/// well with Eigen containers and `auto`).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using PointId = std::size_t;

/// Base class for everything the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad JSON, a non-metric, ...).
class InputError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Comparison policy per scalar type. Rational comparisons are exact; double
/// comparisons use an absolute tolerance so that a strict `<` between two
/// values that should be equal comes out false.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool less(const Rational& a, const Rational& b) { return a < b; }
  static bool less_equal(const Rational& a, const Rational& b) { return a <= b; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_positive(const Rational& a) { return a > 0; }
  static double to_double(const Rational& a) { return a.convert_to<double>(); }
  static Rational from_rational(const Rational& a) { return a; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-9;
  static bool less(double a, double b) { return a < b - tolerance; }
  static bool less_equal(double a, double b) { return a <= b + tolerance; }
  static bool equal(double a, double b) { return std::abs(a - b) <= tolerance; }
  static bool is_zero(double a) { return std::abs(a) <= tolerance; }
  static bool is_positive(double a) { return a > tolerance; }
  static double to_double(double a) { return a; }
  static double from_rational(const Rational& a) { return a.convert_to<double>(); }
};

template <typename T>
concept Scalar = requires { ScalarTraits<T>::exact; };

/// Parses "3/2", "-7", "0.25" or "1e-3" exactly. Throws InputError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);
std::string to_string(double value);

inline Rational abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

template <Scalar T>
T min_of(const T& a, const T& b) {
  return b < a ? b : a;
}

template <Scalar T>
T max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

}  // namespace vietoris
