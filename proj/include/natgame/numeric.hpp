#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "natgame/errors.hpp"

namespace natgame {

/// Exact arbitrary-precision rational, used for the zero-tolerance mode.
using Rational = mpq_class;

/// Per-scalar numeric policy. Float mode works with small tolerances;
/// exact mode compares with equality throughout.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double probability_tolerance() { return 1e-12; }
  static double certificate_tolerance() { return 1e-9; }
  static double structure_tolerance() { return 1e-12; }
  static double to_double(double v) { return v; }
  static const char* mode_name() { return "float"; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational probability_tolerance() { return Rational(0); }
  static Rational certificate_tolerance() { return Rational(0); }
  static Rational structure_tolerance() { return Rational(0); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static const char* mode_name() { return "exact"; }
};

// gmpxx arithmetic yields expression templates; materialize through T before
// mixing with std algorithms.
template <class T>
inline T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

template <class T>
inline const T& max_of(const T& a, const T& b) {
  return a < b ? b : a;
}

template <class T>
inline const T& min_of(const T& a, const T& b) {
  return b < a ? b : a;
}

/// lhs > rhs with a relative slack of structure_tolerance() in float mode;
/// strict comparison in exact mode. Equality never counts as greater.
template <class T>
inline bool definitely_greater(const T& lhs, const T& rhs) {
  if constexpr (scalar_traits<T>::exact) {
    return lhs > rhs;
  } else {
    const T scale = max_of(abs_value(lhs), abs_value(rhs));
    return lhs - rhs > scalar_traits<T>::structure_tolerance() * scale;
  }
}

/// |a - b| within a relative tolerance of `scale` (exact equality in exact mode).
template <class T>
inline bool approx_equal(const T& a, const T& b) {
  if constexpr (scalar_traits<T>::exact) {
    return a == b;
  } else {
    const T scale = max_of(abs_value(a), abs_value(b));
    return abs_value(T(a - b)) <= scalar_traits<T>::structure_tolerance() * scale;
  }
}

template <class T>
inline bool approx_zero(const T& a, const T& scale) {
  if constexpr (scalar_traits<T>::exact) {
    return a == T(0);
  } else {
    return abs_value(a) <= scalar_traits<T>::structure_tolerance() * max_of(scale, T(1));
  }
}

/// Parses "30", "3.5", "-2e-3" or a one-slash fraction "1/3.5".
/// The rational overload evaluates the decimal text exactly.
double parse_number_double(const std::string& text);
Rational parse_number_rational(const std::string& text);

template <class T>
T parse_number(const std::string& text);

template <>
inline double parse_number<double>(const std::string& text) {
  return parse_number_double(text);
}

template <>
inline Rational parse_number<Rational>(const std::string& text) {
  return parse_number_rational(text);
}

/// printf %.*g with a fixed significant-digit count; byte-deterministic.
std::string format_significant(double value, int digits);

/// Shortest representation that round-trips through parse_number_double.
std::string format_roundtrip(double value);

/// "p/q", or just "p" for integers.
std::string format_rational(const Rational& value);

}  // namespace natgame
