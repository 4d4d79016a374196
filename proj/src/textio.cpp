#include <charconv>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "natgame/numeric.hpp"

namespace natgame {

namespace {

std::string trimmed(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

double parse_plain_double(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty()) throw ArgumentError("empty numeric literal");
  const char* begin = t.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + t.size()) throw ArgumentError("not a number: '" + text + "'");
  return value;
}

// Decimal text -> exact rational: digits, optional fraction part, optional
// base-10 exponent. No binary rounding anywhere.
Rational parse_plain_rational(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty()) throw ArgumentError("empty numeric literal");

  std::size_t pos = 0;
  bool negative = false;
  if (t[pos] == '+' || t[pos] == '-') {
    negative = t[pos] == '-';
    ++pos;
  }

  std::string digits;
  long frac_digits = 0;
  bool seen_digit = false;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
    digits.push_back(t[pos++]);
    seen_digit = true;
  }
  if (pos < t.size() && t[pos] == '.') {
    ++pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
      digits.push_back(t[pos++]);
      ++frac_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ArgumentError("not a number: '" + text + "'");

  long exponent = 0;
  if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      exp_negative = t[pos] == '-';
      ++pos;
    }
    if (pos == t.size()) throw ArgumentError("not a number: '" + text + "'");
    long magnitude = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
      magnitude = magnitude * 10 + (t[pos++] - '0');
      if (magnitude > 100000) throw ArgumentError("exponent out of range: '" + text + "'");
    }
    exponent = exp_negative ? -magnitude : magnitude;
  }
  if (pos != t.size()) throw ArgumentError("not a number: '" + text + "'");

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);
  if (negative) mantissa = -mantissa;

  const long power = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(power < 0 ? -power : power));

  Rational result;
  if (power >= 0) {
    result = Rational(mantissa * scale);
  } else {
    result = Rational(mantissa, scale);
  }
  result.canonicalize();
  return result;
}

}  // namespace

double parse_number_double(const std::string& text) {
  const std::string t = trimmed(text);
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) return parse_plain_double(t);
  if (t.find('/', slash + 1) != std::string::npos)
    throw ArgumentError("not a number: '" + text + "'");
  const double num = parse_plain_double(t.substr(0, slash));
  const double den = parse_plain_double(t.substr(slash + 1));
  if (den == 0.0) throw ArgumentError("division by zero in '" + text + "'");
  return num / den;
}

Rational parse_number_rational(const std::string& text) {
  const std::string t = trimmed(text);
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) return parse_plain_rational(t);
  if (t.find('/', slash + 1) != std::string::npos)
    throw ArgumentError("not a number: '" + text + "'");
  const Rational num = parse_plain_rational(t.substr(0, slash));
  const Rational den = parse_plain_rational(t.substr(slash + 1));
  if (den == 0) throw ArgumentError("division by zero in '" + text + "'");
  Rational result = num / den;
  result.canonicalize();
  return result;
}

std::string format_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

std::string format_roundtrip(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string format_rational(const Rational& value) {
  return value.get_str();
}

namespace detail {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
          out += buffer;
        } else {
          out.push_back(c);
        }
        break;
    }
  }
  return out;
}

}  // namespace detail

}  // namespace natgame
