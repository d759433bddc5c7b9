#include "histrel/number.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "histrel/errors.hpp"

namespace histrel {

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::exact ? "rational" : "float";
}

Arithmetic parse_arithmetic(std::string_view text) {
  if (text == "rational" || text == "exact") return Arithmetic::exact;
  if (text == "float" || text == "floating") return Arithmetic::floating;
  throw Error(ErrorCode::invalid_argument, "unknown arithmetic mode '" + std::string(text) + "'");
}

bool approx_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= tol * scale;
}

std::string format_number(const Rational& v) { return v.str(); }

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_not_of("+0") == std::string_view::npos)
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");
  using Int = boost::multiprecision::mpz_int;
  Int n(std::string(num.front() == '+' ? num.substr(1) : num));
  Int d(std::string(den.front() == '+' ? den.substr(1) : den));
  return Rational(n, d);
}

}  // namespace histrel
