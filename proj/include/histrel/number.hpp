#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace histrel {

/// Exact rational scalar (GMP-backed, expression templates off so `auto`
/// always yields a value).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Count = std::int64_t;

enum class Arithmetic { exact, floating };

template <class T>
inline constexpr Arithmetic arithmetic_of = Arithmetic::floating;
template <>
inline constexpr Arithmetic arithmetic_of<Rational> = Arithmetic::exact;

std::string_view to_string(Arithmetic mode);
Arithmetic parse_arithmetic(std::string_view text);

inline constexpr double kDefaultTolerance = 1e-9;

// Comparison policy. Rational overloads are exact and ignore `tol`; double
// overloads compare with an absolute-or-relative tolerance.
inline bool is_zero(const Rational& v, double = 0.0) { return v == 0; }
inline bool is_zero(double v, double tol) { return v <= tol && v >= -tol; }

inline bool approx_equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
bool approx_equal(double a, double b, double tol);

/// a < b beyond tolerance.
inline bool definitely_less(const Rational& a, const Rational& b, double = 0.0) { return a < b; }
inline bool definitely_less(double a, double b, double tol) { return a < b && !approx_equal(a, b, tol); }

inline bool is_positive(const Rational& v, double = 0.0) { return v > 0; }
inline bool is_positive(double v, double tol) { return v > tol; }

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(double v) { return v; }

template <class T>
T from_count(Count c) {
  return T(static_cast<long long>(c));
}

/// Rationals print as "p/q" in lowest terms ("p" when q = 1); doubles as
/// the shortest decimal that round-trips.
std::string format_number(const Rational& v);
std::string format_number(double v);

Rational parse_rational(std::string_view text);

}  // namespace histrel
