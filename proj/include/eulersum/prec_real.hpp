#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "eulersum/rational.hpp"

namespace eulersum {

// Guard digits carried on top of every requested precision.
inline constexpr int kGuardDigits = 15;

mpfr_prec_t bits_for_digits(int digits);

// Binary floating point value carried at a stated number of significant
// decimal digits. Binary operations work at the larger operand precision.
class PrecReal {
 public:
  explicit PrecReal(int digits = 30);
  PrecReal(long value, int digits);
  PrecReal(const Rational& value, int digits);
  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  // Decimal literal such as "0.98744" or "-1.5e-3".
  static PrecReal parse(std::string_view text, int digits);

  int digits() const { return digits_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  // Same value re-rounded to another precision.
  PrecReal with_digits(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10 |x|; a large negative number for zero.
  double log10_abs() const;

  // Decimal string with exactly `significant` significant digits.
  std::string to_string(int significant) const;
  std::string to_string() const { return to_string(digits_); }

  PrecReal& operator+=(const PrecReal& o);
  PrecReal& operator-=(const PrecReal& o);
  PrecReal& operator*=(const PrecReal& o);
  PrecReal& operator/=(const PrecReal& o);
  PrecReal& operator*=(long k);
  PrecReal& operator/=(long k);

  friend PrecReal operator+(PrecReal a, const PrecReal& b) { return a += b; }
  friend PrecReal operator-(PrecReal a, const PrecReal& b) { return a -= b; }
  friend PrecReal operator*(PrecReal a, const PrecReal& b) { return a *= b; }
  friend PrecReal operator/(PrecReal a, const PrecReal& b) { return a /= b; }
  friend PrecReal operator*(PrecReal a, long k) { return a *= k; }
  friend PrecReal operator/(PrecReal a, long k) { return a /= k; }
  PrecReal operator-() const;

  friend bool operator<(const PrecReal& a, const PrecReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const PrecReal& a, const PrecReal& b) { return b < a; }
  friend bool operator<=(const PrecReal& a, const PrecReal& b) { return !(b < a); }
  friend bool operator>=(const PrecReal& a, const PrecReal& b) { return !(a < b); }

 private:
  void widen_to(int digits);

  mpfr_t v_;
  int digits_;
};

PrecReal abs(const PrecReal& x);
PrecReal pow(const PrecReal& x, long e);
// x^(-s) for a positive integer n, computed at `digits`.
PrecReal inverse_power(long n, long s, int digits);
PrecReal real_ln(const PrecReal& x, int digits);
PrecReal real_pi(int digits);
PrecReal euler_gamma(int digits);
PrecReal ten_to(int exponent, int digits);

// |a - b| <= tol * max(1, |a|, |b|); symmetric and reflexive.
bool agrees(const PrecReal& a, const PrecReal& b, const PrecReal& tol);
// Number of decimal digits on which a and b agree, relative to max(1, |a|),
// capped at `cap`.
int digits_of_agreement(const PrecReal& a, const PrecReal& b, int cap);

}  // namespace eulersum
