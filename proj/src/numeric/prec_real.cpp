#include "eulersum/prec_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "eulersum/errors.hpp"

namespace eulersum {

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw ParameterError("digits must be positive");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 8;
}

PrecReal::PrecReal(int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_zero(v_, 1);
}

PrecReal::PrecReal(long value, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

PrecReal::PrecReal(const Rational& value, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_q(v_, value.value().get_mpq_t(), MPFR_RNDN);
}

PrecReal::PrecReal(const PrecReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

PrecReal::PrecReal(PrecReal&& other) noexcept : digits_(other.digits_) {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  *v_ = *other.v_;
  mpfr_init2(other.v_, MPFR_PREC_MIN);
  mpfr_set_zero(other.v_, 1);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this == &other) return *this;
  mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
  digits_ = other.digits_;
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  if (this == &other) return *this;
  mpfr_swap(v_, other.v_);
  std::swap(digits_, other.digits_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(v_); }

PrecReal PrecReal::parse(std::string_view text, int digits) {
  PrecReal r(digits);
  std::string s(text);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw ParseError("malformed decimal", 0);
  return r;
}

PrecReal PrecReal::with_digits(int digits) const {
  PrecReal r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

double PrecReal::log10_abs() const {
  if (is_zero()) return -1e9;
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp) * 0.30102999566398120;
}

std::string PrecReal::to_string(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(significant), v_, MPFR_RNDN),
      [](char* p) { mpfr_free_str(p); });
  std::string mant(raw.get());
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string out = neg ? "-" : "";
  // Plain positional notation for moderate exponents, scientific otherwise.
  if (exp > 0 && exp <= 40) {
    auto e = static_cast<std::size_t>(exp);
    if (e >= mant.size()) {
      out += mant + std::string(e - mant.size(), '0');
    } else {
      out += mant.substr(0, e) + "." + mant.substr(e);
    }
  } else if (exp <= 0 && exp > -8) {
    out += "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  } else {
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(exp) - 1);
  }
  return out;
}

void PrecReal::widen_to(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(v_, bits_for_digits(digits), MPFR_RNDN);
  digits_ = digits;
}

PrecReal& PrecReal::operator+=(const PrecReal& o) {
  widen_to(o.digits_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& o) {
  widen_to(o.digits_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(const PrecReal& o) {
  widen_to(o.digits_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  widen_to(o.digits_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

PrecReal& PrecReal::operator/=(long k) {
  if (k == 0) throw DomainError("division by zero");
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

PrecReal PrecReal::operator-() const {
  PrecReal r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

PrecReal abs(const PrecReal& x) {
  PrecReal r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

PrecReal pow(const PrecReal& x, long e) {
  PrecReal r(x.digits());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

PrecReal inverse_power(long n, long s, int digits) {
  PrecReal r(n, digits);
  mpfr_pow_si(r.get(), r.get(), -s, MPFR_RNDN);
  return r;
}

PrecReal real_ln(const PrecReal& x, int digits) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
  PrecReal r(digits);
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

PrecReal real_pi(int digits) {
  PrecReal r(digits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

PrecReal euler_gamma(int digits) {
  PrecReal r(digits);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

PrecReal ten_to(int exponent, int digits) {
  PrecReal r(10, digits);
  mpfr_pow_si(r.get(), r.get(), exponent, MPFR_RNDN);
  return r;
}

bool agrees(const PrecReal& a, const PrecReal& b, const PrecReal& tol) {
  PrecReal scale = std::max(abs(a), abs(b));
  if (scale < PrecReal(1, scale.digits())) scale = PrecReal(1, scale.digits());
  return abs(a - b) <= tol * scale;
}

int digits_of_agreement(const PrecReal& a, const PrecReal& b, int cap) {
  PrecReal diff = abs(a - b);
  if (diff.is_zero()) return cap;
  double scale = std::max(0.0, abs(a).log10_abs());
  double d = std::floor(scale - diff.log10_abs());
  return static_cast<int>(std::clamp(d, 0.0, static_cast<double>(cap)));
}

}  // namespace eulersum
