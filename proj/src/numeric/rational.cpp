#include "eulersum/rational.hpp"

#include <cctype>

#include "eulersum/errors.hpp"

namespace eulersum {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto digits_at = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t start = i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end = digits_at(i);
  if (end == i) throw ParseError("expected integer", i);
  std::string num_text(text.substr(start, end - start));
  if (num_text.front() == '+') num_text.erase(0, 1);
  mpz_class num(num_text);
  mpz_class den = 1;
  i = end;
  if (i < text.size() && text[i] == '/') {
    ++i;
    end = digits_at(i);
    if (end == i) throw ParseError("expected denominator", i);
    den = mpz_class(std::string(text.substr(i, end - i)));
    if (den == 0) throw ParseError("zero denominator", i);
    i = end;
  }
  if (i != text.size()) throw ParseError("unexpected character in rational", i);
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational binomial_exact(long n, long k) {
  if (n < 0) throw DomainError("binomial with negative n");
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r, mpz_class(1));
}

Rational factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(1));
}

}  // namespace eulersum
