#include <cstdlib>
#include <string>

#include "eulersum/errors.hpp"
#include "eulersum/series.hpp"

namespace eulersum {

long default_term_budget() {
  if (const char* env = std::getenv("EULERSUM_MAX_TERMS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

namespace {

void check_budget(long n, const EvalOptions& opts) {
  if (n > opts.max_terms) {
    throw BudgetExceeded("partial sum index " + std::to_string(n) + " exceeds term budget " +
                         std::to_string(opts.max_terms));
  }
}

}  // namespace

Rational partial_sum(FactorKind kind, int order, long n, const EvalOptions& opts) {
  if (kind == FactorKind::H) return partial_sum(order, n, Rational(1), opts);
  return -partial_sum(order, n, Rational(-1), opts);
}

Rational partial_sum(int order, long n, const Rational& x, const EvalOptions& opts) {
  if (order < 1) throw ParameterError("partial sum order must be at least 1");
  if (n < 0) throw ParameterError("partial sum index must be non-negative");
  if (x.abs() > Rational(1)) throw DomainError("partial sum argument outside [-1, 1]");
  check_budget(n, opts);
  mpq_class acc = 0;
  mpq_class xk = 1;
  mpz_class kl;
  for (long k = 1; k <= n; ++k) {
    xk *= x.value();
    mpz_ui_pow_ui(kl.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(order));
    acc += xk / mpq_class(kl);
  }
  return Rational(acc);
}

}  // namespace eulersum
