#include "eulersum/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

std::mutex table_mutex;
std::vector<Rational> table{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("negative Bernoulli index");
  std::lock_guard lock(table_mutex);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  while (static_cast<int>(table.size()) <= n) {
    long m = static_cast<long>(table.size());
    if (m > 1 && m % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational acc;
    for (long k = 0; k < m; ++k) acc += binomial_exact(m + 1, k) * table[static_cast<std::size_t>(k)];
    table.push_back(-acc / Rational(m + 1));
  }
  return table[static_cast<std::size_t>(n)];
}

Rational euler_polynomial_at_zero(int j) {
  if (j < 0) throw DomainError("negative Euler index");
  if (j == 0) return Rational(1);
  Rational two_pow = Rational(2).pow(j + 1);
  return Rational(-2) * (two_pow - Rational(1)) * bernoulli(j + 1) / Rational(j + 1);
}

}  // namespace eulersum
