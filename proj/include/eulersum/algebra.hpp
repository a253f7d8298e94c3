#pragma once

#include <json.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersum/prec_real.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/sum_spec.hpp"

namespace eulersum {

enum class AtomKind { Zeta, ZetaBar, Ln2, LiHalf, Linear };

// Basis constant: zeta(k), alternating zeta(k), ln 2, Li_k(1/2), or an
// unevaluated single-factor Euler sum.
class Atom {
 public:
  static Atom zeta(int k);
  static Atom zeta_bar(int k);
  static Atom ln2();
  static Atom li_half(int k);
  static Atom linear(const SumSpec& spec);

  AtomKind kind() const { return kind_; }
  // k for zeta, zeta_bar and li_half; 1 for ln 2; the spec weight for linear atoms.
  int order() const { return order_; }
  const SumSpec& spec() const;
  int weight() const { return order_; }

  // z(k), zb(k), ln2, lih(k), LS{<sum spec>}
  std::string to_string() const;

  friend bool operator==(const Atom& a, const Atom& b) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  Atom(AtomKind kind, int order, std::optional<SumSpec> spec)
      : kind_(kind), order_(order), spec_(std::move(spec)) {}

  AtomKind kind_;
  int order_;
  std::optional<SumSpec> spec_;
};

// Product of atom powers, kept sorted by atom.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Atom& a, int exponent = 1);

  const std::vector<std::pair<Atom, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int weight() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Atoms joined by '*', powers as '^e'; empty for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<Atom, int>> factors_;
};

// Exact rational combination of monomials; zero coefficients are never stored.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  static SymbolicValue constant(const Rational& c);
  static SymbolicValue of(const Atom& a, const Rational& c = Rational(1));
  static SymbolicValue of(const Monomial& m, const Rational& c = Rational(1));

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  SymbolicValue& operator+=(const SymbolicValue& o);
  SymbolicValue& operator-=(const SymbolicValue& o);
  SymbolicValue& operator*=(const Rational& k);
  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
  friend SymbolicValue operator*(SymbolicValue a, const Rational& k) { return a *= k; }
  friend SymbolicValue operator*(const Rational& k, SymbolicValue a) { return a *= k; }
  SymbolicValue operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) = default;

  // "3/4*z(3)^2 + 7/4*z(6)"; "0" for the empty value.
  std::string to_string() const;
  // {"terms":[{"coeff":"3/4","atoms":[["z",3,2]]}],"weight":6}
  nlohmann::json to_json() const;

  static SymbolicValue parse(std::string_view text);
  static SymbolicValue from_json(const nlohmann::json& j);

 private:
  std::map<Monomial, Rational> terms_;
};

SymbolicValue sv_mul(const SymbolicValue& a, const SymbolicValue& b);
inline SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) { return sv_mul(a, b); }

// Common weight of all monomials, or nothing when weights are mixed. The
// empty value has no weight.
std::optional<int> weight_of(const SymbolicValue& v);

// Rewrites alternating zeta values through zeta, and Li_k(1/2) for k <= 3
// through zeta and ln 2. Products of zeta values are left alone.
SymbolicValue normalize(const SymbolicValue& v);

// Replaces every product of two or more even zeta values by a rational
// multiple of a single zeta(2K), using zeta(2k) in Q * pi^(2k).
SymbolicValue fold_even_zeta(const SymbolicValue& v);

PrecReal atom_numeric(const Atom& a, int digits);
PrecReal sv_numeric(const SymbolicValue& v, int digits);

}  // namespace eulersum
