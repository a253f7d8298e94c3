#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulersum/algebra.hpp"
#include "eulersum/series_identity.hpp"
#include "eulersum/sum_spec.hpp"

namespace eulersum {

// 1/(x^s (1-x)^t) = sum_j a[j-1] / x^j + sum_j b[j-1] / (1-x)^j
struct PartialFractions {
  std::vector<Rational> a;
  std::vector<Rational> b;
};
PartialFractions pf_coeffs(int s, int t);

// sum H_n / n^k
SymbolicValue euler_linear(int k);
// sum zeta_n(p) / n^q for odd p + q, with zeta(1) read as 0.
SymbolicValue fs_odd_linear(int p, int q);
// Closed form of a convergent degree-1 sum when one of the built-in
// formulas covers it.
std::optional<SymbolicValue> linear_lookup(const SumSpec& spec);
// linear_lookup, falling back to the sum itself as a linear atom.
SymbolicValue linear_value(const SumSpec& spec);

// Weight 3 to 6 linear sums with known closed forms, checked numerically
// the first time the table is used.
const std::map<SumSpec, SymbolicValue>& classical_linear_table();
// Rewrites linear atoms through the classical table and the reflection
//   zeta_n(p)/n^q alt + L_n(q)/n^p = zeta(p) zetabar(q) + zetabar(p+q),
// then normalizes and folds even zeta products.
SymbolicValue canonicalize(const SymbolicValue& v);

// I_{p,q}(1) in zeta values.
SymbolicValue integral_I_closed(int p, int q);

enum class IntegralFamily { I, R };
// I_{p,q}(-1) or R_{p,q}(-1) over zeta values, ln 2 and l(1)/n^(p+q) [alt].
SymbolicValue integral_at_minus1(IntegralFamily family, int p, int q);

struct IntegralTerm {
  IntegralFamily family = IntegralFamily::I;
  int p = 1;
  int q = 1;
  Rational x{1};

  int weight() const { return p + q + 1; }
  // "I(2,3)@1", "R(4,1)@-1"
  std::string to_string() const;
};

using LhsTerm = std::variant<SumSpec, IntegralTerm>;

struct WeightedTerm {
  LhsTerm term;
  Rational coeff{1};
};

// sum coeff * lhs term = rhs
struct Identity {
  std::string provenance;
  std::vector<WeightedTerm> lhs;
  SymbolicValue rhs;
  std::vector<std::pair<std::string, int>> parameters;

  nlohmann::json to_json() const;
};

int term_weight(const LhsTerm& term);
std::string term_to_string(const LhsTerm& term);
// True when every lhs term and the rhs share one weight.
bool weight_homogeneous(const Identity& id);

// Families of relations, each assembled from its printed coefficient schedule.
// Parameters out of range raise ParameterError.
Identity harmonic_pair(int p, int m);              // H zeta(p+2m+1)/n^p + H zeta(p)/n^(p+2m+1)
Identity alternating_harmonic_pair(int p, int m);  // the L_n(1) analogue at x = -1
Identity cubic_integral_relation(int s, int t);    // two expansions of int Li_s^2 Li_t / x
Identity harmonic_difference(int p, int m);        // H zeta(p+2m+2)/n^p - H zeta(p)/n^(p+2m+2)
Identity alternating_double_pair(int p, int m);    // L_n(1) L_n(.) sums with alternating sign
Identity symmetric_zeta(int p, int m);             // symmetric relation at (x,y,z) = (-1,1,1)
Identity symmetric_alternating(int p, int m);      // symmetric relation at (x,y,z) = (-1,-1,-1)

SeriesIdentity product_expand(int s, int t);
SeriesIdentity harmonic_pair_generating(int p, int m);
SeriesIdentity symmetric_relation(int l1, int l2, int m);

using FamilyInstance = std::variant<Identity, SeriesIdentity>;
// Family names: harmonic-pair, alternating-harmonic-pair, cubic-integral,
// harmonic-difference, alternating-double-pair, symmetric-zeta,
// symmetric-alternating, product, harmonic-pair-generating, symmetric.
FamilyInstance identity_family(const std::string& name, const std::vector<int>& params);
const std::vector<std::string>& family_names();

// Reduces zeta_n(p) zeta_n(p+2m+1)/n alt and L_n(p) L_n(p+2m+1)/n alt
// (p >= 2, m >= 0) to zeta values, ln 2, Li_4(1/2) and linear atoms.
// Degree-1 specs go through linear_value.
SymbolicValue reduce_quadratic(const SumSpec& spec);

std::vector<Identity> regression_identities();

}  // namespace eulersum
