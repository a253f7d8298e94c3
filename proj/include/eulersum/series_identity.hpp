#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulersum/prec_real.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

// scale * x^a * y^b * z^c in the identity's free variables.
struct Argument {
  Rational scale{1};
  std::array<int, 3> powers{0, 0, 0};

  static Argument constant(const Rational& c) { return {c, {0, 0, 0}}; }
  static Argument variable(int index, const Rational& scale = Rational(1)) {
    Argument a{scale, {0, 0, 0}};
    a.powers.at(index) = 1;
    return a;
  }
  friend Argument operator*(const Argument& a, const Argument& b);

  Rational at(const std::vector<Rational>& vars) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct PolylogFactor {
  int order = 1;
  Argument arg;
};

// ln(1 - arg)
struct LogFactor {
  Argument arg;
};

// sum_n outer^n prod zeta_n(order, arg)^exponent / n^power
struct SeriesFactor {
  struct Partial {
    int order = 1;
    Argument arg;
    int exponent = 1;
  };
  std::vector<Partial> partials;
  int power = 1;
  Argument outer;
};

// I_{p,q}(arg) or R_{p,q}(arg)
struct IntegralFactor {
  bool alternating_first = false;  // true for R
  int p = 1;
  int q = 1;
  Argument arg;
};

using FormalFactor = std::variant<PolylogFactor, LogFactor, SeriesFactor, IntegralFactor>;

struct FormalTerm {
  Rational coeff{1};
  std::vector<FormalFactor> factors;
};

// lhs(vars) = rhs(vars) for rational vars in the stated domain.
struct SeriesIdentity {
  std::string name;
  std::vector<std::string> variables;
  std::vector<FormalTerm> lhs;
  std::vector<FormalTerm> rhs;
  std::string domain;
  std::vector<std::pair<std::string, int>> parameters;
};

// Throws ParameterError on a wrong argument count, DomainError for an
// argument outside [-1,1] and DivergentSeries for a divergent constituent.
PrecReal evaluate_side(const std::vector<FormalTerm>& side, const std::vector<Rational>& vars, int digits);
std::string side_to_string(const std::vector<FormalTerm>& side, const std::vector<std::string>& names);

}  // namespace eulersum
