#include <cctype>
#include <limits>
#include <string>

#include "eulersum/algebra.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

std::string SymbolicValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (!m.is_one()) out += "*" + m.to_string();
  }
  return out;
}

nlohmann::json SymbolicValue::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& [a, e] : m.factors()) {
      switch (a.kind()) {
        case AtomKind::Zeta: atoms.push_back({"z", a.order(), e}); break;
        case AtomKind::ZetaBar: atoms.push_back({"zb", a.order(), e}); break;
        case AtomKind::Ln2: atoms.push_back({"ln2", 1, e}); break;
        case AtomKind::LiHalf: atoms.push_back({"lih", a.order(), e}); break;
        case AtomKind::Linear: atoms.push_back({"LS", a.spec().to_string(), e}); break;
      }
    }
    terms.push_back({{"coeff", c.to_string()}, {"atoms", atoms}});
  }
  nlohmann::json out{{"terms", terms}};
  auto w = weight_of(*this);
  out["weight"] = w ? nlohmann::json(*w) : nlohmann::json(nullptr);
  return out;
}

SymbolicValue SymbolicValue::from_json(const nlohmann::json& j) {
  SymbolicValue v;
  try {
    for (const auto& t : j.at("terms")) {
      Monomial m;
      for (const auto& a : t.at("atoms")) {
        const std::string name = a.at(0).get<std::string>();
        const int e = a.at(2).get<int>();
        if (name == "z") {
          m = m * Monomial(Atom::zeta(a.at(1).get<int>()), e);
        } else if (name == "zb") {
          m = m * Monomial(Atom::zeta_bar(a.at(1).get<int>()), e);
        } else if (name == "ln2") {
          m = m * Monomial(Atom::ln2(), e);
        } else if (name == "lih") {
          m = m * Monomial(Atom::li_half(a.at(1).get<int>()), e);
        } else if (name == "LS") {
          m = m * Monomial(Atom::linear(parse_sumspec(a.at(1).get<std::string>())), e);
        } else {
          throw ParseError("unknown atom '" + name + "'", 0);
        }
      }
      v.add_term(m, Rational::parse(t.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed symbolic value JSON: ") + e.what(), 0);
  }
  return v;
}

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  SymbolicValue run() {
    SymbolicValue v;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign(1);
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          ++pos_;
          sign = Rational(-1);
        } else {
          throw ParseError("expected '+' or '-' between terms", pos_);
        }
        skip_ws();
      }
      if (peek() == '-') {
        ++pos_;
        sign = -sign;
        skip_ws();
      }
      auto [m, c] = term();
      v.add_term(m, sign * c);
      first = false;
      skip_ws();
    }
    if (first) throw ParseError("empty symbolic value", 0);
    return v;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(std::string_view word) const { return s_.substr(pos_, word.size()) == word; }

  int integer() {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return static_cast<int>(v);
  }

  Rational rational() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed coefficient", start + e.offset());
    }
  }

  int indexed(std::string_view name) {
    pos_ += name.size();
    if (peek() != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    int k = integer();
    if (peek() != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
    return k;
  }

  Monomial atom_power() {
    std::size_t start = pos_;
    Atom a = Atom::ln2();
    try {
      if (at("zb(")) {
        a = Atom::zeta_bar(indexed("zb"));
      } else if (at("z(")) {
        a = Atom::zeta(indexed("z"));
      } else if (at("lih(")) {
        a = Atom::li_half(indexed("lih"));
      } else if (at("ln2")) {
        pos_ += 3;
      } else if (at("LS{")) {
        pos_ += 3;
        std::size_t close = s_.find('}', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated LS{", start);
        try {
          a = Atom::linear(parse_sumspec(s_.substr(pos_, close - pos_)));
        } catch (const ParseError& e) {
          throw ParseError("bad sum spec", pos_ + e.offset());
        }
        pos_ = close + 1;
      } else {
        throw ParseError("expected atom", start);
      }
    } catch (const DomainError&) {
      throw ParseError("atom index out of range", start);
    } catch (const ParameterError&) {
      throw ParseError("linear atom must have one factor", start);
    }
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      e = integer();
    }
    return Monomial(a, e);
  }

  std::pair<Monomial, Rational> term() {
    Rational c(1);
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      skip_ws();
      if (peek() != '*') return {m, c};
      ++pos_;
      skip_ws();
    }
    m = atom_power();
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      skip_ws();
      m = m * atom_power();
      skip_ws();
    }
    return {m, c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicValue SymbolicValue::parse(std::string_view text) { return ValueParser(text).run(); }

}  // namespace eulersum
