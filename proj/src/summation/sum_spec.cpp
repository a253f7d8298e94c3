#include "eulersum/sum_spec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "eulersum/errors.hpp"

namespace eulersum {

SumSpec::SumSpec(std::vector<Factor> factors, int power, bool alternating)
    : power_(power), alternating_(alternating) {
  if (power < 1) throw ParameterError("outer power must be at least 1");
  for (const auto& f : factors) {
    if (f.order < 1) throw ParameterError("factor order must be at least 1");
    if (f.exponent < 1) throw ParameterError("factor exponent must be at least 1");
  }
  std::sort(factors.begin(), factors.end());
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().kind == f.kind && factors_.back().order == f.order) {
      factors_.back().exponent += f.exponent;
    } else {
      factors_.push_back(f);
    }
  }
}

int SumSpec::weight() const {
  int w = power_;
  for (const auto& f : factors_) w += f.order * f.exponent;
  return w;
}

int SumSpec::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.exponent;
  return d;
}

std::string SumSpec::to_string() const {
  std::string out;
  if (factors_.empty()) out = "1";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (i > 0) out += "*";
    out += f.kind == FactorKind::H ? "h(" : "l(";
    out += std::to_string(f.order) + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  out += "/n";
  if (power_ != 1) out += "^" + std::to_string(power_);
  if (alternating_) out += " alt";
  return out;
}

std::strong_ordering operator<=>(const SumSpec& a, const SumSpec& b) {
  if (auto c = a.factors_ <=> b.factors_; c != 0) return c;
  if (auto c = a.power_ <=> b.power_; c != 0) return c;
  return a.alternating_ <=> b.alternating_;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  SumSpec run() {
    skip_ws();
    std::vector<Factor> factors;
    if (peek() == '1') {
      ++pos_;
    } else {
      factors.push_back(factor());
      skip_ws();
      while (peek() == '*') {
        ++pos_;
        skip_ws();
        factors.push_back(factor());
        skip_ws();
      }
    }
    skip_ws();
    expect('/');
    skip_ws();
    expect('n');
    skip_ws();
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      power = positive_int("outer power");
    }
    bool alternating = false;
    skip_ws();
    if (s_.substr(pos_, 3) == "alt") {
      alternating = true;
      pos_ += 3;
    }
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return SumSpec(std::move(factors), power, alternating);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int positive_int(const char* what) {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    if (v < 1) throw ParseError(std::string(what) + " must be at least 1", start);
    return static_cast<int>(v);
  }

  Factor factor() {
    Factor f;
    char c = peek();
    if (c == 'h') {
      f.kind = FactorKind::H;
    } else if (c == 'l') {
      f.kind = FactorKind::L;
    } else {
      throw ParseError("expected factor 'h(k)' or 'l(k)'", pos_);
    }
    ++pos_;
    skip_ws();
    expect('(');
    skip_ws();
    f.order = positive_int("order");
    skip_ws();
    expect(')');
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      f.exponent = positive_int("exponent");
    }
    return f;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SumSpec parse_sumspec(std::string_view text) { return SpecParser(text).run(); }

}  // namespace eulersum
