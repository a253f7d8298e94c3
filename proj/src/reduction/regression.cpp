#include "eulersum/reduction.hpp"

namespace eulersum {

namespace {

struct Printed {
  const char* tag;
  std::vector<std::pair<const char*, long>> lhs;
  const char* rhs;
};

Identity from_printed(const Printed& p) {
  Identity id;
  id.provenance = p.tag;
  for (const auto& [spec, c] : p.lhs) id.lhs.push_back({parse_sumspec(spec), Rational(c)});
  id.rhs = SymbolicValue::parse(p.rhs);
  return id;
}

Identity integral_display(const char* tag, int p, int q, const char* rhs) {
  Identity id;
  id.provenance = tag;
  id.lhs.push_back({IntegralTerm{IntegralFamily::R, p, q, Rational(-1)}, Rational(1)});
  id.rhs = SymbolicValue::parse(rhs);
  return id;
}

}  // namespace

std::vector<Identity> regression_identities() {
  const std::vector<Printed> printed = {
      {"linear-h1-n3-alt", {{"h(1)/n^3 alt", 1}},
       "-2*lih(4) + 11/4*z(4) + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 7/4*z(3)*ln2"},
      {"linear-l1-n3-alt", {{"l(1)/n^3 alt", 1}}, "3/2*z(4) + 1/2*z(2)*ln2^2 - 1/12*ln2^4 - 2*lih(4)"},
      {"linear-l2-n2", {{"l(2)/n^2", 1}}, "85/16*z(4) - 4*lih(4) + z(2)*ln2^2 - 1/6*ln2^4 - 7/2*z(3)*ln2"},
      {"linear-h2-n2-alt", {{"h(2)/n^2 alt", 1}}, "-51/16*z(4) + 4*lih(4) + 7/2*ln2*z(3) - z(2)*ln2^2 + 1/6*ln2^4"},
      {"l1-zeta-pair-6",
       {{"l(1)*h(3)/n^2", 1}, {"l(1)*h(2)/n^3", 1}},
       "3/4*z(3)^2 + 7/4*z(6) + 5/8*z(2)*z(3)*ln2 - 2*z(2)*lih(4) + 5/4*z(4)*ln2^2 - 1/12*z(2)*ln2^4"},
      {"zeta-quadratic-2-3",
       {{"h(2)*h(3)/n alt", 1}},
       "-161/64*z(6) + 31/16*z(5)*ln2 + 9/32*z(3)^2 + 3/8*z(2)*z(3)*ln2 + 2*z(2)*lih(4) - 5/4*z(4)*ln2^2 "
       "+ 1/12*z(2)*ln2^4 + LS{h(2)/n^4 alt} - LS{l(3)/n^3}"},
      {"l1-alternating-pair-6",
       {{"l(1)*l(3)/n^2 alt", 1}, {"l(1)*l(2)/n^3 alt", 1}},
       "-385/128*z(6) + 31/8*z(5)*ln2 + 3/32*z(3)^2 + 9/8*z(2)*z(3)*ln2 + z(2)*lih(4) - 5/8*z(4)*ln2^2 "
       "+ 1/24*z(2)*ln2^4"},
      {"l-quadratic-2-3",
       {{"l(2)*l(3)/n alt", 1}},
       "163/128*z(6) - 31/16*z(5)*ln2 + 3/16*z(3)^2 - 3/4*z(2)*z(3)*ln2 - z(2)*lih(4) + 5/8*z(4)*ln2^2 "
       "- 1/24*z(2)*ln2^4 + LS{l(2)/n^4} + LS{l(3)/n^3}"},
      {"l1-zeta2-n3",
       {{"l(1)*h(2)/n^3", 1}},
       "29/8*z(2)*z(3)*ln2 - 93/32*z(5)*ln2 - 1855/128*z(6) + 17/16*z(3)^2 - LS{l(1)/n^5 alt} + LS{l(2)/n^4} "
       "+ 4*LS{h(2)/n^4 alt} + 8*LS{h(1)/n^5 alt}"},
      {"l1-zeta3-n2",
       {{"l(1)*h(3)/n^2", 1}},
       "2079/128*z(6) + 93/32*z(5)*ln2 - 5/16*z(3)^2 - 3*z(2)*z(3)*ln2 - 2*z(2)*lih(4) + 5/4*z(4)*ln2^2 "
       "- 1/12*z(2)*ln2^4 + LS{l(1)/n^5 alt} - LS{l(2)/n^4} - 4*LS{h(2)/n^4 alt} - 8*LS{h(1)/n^5 alt}"},
  };
  std::vector<Identity> ids;
  for (const auto& p : printed) ids.push_back(from_printed(p));
  ids.push_back(integral_display("r-integral-4-1", 4, 1, "LS{l(1)/n^5 alt} - 31/16*z(5)*ln2"));
  ids.push_back(
      integral_display("r-integral-2-3", 2, 3, "LS{l(1)/n^5 alt} + 7/8*z(6) - 3/4*z(3)^2 - 31/16*z(5)*ln2"));
  ids.push_back(from_printed({"harmonic-alternating-mixed-5",
                              {{"h(1)*l(1)/n^3 alt", 1}, {"h(1)*l(3)/n alt", -1}},
                              "15/4*z(4)*ln2 - 9/8*z(2)*z(3) - 1/2*z(3)*ln2^2"}));
  return ids;
}

}  // namespace eulersum
