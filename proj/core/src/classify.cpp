#include "primehopf/classify.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace primehopf {

std::string dichotomy_name(Dichotomy d) {
  switch (d) {
    case Dichotomy::Primitive:
      return "primitive";
    case Dichotomy::Grouplike:
      return "grouplike";
    case Dichotomy::Any:
      return "any";
  }
  return "?";
}

Dichotomy parse_dichotomy(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "primitive") return Dichotomy::Primitive;
  if (s == "grouplike" || s == "group-like") return Dichotomy::Grouplike;
  if (s == "any") return Dichotomy::Any;
  throw std::invalid_argument("unknown dichotomy '" + std::string(text) + "'");
}

Classification classify(const ClassificationQuery& q, int max_w) {
  if (q.io < 1 || q.im < 1) throw std::invalid_argument("io and im must be positive");
  if (q.io % q.im != 0) {
    throw std::invalid_argument("im = " + std::to_string(q.im) + " does not divide io = " + std::to_string(q.io));
  }
  Classification c;
  c.query = q;
  const bool want_prim = q.dichotomy != Dichotomy::Grouplike;
  const bool want_group = q.dichotomy != Dichotomy::Primitive;
  const int n = static_cast<int>(q.io);

  if (q.im > 1 && q.im < q.io) {
    c.status = "open";
    c.note = "1 < im < io lies outside the classified range; whether the classification extends there is open";
    return c;
  }
  c.status = "classified";
  if (q.io == 1) {
    if (want_prim) c.families.push_back({Family::PolynomialLine, "k[x]", "primitive", {FamilySpec::polynomial_line()}});
    if (want_group) {
      c.families.push_back({Family::LaurentLine, "k[x^(+-1)]", "grouplike", {FamilySpec::laurent_line()}});
    }
    c.note = "commutative: io = im = 1";
    return c;
  }
  if (q.im == 1) {
    if (want_prim) {
      c.families.push_back({Family::Taft, "H(n,0,xi)", "primitive", {FamilySpec::taft(n, 0)}});
    }
    if (want_group && n == 2) {
      c.families.push_back({Family::Dihedral, "kD", "grouplike", {FamilySpec::dihedral()}});
    }
    c.note = want_group && n != 2 ? "no group-like algebra with im = 1 and io != 2" : "im = 1";
    return c;
  }
  if (want_prim) {
    FamilyTemplate t{Family::Taft, "H(n,t,xi), gcd(t,n) = 1", "primitive", {}};
    for (int s = 1; s < n; ++s)
      if (gcd_long(s, n) == 1) t.instances.push_back(FamilySpec::taft(n, s));
    c.families.push_back(std::move(t));
  }
  if (want_group) {
    FamilyTemplate t{Family::Liu, "B(n,w,xi)", "grouplike", {}};
    for (int w = 1; w <= max_w; ++w) t.instances.push_back(FamilySpec::liu_with_xi(n, w, primitive_root(n)));
    c.families.push_back(std::move(t));
  }
  c.note = "im = io";
  return c;
}

}  // namespace primehopf
