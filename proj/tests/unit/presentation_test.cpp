#include "primehopf/element.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace primehopf;

namespace {

PresentationPtr taft(int n, int t, int k = 1) {
  return Presentation::make(FamilySpec::taft(n, t, Cyclotomic::zeta_power(n, k)));
}

Element E(const PresentationPtr& h, const std::string& s) { return Element::parse(h, s); }

// Smallest admissible i by exhaustive search, or -1.
int brute_i0(int n, int w) {
  const int b = std::gcd(n, w), np = n / b, wp = w / b;
  for (int i = 0; i < b; ++i)
    if (std::gcd(n, wp + np * i) == 1) return i;
  return -1;
}

}  // namespace

TEST(Presentation, FamilyNames) {
  EXPECT_EQ(parse_family("TAFT"), Family::Taft);
  EXPECT_EQ(parse_family("kd"), Family::Dihedral);
  EXPECT_EQ(parse_family("poly"), Family::PolynomialLine);
  EXPECT_EQ(parse_family("laurent"), Family::LaurentLine);
  EXPECT_EQ(parse_family("liu"), Family::Liu);
  EXPECT_THROW(parse_family("sweedler"), std::invalid_argument);
}

TEST(Presentation, RejectsBadParameters) {
  EXPECT_THROW(Presentation::make(FamilySpec::taft(4, 4)), std::invalid_argument);
  EXPECT_THROW(Presentation::make(FamilySpec::taft(4, 1, Cyclotomic(-1L))), std::invalid_argument);
  EXPECT_THROW(Presentation::make(FamilySpec::taft(1, 0)), std::invalid_argument);
  EXPECT_THROW(Presentation::make(FamilySpec::liu(4, 2, Cyclotomic::zeta_power(4, 2))), std::invalid_argument);
  // n = 6, w = 4: b = 2, n' = 3, w' = 2; i = 0 gives gcd(6, 2) = 2.
  EXPECT_THROW(Presentation::make(FamilySpec::liu(6, 4, primitive_root(6), 0)), std::invalid_argument);
  EXPECT_NO_THROW(Presentation::make(FamilySpec::liu(6, 4, primitive_root(6), 1)));
}

TEST(Presentation, FindI0Examples) {
  EXPECT_EQ(find_i0(6, 4), 1);
  EXPECT_EQ(find_i0_raw(4, 2), 2);
  EXPECT_EQ(find_i0(4, 2), 0);
  for (int n = 2; n <= 12; ++n)
    for (int w = 1; w <= 12; ++w)
      if (std::gcd(n, w) == 1) {
        EXPECT_EQ(find_i0(n, w), 0);
      }
}

TEST(Presentation, FindI0AgreesWithSearch) {
  for (int n = 2; n <= 60; ++n) {
    for (int w = 1; w <= 60; ++w) {
      const int b = std::gcd(n, w), np = n / b, wp = w / b;
      const int i0 = find_i0(n, w);
      ASSERT_GE(brute_i0(n, w), 0);
      ASSERT_TRUE(i0 >= 0 && i0 < b) << n << " " << w;
      ASSERT_EQ(std::gcd(n, wp + np * i0), 1) << n << " " << w;
      ASSERT_EQ(i0_admissible(n, w, i0), true);
      ASSERT_EQ(mod_floor(find_i0_raw(n, w), b), i0);
    }
  }
}

TEST(Presentation, TaftProducts) {
  for (int n : {2, 3, 4, 6}) {
    for (int t = 0; t < n; ++t) {
      const auto h = taft(n, t);
      const Cyclotomic xi = h->spec().xi;
      EXPECT_EQ(E(h, "g*x*g*x"), xi * E(h, "g^2*x^2"));
      EXPECT_EQ(E(h, "g").pow(n), E(h, "1"));
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b < n; ++b) {
          const Element lhs = E(h, "x").pow(a) * E(h, "g").pow(b);
          const Element rhs = xi.pow(a * b) * (E(h, "g").pow(b) * E(h, "x").pow(a));
          EXPECT_EQ(lhs, rhs);
        }
      EXPECT_EQ(E(h, "g^-1"), E(h, "g^" + std::to_string(n - 1)));
    }
  }
}

TEST(Presentation, DihedralProducts) {
  const auto h = Presentation::make(FamilySpec::dihedral());
  EXPECT_EQ(E(h, "g*x*g*x"), E(h, "1"));
  EXPECT_EQ(E(h, "g*x^3*g"), E(h, "x^-3"));
  EXPECT_EQ(E(h, "g^2"), E(h, "1"));
}

TEST(Presentation, LiuIdentities) {
  for (int n : {2, 3, 4, 6}) {
    for (int w : {1, 2, 3, 4, 6}) {
      const auto h = Presentation::make(FamilySpec::liu(n, w));
      const LiuParams& p = h->liu();
      EXPECT_EQ(p.u * (p.wp + p.np * p.i0) + p.v * n, 1);
      EXPECT_EQ(E(h, "g").pow(n), E(h, "x").pow(w));
      EXPECT_EQ(E(h, "y").pow(n), E(h, "1") - E(h, "x").pow(w));
      EXPECT_EQ(E(h, "y*g"), p.xi * E(h, "g*y"));
      EXPECT_EQ(E(h, "x*y"), E(h, "y*x"));
      EXPECT_EQ(E(h, "x*h"), E(h, "h*x"));
      EXPECT_EQ(E(h, "y*h"), p.theta * E(h, "h*y"));
      EXPECT_EQ(E(h, "f").pow(p.b), E(h, "1"));
      EXPECT_EQ(E(h, "x*x^-1"), E(h, "1"));
      EXPECT_EQ(E(h, "h^" + std::to_string(p.np) + "*f^-1"), E(h, "x"));
    }
  }
}

TEST(Presentation, RelationsHoldInNormalForm) {
  std::vector<PresentationPtr> hs{Presentation::make(FamilySpec::polynomial_line()),
                                  Presentation::make(FamilySpec::laurent_line()),
                                  Presentation::make(FamilySpec::dihedral()), taft(5, 2), taft(6, 3, 5),
                                  Presentation::make(FamilySpec::liu(6, 4)), Presentation::make(FamilySpec::liu(8, 6))};
  for (const auto& h : hs) {
    for (const Relation& r : h->relations()) {
      Terms rhs;
      for (const auto& [c, w] : r.rhs)
        for (const auto& [m, d] : h->word_terms(w)) add_term(rhs, m, c * d);
      EXPECT_EQ(h->word_terms(r.lhs), rhs) << h->label() << " " << r.label;
    }
  }
}

TEST(Presentation, WindowsAndGrowth) {
  const auto t = taft(3, 1);
  EXPECT_EQ(t->window(2).size(), 9u);
  const auto l = Presentation::make(FamilySpec::liu(4, 2));
  for (const Monomial& m : l->window(3)) {
    EXPECT_TRUE(l->is_normal(m));
    EXPECT_LE(std::abs(l->growth(m)), 3);
  }
  EXPECT_EQ(Presentation::make(FamilySpec::laurent_line())->window(2).size(), 5u);
}

TEST(Element, ParseAndPrint) {
  const auto h = taft(4, 1);
  const Element a = E(h, "(1 + z(4)^1) * x^2 g - 3/2 * g^3");
  EXPECT_EQ(E(h, a.str()), a);
  EXPECT_EQ(E(h, "x g"), E(h, "x*g"));
  EXPECT_EQ(E(h, "0").str(), "0");
  EXPECT_EQ(E(h, "2 * g").str(), "2 * g");
  EXPECT_THROW(E(h, "x^-1"), std::invalid_argument);
  EXPECT_THROW(E(h, "q"), std::invalid_argument);
  EXPECT_THROW(E(h, "(x + 1"), std::invalid_argument);
}

TEST(Element, RingAxiomsOnSamples) {
  const auto h = Presentation::make(FamilySpec::liu(4, 2));
  const Element a = E(h, "y + 2 * h^-1"), b = E(h, "f*y^2 - h"), c = E(h, "z(4)^1 * h^3 y + 1");
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_TRUE((a - a).is_zero());
}
