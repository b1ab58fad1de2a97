#include "primehopf/winding.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace primehopf;

namespace {

PresentationPtr taft(int n, int t, int k = 1) {
  return Presentation::make(FamilySpec::taft(n, t, Cyclotomic::zeta_power(n, k)));
}

Element E(const PresentationPtr& h, const std::string& s) { return Element::parse(h, s); }

}  // namespace

TEST(Winding, CharactersAndConvolution) {
  const auto h = taft(6, 1);
  const Character pi = integral_character(h);
  EXPECT_EQ(pi(E(h, "g")), primitive_root(6).inverse());
  EXPECT_TRUE(pi(E(h, "x")).is_zero());
  EXPECT_EQ(character_order(pi), 6);
  EXPECT_EQ(convolve(pi, character_power(pi, 5)), Character::counit(h));
  EXPECT_THROW(Character(h, {{"g", Cyclotomic(2L)}, {"x", Cyclotomic(0L)}}), std::invalid_argument);
  EXPECT_THROW(Character(h, {{"g", Cyclotomic(1L)}, {"x", Cyclotomic(1L)}}), std::invalid_argument);
}

TEST(Winding, WindingIsAlgebraAutomorphism) {
  const auto h = Presentation::make(FamilySpec::liu(4, 2));
  const Character pi = integral_character(h);
  for (Side s : {Side::Left, Side::Right}) {
    const AlgebraMap f = winding_auto(pi, s);
    EXPECT_TRUE(f.relation_failures().empty());
    const Element a = E(h, "y^2 h^-1 + f"), b = E(h, "3 * y h^2");
    EXPECT_EQ(f(a * b), f(a) * f(b));
    EXPECT_EQ(winding_apply(pi, s, a), f(a));
  }
}

TEST(Winding, IntegralOrderAndMinor) {
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < n; ++t) {
      const IoIm r = io_im(taft(n, t));
      EXPECT_EQ(r.io, n);
      EXPECT_EQ(r.im, n / std::gcd(n, t)) << n << " " << t;
    }
    for (int w : {1, 2, 5}) {
      const IoIm r = io_im(Presentation::make(FamilySpec::liu(n, w)));
      EXPECT_EQ(r.io, n);
      EXPECT_EQ(r.im, n);
    }
  }
  const IoIm d = io_im(Presentation::make(FamilySpec::dihedral()));
  EXPECT_EQ(d.io, 2);
  EXPECT_EQ(d.im, 1);
  EXPECT_EQ(io_im(Presentation::make(FamilySpec::polynomial_line())).io, 1);
  EXPECT_EQ(io_im(Presentation::make(FamilySpec::laurent_line())).im, 1);
}

TEST(Winding, WindingIdentities) {
  for (const auto& h : {taft(4, 1), taft(6, 4), Presentation::make(FamilySpec::liu(3, 3)),
                        Presentation::make(FamilySpec::dihedral())}) {
    const auto recs = verify_winding_identities(h, random_elements(h, 6, 4, 11));
    ASSERT_EQ(recs.size(), 30u);
    for (const auto& r : recs) EXPECT_TRUE(r.pass) << h->label() << " " << r.axiom;
  }
}

TEST(Winding, GradedDecomposition) {
  const auto h = taft(4, 2);
  const GradedDecomposition g = graded_decomposition(h, 8);
  EXPECT_TRUE(g.components_nonzero());
  EXPECT_EQ(g.left.size(), 4u);
  // Xi^l fixes x and scales g by xi^-1, so g^a x^b sits in component -a.
  for (const auto& [i, monos] : g.left)
    for (const Monomial& m : monos) EXPECT_EQ(mod_floor(-m.e[0], 4), i);
}

TEST(Winding, FixedRings) {
  for (int n : {2, 3, 4, 6}) {
    for (int t = 0; t < n; ++t) {
      const auto h = taft(n, t);
      for (FixedSide s : {FixedSide::Left, FixedSide::Right, FixedSide::Both}) {
        const FixedRingCheck c = fixed_ring_check(h, s, 2 * n);
        EXPECT_TRUE(c.equal && c.generated_inside_fixed) << h->label();
      }
    }
  }
  const auto t = taft(6, 2);
  EXPECT_EQ(fixed_ring_generators(*t, FixedSide::Right), std::vector<std::string>{"x*g^-2"});
  EXPECT_EQ(fixed_ring_generators(*t, FixedSide::Both), std::vector<std::string>{"x^3"});
  for (int n : {2, 4}) {
    const auto l = Presentation::make(FamilySpec::liu(n, 3));
    for (FixedSide s : {FixedSide::Left, FixedSide::Right, FixedSide::Both})
      EXPECT_TRUE(fixed_ring_check(l, s, 2 * n).equal) << l->label();
  }
}

TEST(Winding, StrongGrading) {
  for (const auto& h : {taft(4, 1), taft(6, 3), Presentation::make(FamilySpec::liu(4, 2)),
                        Presentation::make(FamilySpec::dihedral()), Presentation::make(FamilySpec::laurent_line())}) {
    for (Side s : {Side::Left, Side::Right}) {
      const auto ws = strong_grading_witnesses(h, s, h->default_window());
      EXPECT_EQ(static_cast<long>(ws.size()), io_im(h).io);
      for (const auto& w : ws) {
        EXPECT_TRUE(w.ok);
        EXPECT_EQ(w.certificate, Element::one(h));
      }
    }
  }
}

TEST(Winding, Dichotomy) {
  EXPECT_EQ(dichotomy(taft(4, 1)), "primitive");
  EXPECT_EQ(dichotomy(Presentation::make(FamilySpec::polynomial_line())), "primitive");
  EXPECT_EQ(dichotomy(Presentation::make(FamilySpec::liu(4, 1))), "grouplike");
  EXPECT_EQ(dichotomy(Presentation::make(FamilySpec::dihedral())), "grouplike");
}

TEST(Winding, IntegralAnnihilator) {
  for (int n : {2, 3, 4}) {
    const auto h = taft(n, 1);
    const JiqCheck j = jiq_check(h, 2 * n, 2 * n);
    EXPECT_EQ(j.quotient_dimension, static_cast<std::size_t>(n));
    EXPECT_TRUE(j.quotient_commutative_semisimple);
    EXPECT_TRUE(j.generators_in_jiq);
    EXPECT_TRUE(j.span_equals_kernel);
    EXPECT_TRUE(j.taft_xh);
  }
  const auto l = Presentation::make(FamilySpec::liu(4, 2));
  const JiqCheck j = jiq_check(l, 4, 4);
  EXPECT_TRUE(j.span_equals_kernel && j.generators_in_jiq);
  const Character pi = integral_character(l);
  EXPECT_TRUE(jiq_contains(E(l, "y"), pi, 4));
  EXPECT_FALSE(jiq_contains(E(l, "h"), pi, 4));
}

TEST(Winding, PiDegree) {
  EXPECT_EQ(pi_degree(taft(6, 2)), 6);
  EXPECT_EQ(pi_degree(taft(5, 0)), 5);
  EXPECT_EQ(pi_degree(Presentation::make(FamilySpec::liu(4, 2))), 4);
  EXPECT_EQ(pi_degree(Presentation::make(FamilySpec::dihedral())), 2);
  EXPECT_EQ(pi_degree(Presentation::make(FamilySpec::laurent_line())), 1);
  const CenterInfo c = center_truncated(taft(3, 1), 9);
  EXPECT_TRUE(c.inside_h0);
  EXPECT_EQ(c.rank, 9);
}
