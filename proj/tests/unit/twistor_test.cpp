#include "primehopf/twistor.hpp"

#include <gtest/gtest.h>

using namespace primehopf;

namespace {

PresentationPtr taft(int n, int t, int k = 1) {
  return Presentation::make(FamilySpec::taft(n, t, Cyclotomic::zeta_power(n, k)));
}

void expect_all_pass(const std::vector<AxiomRecord>& recs, const std::string& label) {
  for (const auto& r : recs) EXPECT_TRUE(r.pass) << label << ": " << r.axiom << " " << r.witness;
}

}  // namespace

TEST(Twistor, ScopeChecks) {
  EXPECT_THROW(twistor(taft(4, 2)), std::invalid_argument);
  EXPECT_THROW(twistor(Presentation::make(FamilySpec::dihedral())), std::invalid_argument);
  EXPECT_THROW(twistor(Presentation::make(FamilySpec::laurent_line())), std::invalid_argument);
}

TEST(Twistor, TaftIdentities) {
  for (int n = 2; n <= 5; ++n) {
    for (int t = 1; t < n; ++t) {
      if (gcd_long(n, t) != 1) continue;
      const TwistorAlgebra T = twistor(taft(n, t));
      EXPECT_EQ(T.dim(), n * n);
      EXPECT_EQ(T.q, primitive_root(n).pow(t));
      expect_all_pass(verify_twistor(T), T.source->label());
    }
  }
}

TEST(Twistor, LiuIdentities) {
  for (int n : {2, 3, 4}) {
    for (int w : {1, 2, 4}) {
      const TwistorAlgebra T = twistor(Presentation::make(FamilySpec::liu(n, w)));
      expect_all_pass(verify_twistor(T), T.source->label());
    }
  }
}

TEST(Twistor, CounitAndCoefficients) {
  const TwistorAlgebra T = twistor(taft(4, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(T.counit[static_cast<std::size_t>(T.index(i, j))], Cyclotomic(i == j ? 1L : 0L));
  const Cyclotomic q = primitive_root(4);
  // c^{0j}_{ss} for q = i: [j choose s]_i.
  EXPECT_EQ(T.coefficient(0, 2, 1, 1), Cyclotomic(1L) + q);
  EXPECT_EQ(T.coefficient(0, 3, 1, 1), Cyclotomic(1L) + q + q * q);
  EXPECT_TRUE(T.coefficient(0, 2, 1, 2).is_zero());
}

TEST(Twistor, CommutationLift) {
  EXPECT_TRUE(verify_commutation_lift(taft(3, 2)).pass);
  EXPECT_TRUE(verify_commutation_lift(Presentation::make(FamilySpec::liu(4, 2))).pass);
}

TEST(Twistor, LiuMatchesTaft) {
  for (int n : {2, 3, 4, 5}) {
    for (int w : {1, 3}) {
      const auto l = Presentation::make(FamilySpec::liu(n, w));
      const auto t = Presentation::make(FamilySpec::taft(n, 1, l->liu().xi));
      const TwistorIso r = twistor_iso(twistor(l), twistor(t));
      EXPECT_TRUE(r.isomorphic) << l->label() << ": " << r.mismatch;
    }
  }
  const TwistorIso r = twistor_iso(twistor(taft(4, 1, 1)), twistor(taft(4, 1, 3)));
  EXPECT_FALSE(r.isomorphic);
  EXPECT_FALSE(r.mismatch.empty());
}
