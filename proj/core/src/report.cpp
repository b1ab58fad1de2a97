#include "primehopf/report.hpp"

#include <algorithm>
#include <exception>

namespace primehopf {

InvariantReport invariant_report(const PresentationPtr& h) {
  InvariantReport r;
  r.family = family_name(h->family());
  r.spec = h->spec();
  r.label = h->label();
  const IoIm ii = io_im(h);
  r.io = ii.io;
  r.im = ii.im;
  r.pi_degree = pi_degree(h);
  r.h_l0_gens = fixed_ring_generators(*h, FixedSide::Left);
  r.h_r0_gens = fixed_ring_generators(*h, FixedSide::Right);
  r.h0_gens = fixed_ring_generators(*h, FixedSide::Both);
  r.jiq_gens = jiq_generators(*h);
  r.dichotomy = dichotomy(h);
  r.integral_character = integral_character(h).str();
  return r;
}

bool SuiteResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.pass; }));
}

std::pair<Element, std::vector<Element>> expected_skew_primitives(const PresentationPtr& h) {
  auto e = [&](const std::string& s) { return Element::parse(h, s); };
  switch (h->family()) {
    case Family::PolynomialLine:
      return {e("1"), {e("x")}};
    case Family::LaurentLine:
      return {e("x"), {e("1 - x")}};
    case Family::Dihedral:
      return {e("g"), {e("1 - g")}};
    case Family::Taft: {
      const int t = h->spec().t;
      if (t == 0) return {e("1"), {e("x")}};
      const std::string a = "g^" + std::to_string(t);
      return {e(a), {e("x"), e("1 - " + a)}};
    }
    case Family::Liu:
      return {e("g"), {e("y"), e("1 - g")}};
  }
  return {};
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string fixed_side_name(FixedSide s) {
  switch (s) {
    case FixedSide::Left:
      return "H^l_0";
    case FixedSide::Right:
      return "H^r_0";
    case FixedSide::Both:
      return "H_0";
  }
  return "?";
}

}  // namespace

SuiteResult run_suite(const PresentationPtr& h, const SuiteOptions& opt) {
  SuiteResult res;
  res.label = h->label();
  const long D = opt.window > 0 ? opt.window : std::min<long>(h->default_window(), 8);
  res.window = D;
  auto add = [&](const std::string& area, const std::string& name, bool pass, std::string detail) {
    res.checks.push_back({area, name, pass, std::move(detail)});
  };
  // Each area runs guarded so one exception does not hide the rest.
  auto guarded = [&](const std::string& area, auto&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      add(area, "exception", false, ex.what());
    }
  };

  guarded("hopf", [&] {
    const AxiomReport ax = verify_hopf_axioms(h, opt.random_count, opt.seed);
    const AxiomRecord* f = ax.first_failure();
    add("hopf", "axioms", ax.all_pass(),
        std::to_string(ax.records.size()) + " records" + (f ? "; first failure " + f->axiom + " on " + f->sample : ""));
  });

  guarded("hopf", [&] {
    const GrouplikeSearch g = grouplikes(h, D);
    add("hopf", "grouplikes-certified", g.certified,
        std::to_string(g.grouplikes.size()) + " group-likes; " + g.certificate);
  });

  guarded("hopf", [&] {
    const auto [a, expected] = expected_skew_primitives(h);
    const auto found = skew_primitives(h, a, D);
    add("hopf", "skew-primitives", same_span(found, expected),
        "(" + a.str() + ", 1)-primitives: " + std::to_string(found.size()) + " basis elements");
  });

  IoIm ii;
  guarded("winding", [&] {
    ii = io_im(h);
    add("winding", "io-im", ii.io >= 1 && ii.im >= 1 && ii.io % ii.im == 0,
        "io = " + std::to_string(ii.io) + ", im = " + std::to_string(ii.im));
  });

  guarded("winding", [&] {
    const auto samples = random_elements(h, std::max<std::size_t>(opt.random_count / 3, 4), std::min<long>(D, 6), opt.seed + 1);
    const auto recs = verify_winding_identities(h, samples);
    const auto bad = std::find_if(recs.begin(), recs.end(), [](const AxiomRecord& r) { return !r.pass; });
    add("winding", "winding-identities", bad == recs.end(),
        bad == recs.end() ? std::to_string(recs.size()) + " records" : bad->axiom + " fails on " + bad->sample);
  });

  guarded("winding", [&] {
    const GradedDecomposition g = graded_decomposition(h, D);
    add("winding", "graded-components", g.components_nonzero(),
        std::to_string(g.left.size()) + " left and " + std::to_string(g.right.size()) + " right components");
  });

  for (FixedSide side : {FixedSide::Left, FixedSide::Right, FixedSide::Both}) {
    guarded("winding", [&] {
      const FixedRingCheck fc = fixed_ring_check(h, side, D);
      add("winding", "fixed-ring " + fixed_side_name(side), fc.equal && fc.generated_inside_fixed,
          "k<" + join(fc.generators) + "> rank " + std::to_string(fc.generated_rank) + " vs " +
              std::to_string(fc.fixed.size()) + " fixed monomials");
    });
  }

  for (Side side : {Side::Left, Side::Right}) {
    guarded("winding", [&] {
      const auto ws = strong_grading_witnesses(h, side, D);
      const bool ok = std::all_of(ws.begin(), ws.end(), [](const GradingWitness& w) { return w.ok; });
      add("winding", side == Side::Left ? "strong-grading left" : "strong-grading right", ok,
          std::to_string(ws.size()) + " components with witnesses");
    });
  }

  guarded("winding", [&] {
    const long jw = h->family() == Family::Taft ? 2L * h->n() : std::max<long>(h->n(), 2);
    const JiqCheck j = jiq_check(h, jw, jw);
    const bool ok = j.quotient_commutative_semisimple && j.generators_in_jiq && j.span_inside_kernel &&
                    j.span_equals_kernel && j.taft_xh;
    add("winding", "jiq", ok,
        "H/J_iq of dimension " + std::to_string(j.quotient_dimension) + ", kernel slice " +
            std::to_string(j.kernel_dimension) + ", span " + std::to_string(j.span_rank));
  });

  guarded("winding", [&] {
    const long pd = pi_degree(h);
    add("winding", "pi-degree", ii.io == 0 || pd == ii.io, "PI-degree " + std::to_string(pd));
  });

  const bool has_twistor = h->family() == Family::Liu ||
                           (h->family() == Family::Taft && gcd_long(h->spec().t, h->n()) == 1);
  if (opt.twistor && has_twistor) {
    guarded("twistor", [&] {
      const TwistorAlgebra T = twistor(h);
      const auto recs = verify_twistor(T);
      const auto bad = std::find_if(recs.begin(), recs.end(), [](const AxiomRecord& r) { return !r.pass; });
      add("twistor", "identities", bad == recs.end(),
          bad == recs.end() ? std::to_string(recs.size()) + " identities" : bad->axiom + ": " + bad->witness);
      const AxiomRecord lift = verify_commutation_lift(h);
      add("twistor", "commutation-lift", lift.pass, lift.pass ? "all tuples" : lift.witness);
    });
  }
  return res;
}

}  // namespace primehopf
