// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "primehopf/classify.hpp"
#include "primehopf/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace primehopf;

namespace {

struct Outcome {
  bool pass = true;
  long cases = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
};

PresentationPtr taft(int n, int t, int k = 1) {
  return Presentation::make(FamilySpec::taft(n, t, Cyclotomic::zeta_power(n, k)));
}
PresentationPtr liu(int n, int w) { return Presentation::make(FamilySpec::liu(n, w)); }
PresentationPtr line(bool laurent) {
  return Presentation::make(laurent ? FamilySpec::laurent_line() : FamilySpec::polynomial_line());
}
PresentationPtr dihedral() { return Presentation::make(FamilySpec::dihedral()); }

Element E(const PresentationPtr& h, const std::string& s) { return Element::parse(h, s); }

std::vector<PresentationPtr> all_tafts(int max_n) {
  std::vector<PresentationPtr> out;
  for (int n = 2; n <= max_n; ++n)
    for (int t = 0; t < n; ++t) out.push_back(taft(n, t));
  return out;
}

std::vector<PresentationPtr> all_lius(int max_n, int max_w) {
  std::vector<PresentationPtr> out;
  for (int n = 2; n <= max_n; ++n)
    for (int w = 1; w <= max_w; ++w) out.push_back(liu(n, w));
  return out;
}

std::vector<PresentationPtr> everything(int max_n) {
  std::vector<PresentationPtr> out{line(false), line(true), dihedral()};
  for (const auto& h : all_tafts(max_n)) out.push_back(h);
  for (const auto& h : all_lius(max_n, 8)) out.push_back(h);
  return out;
}

bool coprime_twistor(const PresentationPtr& h) {
  return h->family() == Family::Liu || std::gcd(h->spec().t, h->n()) == 1;
}

// [n choose s]_q summed over s-subsets of {0..n-1}.
Cyclotomic subset_qbinom(int n, int s, const Cyclotomic& q) {
  Cyclotomic total;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != s) continue;
    long sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += i;
    total += q.pow(sum - static_cast<long>(s) * (s - 1) / 2);
  }
  return total;
}

Element sum_b1_sb2(const Element& b) {
  Element out = Element::zero(b.presentation());
  const Tensor2 db = coproduct(b);
  for (const auto& [k, c] : db.terms()) {
    out += c * (Element::monomial(b.presentation(), k[0]) * antipode(Element::monomial(b.presentation(), k[1])));
  }
  return out;
}

Outcome hopf_axioms() {
  Outcome o;
  for (const auto& h : everything(8)) {
    const AxiomReport r = verify_hopf_axioms(h, 50, 20240601);
    const auto* f = r.first_failure();
    o.check(r.all_pass(), h->label() + ": " + (f ? f->axiom + " on " + f->sample : ""));
    for (const auto& bad : negative_controls(h)) {
      const AxiomReport rb = verify_hopf_axioms(bad, 10, 5);
      o.check(!rb.all_pass(), bad->label() + " passed all axioms");
    }
  }
  return o;
}

Outcome invariant_table() {
  Outcome o;
  auto expect = [&](const PresentationPtr& h, long io, long im, long pd) {
    const IoIm r = io_im(h);
    const long p = pi_degree(h);
    std::ostringstream s;
    s << h->label() << ": got (" << r.io << ", " << r.im << ", " << p << ") want (" << io << ", " << im << ", " << pd << ")";
    o.check(r.io == io && r.im == im && p == pd, s.str());
  };
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < n; ++t) expect(taft(n, t), n, n / std::gcd(n, t), n);
    for (int w = 1; w <= 8; ++w) expect(liu(n, w), n, n, n);
  }
  expect(dihedral(), 2, 1, 2);
  expect(line(false), 1, 1, 1);
  expect(line(true), 1, 1, 1);
  return o;
}

Outcome fixed_rings() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < n; ++t) {
      const auto h = taft(n, t);
      const long m = n / std::gcd(n, t);
      o.check(fixed_ring_generators(*h, FixedSide::Left) == std::vector<std::string>{"x"} &&
                  fixed_ring_generators(*h, FixedSide::Right) == std::vector<std::string>{t ? "x*g^-" + std::to_string(t) : "x"} &&
                  fixed_ring_generators(*h, FixedSide::Both) == std::vector<std::string>{m == 1 ? "x" : "x^" + std::to_string(m)},
              h->label() + ": generator lists");
      for (FixedSide s : {FixedSide::Left, FixedSide::Right, FixedSide::Both}) {
        const FixedRingCheck c = fixed_ring_check(h, s, 2 * n);
        o.check(c.equal && c.generated_inside_fixed, h->label() + ": fixed ring mismatch");
      }
    }
    for (int w = 1; w <= 8; ++w) {
      const auto h = liu(n, w);
      for (FixedSide s : {FixedSide::Left, FixedSide::Right, FixedSide::Both}) {
        const FixedRingCheck c = fixed_ring_check(h, s, 2 * n);
        o.check(c.equal && c.generated_inside_fixed, h->label() + ": fixed ring mismatch");
      }
    }
  }
  return o;
}

Outcome find_i0_search() {
  Outcome o;
  for (int n = 2; n <= 60; ++n) {
    for (int w = 1; w <= 60; ++w) {
      const int b = std::gcd(n, w), np = n / b, wp = w / b;
      bool exists = false;
      for (int i = 0; i < b && !exists; ++i) exists = std::gcd(n, wp + np * i) == 1;
      const int i0 = find_i0(n, w);
      o.check(exists && i0 >= 0 && i0 < b && std::gcd(n, wp + np * i0) == 1,
              "n=" + std::to_string(n) + " w=" + std::to_string(w) + " i0=" + std::to_string(i0));
    }
  }
  return o;
}

Outcome commutation_lift() {
  Outcome o;
  std::vector<PresentationPtr> hs;
  for (const auto& h : all_tafts(6))
    if (coprime_twistor(h)) hs.push_back(h);
  for (const auto& h : all_lius(6, 8)) hs.push_back(h);
  for (const auto& h : hs) {
    const int n = h->n();
    const bool is_taft = h->family() == Family::Taft;
    const Element G = is_taft ? E(h, "g^" + std::to_string(h->spec().t)) : E(h, "g");
    const Element Y = is_taft ? E(h, "x") : E(h, "y");
    const Cyclotomic q = is_taft ? h->spec().xi.pow(h->spec().t) : h->liu().xi;
    std::vector<Element> u;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u.push_back(G.pow(i) * Y.pow(mod_floor(j - i, n)));
    bool ok = true;
    std::string where;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int a = 0; a < n && ok; ++a)
          for (int b = 0; b < n && ok; ++b) {
            const Element& x = u[static_cast<std::size_t>(i * n + j)];
            const Element& y = u[static_cast<std::size_t>(a * n + b)];
            if (!(x * y == q.pow(a * j - i * b) * (y * x))) {
              ok = false;
              where = " at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(a) + "," +
                      std::to_string(b) + ")";
            }
          }
    o.check(ok, h->label() + where);
    o.check(verify_commutation_lift(h).pass, h->label() + ": library check disagrees");
  }
  return o;
}

Outcome twistor_structure() {
  Outcome o;
  std::vector<PresentationPtr> hs;
  for (const auto& h : all_tafts(6))
    if (coprime_twistor(h)) hs.push_back(h);
  for (const auto& h : all_lius(6, 8)) hs.push_back(h);
  for (const auto& h : hs) {
    const TwistorAlgebra T = twistor(h);
    const int n = h->n();
    o.check(T.dim() == n * n, h->label() + ": dimension");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        o.check(T.counit[static_cast<std::size_t>(T.index(i, j))] == Cyclotomic(i == j ? 1L : 0L), h->label() + ": counit");
    for (const auto& r : verify_twistor(T)) o.check(r.pass, h->label() + ": " + r.axiom + " " + r.witness);
    for (int j = 0; j < n; ++j)
      for (int s = 0; s <= j; ++s)
        o.check(T.coefficient(0, j, s, s) == subset_qbinom(j, s, T.q),
                h->label() + ": c^{0" + std::to_string(j) + "}_{" + std::to_string(s) + std::to_string(s) + "}");
    if (h->family() == Family::Liu) {
      const auto t1 = Presentation::make(FamilySpec::taft(n, 1, h->liu().xi));
      const TwistorIso r = twistor_iso(T, twistor(t1));
      o.check(r.isomorphic, h->label() + " vs " + t1->label() + ": " + r.mismatch);
    }
  }
  return o;
}

Outcome skew_primitive_spaces() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (int w = 1; w <= 8; ++w) {
      const auto h = liu(n, w);
      const Element g = E(h, "g");
      // D = 2n, widened when g = h^{w'} f^{i0} itself lies outside.
      const long D = std::max<long>(2 * n, h->growth(g.terms().begin()->first));
      const auto sp = skew_primitives(h, g, D);
      o.check(sp.size() == 2 && same_span(sp, {E(h, "y"), E(h, "1 - g")}), h->label());
    }
    for (int t = 0; t < n; ++t) {
      const auto h = taft(n, t);
      const std::string G = "g^" + std::to_string(t);
      const auto sp = skew_primitives(h, E(h, G), 2 * n);
      std::vector<Element> with = sp;
      with.push_back(E(h, "x"));
      with.push_back(E(h, "1 - " + G));
      o.check(same_span(with, sp), h->label());
      for (const char* z : {"x", "1 - g^t"}) {
        const Element e = E(h, std::string(z) == "x" ? "x" : "1 - " + G);
        o.check(coproduct(e) == tensor(e, E(h, G)) + tensor(E(h, "1"), e), h->label() + ": " + z);
      }
    }
  }
  return o;
}

Outcome strong_grading() {
  Outcome o;
  for (const auto& h : everything(8)) {
    const long io = io_im(h).io;
    for (Side s : {Side::Left, Side::Right}) {
      const auto ws = strong_grading_witnesses(h, s, h->default_window());
      o.check(static_cast<long>(ws.size()) == io, h->label() + ": component count");
      for (const auto& w : ws) {
        o.check(w.ok && counit(w.b) == Cyclotomic(1L) && sum_b1_sb2(w.b) == Element::one(h),
                h->label() + ": component " + std::to_string(w.component));
      }
    }
  }
  return o;
}

Outcome integral_annihilator() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (int t = 0; t < n; ++t) {
      const auto h = taft(n, t);
      const JiqCheck j = jiq_check(h, 2 * n, 2 * n);
      o.check(j.quotient_dimension == static_cast<std::size_t>(n) && j.quotient_commutative_semisimple,
              h->label() + ": quotient");
      o.check(j.taft_xh, h->label() + ": J_iq slice differs from x H slice");
      o.check(j.generators_in_jiq && j.span_inside_kernel && j.span_equals_kernel, h->label() + ": span");
    }
    for (int w = 1; w <= 8; ++w) {
      const auto h = liu(n, w);
      const JiqCheck j = jiq_check(h, n, n);
      o.check(j.quotient_dimension == static_cast<std::size_t>(n) && j.quotient_commutative_semisimple &&
                  j.generators_in_jiq && j.span_inside_kernel && j.span_equals_kernel,
              h->label());
    }
  }
  for (const auto& h : {dihedral(), line(false), line(true)}) {
    const JiqCheck j = jiq_check(h, 4, 4);
    o.check(j.quotient_commutative_semisimple && j.generators_in_jiq && j.span_equals_kernel, h->label());
  }
  return o;
}

// Hopf isomorphism between Taft algebras by search: some v with xi = xi'^v
// and t' = v t mod n.
bool taft_iso_by_search(const PresentationPtr& a, const PresentationPtr& b) {
  const int n = a->n();
  if (n != b->n()) return false;
  for (int v = 1; v < n; ++v) {
    if (std::gcd(v, n) != 1) continue;
    if (a->spec().xi == b->spec().xi.pow(v) && mod_floor(static_cast<long>(v) * a->spec().t - b->spec().t, n) == 0) return true;
  }
  return false;
}

Outcome classification_round_trip() {
  Outcome o;
  for (long n = 1; n <= 8; ++n) {
    for (long m : {1L, n}) {
      for (Dichotomy d : {Dichotomy::Primitive, Dichotomy::Grouplike}) {
        for (const auto& f : classify({n, m, d}).families) {
          for (const auto& s : f.instances) {
            const auto h = Presentation::make(s);
            const IoIm r = io_im(h);
            o.check(r.io == n && r.im == m && dichotomy(h) == dichotomy_name(d),
                    "classify(" + std::to_string(n) + ", " + std::to_string(m) + ") gave " + h->label());
          }
        }
      }
    }
  }
  o.check(classify({6, 2, Dichotomy::Any}).status == "open", "1 < im < io not reported open");

  std::vector<PresentationPtr> grid;
  for (int n : {3, 4, 5, 6})
    for (int k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1)
        for (int t = 0; t < n; ++t) grid.push_back(taft(n, t, k));
  long pairs = 0;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      if (a->n() != b->n()) continue;
      ++pairs;
      const IsoVerdict v = family_iso(a, b);
      const bool expected = taft_iso_by_search(a, b);
      o.check((v.verdict == IsoKind::HopfIsomorphic) == expected && v.verdict != IsoKind::Undecided,
              a->label() + " vs " + b->label() + ": " + iso_kind_name(v.verdict));
      if (v.verdict == IsoKind::HopfIsomorphic) o.check(v.witness && v.inverse, "missing witness");
    }
  }
  std::vector<PresentationPtr> lgrid;
  for (int n : {2, 3, 4, 6})
    for (int w : {1, 2, 3, 4})
      for (int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1)
          for (int i0 = 0; i0 < std::gcd(n, w); ++i0)
            if (i0_admissible(n, w, i0)) lgrid.push_back(Presentation::make(FamilySpec::liu(n, w, Cyclotomic::zeta_power(n, k), i0)));
  for (const auto& a : lgrid) {
    for (const auto& b : lgrid) {
      ++pairs;
      const IsoVerdict v = family_iso(a, b);
      const bool expected = a->liu().n == b->liu().n && a->liu().w == b->liu().w && a->liu().xi == b->liu().xi;
      o.check((v.verdict == IsoKind::HopfIsomorphic) == expected && v.verdict != IsoKind::Undecided,
              a->label() + " vs " + b->label() + ": " + iso_kind_name(v.verdict));
    }
  }
  o.check(pairs >= 100, "grid too small");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hopf axioms on all families, negative controls fail", hopf_axioms},
      {"io / im / PI-degree table for n <= 8", invariant_table},
      {"fixed rings of the winding groups on windows D = 2n", fixed_rings},
      {"find_i0 agrees with exhaustive search, n, w <= 60", find_i0_search},
      {"u_ij commutation for all n^4 tuples, n <= 6", commutation_lift},
      {"twistor tables, q-binomial coefficients, Liu ~ Taft(n,1)", twistor_structure},
      {"skew-primitive spaces", skew_primitive_spaces},
      {"strong grading witnesses in every component", strong_grading},
      {"integral annihilator J_iq", integral_annihilator},
      {"classification round trip and isomorphism grid", classification_round_trip},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %2zu  %-58s %7ld cases  %6.1fs\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.cases, secs);
    if (!o.pass) {
      std::printf("          first failure: %s\n", o.first_failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria pass (%.1fs)\n", static_cast<int>(criteria.size()) - failures, criteria.size(), total);
  return failures == 0 ? 0 : 1;
}
