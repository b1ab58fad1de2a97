#include "primehopf/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace primehopf;

namespace {

struct FamilyArgs {
  std::string family;
  int n = 0;
  int t = 0;
  int w = 1;
  std::string xi;
  std::string theta;
  int i0 = -1;

  void add_to(CLI::App* app, const std::string& suffix = "") {
    app->add_option("--family" + suffix, family, "poly | laurent | dihedral | taft | liu")->required();
    app->add_option("--n" + suffix, n, "order n (Taft, Liu)");
    app->add_option("--t" + suffix, t, "Taft exponent t, 0 <= t < n");
    app->add_option("--w" + suffix, w, "Liu parameter w >= 1");
    app->add_option("--xi" + suffix, xi, "primitive n-th root of unity, e.g. z(6)^5");
    app->add_option("--theta" + suffix, theta, "Liu only: theta instead of xi");
    app->add_option("--i0" + suffix, i0, "Liu only, with --theta: the exponent i0");
  }

  FamilySpec spec() const {
    const Family f = parse_family(family);
    switch (f) {
      case Family::PolynomialLine:
        return FamilySpec::polynomial_line();
      case Family::LaurentLine:
        return FamilySpec::laurent_line();
      case Family::Dihedral:
        return FamilySpec::dihedral();
      case Family::Taft:
        if (n < 2) throw std::invalid_argument("Taft needs --n >= 2");
        return FamilySpec::taft(n, t, xi.empty() ? primitive_root(n) : Cyclotomic::parse(xi));
      case Family::Liu:
        if (n < 2) throw std::invalid_argument("Liu needs --n >= 2");
        if (!xi.empty() && !theta.empty()) throw std::invalid_argument("give --xi or --theta, not both");
        if (!xi.empty()) return FamilySpec::liu_with_xi(n, w, Cyclotomic::parse(xi));
        return FamilySpec::liu(n, w, theta.empty() ? primitive_root(n) : Cyclotomic::parse(theta), i0);
    }
    throw std::invalid_argument("unknown family");
  }

  PresentationPtr make() const { return Presentation::make(spec()); }
};

std::map<std::string, std::string> parse_map(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("map entry '" + item + "' lacks '='");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return out;
}

AlgebraMap build_map(const PresentationPtr& src, const PresentationPtr& dst, const std::string& text) {
  std::map<std::string, Element> images;
  for (const auto& [k, v] : parse_map(text)) images.emplace(k, Element::parse(dst, v));
  return AlgebraMap::from_letters(src, dst, images);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime regular Hopf algebras of GK-dimension one: construction, invariants and checks"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  long window = 0;
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", out_path, "write the document to this file instead of stdout");

  auto with_common = [&](CLI::App* sub, FamilyArgs& fa) {
    fa.add_to(sub);
    sub->add_option("--window", window, "truncation window D (0: per-command default)");
    sub->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", out_path, "write the document to this file instead of stdout");
  };

  FamilyArgs fa, fb;
  std::size_t samples = 50;
  std::uint64_t seed = 20240601;
  std::string a_text, map_text, inverse_text;
  long io = 1, im = 1;
  std::string dich = "any";

  auto* make = app.add_subcommand("make", "build a presentation and print generators, coalgebra data and relations");
  with_common(make, fa);
  auto* verify = app.add_subcommand("verify", "check the Hopf algebra axioms on generators and random elements");
  with_common(verify, fa);
  verify->add_option("--samples", samples, "number of random elements");
  verify->add_option("--seed", seed, "random seed");
  auto* report = app.add_subcommand("report", "io, im, PI-degree, classical components and J_iq generators");
  with_common(report, fa);
  auto* gl = app.add_subcommand("grouplikes", "group-like elements in the window");
  with_common(gl, fa);
  auto* prim = app.add_subcommand("primitives", "basis of the (a,1)-skew-primitives in the window");
  with_common(prim, fa);
  prim->add_option("--a", a_text, "the group-like a (default: the one carrying the nontrivial skew-primitive)");
  auto* tw = app.add_subcommand("twistor", "structure constants of the twistor");
  with_common(tw, fa);
  auto* iso = app.add_subcommand("iso", "decide Hopf isomorphism between two presentations");
  with_common(iso, fa);
  fb.add_to(iso, "2");
  iso->add_option("--map", map_text, "explicit generator images, e.g. \"g=g^3; x=x\"");
  iso->add_option("--inverse", inverse_text, "candidate inverse for --map");
  auto* cls = app.add_subcommand("classify", "which families realize (io, im, dichotomy)");
  cls->add_option("--io", io, "integral order")->required();
  cls->add_option("--im", im, "integral minor")->required();
  cls->add_option("--dichotomy", dich, "primitive | grouplike | any");
  cls->add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  cls->add_option("--out", out_path, "write the document to this file instead of stdout");
  auto* suite = app.add_subcommand("suite", "run every check for one presentation");
  with_common(suite, fa);
  suite->add_option("--samples", samples, "number of random elements");
  suite->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const bool structured = format == "structured";
  std::string doc;
  int rc = 0;
  try {
    if (make->parsed()) {
      const auto h = fa.make();
      doc = structured ? to_json(*h) : to_text(*h);
    } else if (verify->parsed()) {
      const auto h = fa.make();
      const AxiomReport r = verify_hopf_axioms(h, samples, seed);
      doc = structured ? to_json(r) : to_text(r);
      rc = r.all_pass() ? 0 : 1;
    } else if (report->parsed()) {
      const InvariantReport r = invariant_report(fa.make());
      doc = structured ? to_json(r) : to_text(r);
    } else if (gl->parsed()) {
      const auto h = fa.make();
      const GrouplikeSearch g = grouplikes(h, window > 0 ? window : h->default_window());
      doc = structured ? to_json(g) : to_text(g);
      rc = g.certified ? 0 : 1;
    } else if (prim->parsed()) {
      const auto h = fa.make();
      const Element a = a_text.empty() ? expected_skew_primitives(h).first : Element::parse(h, a_text);
      const auto basis = skew_primitives(h, a, window > 0 ? window : h->default_window());
      const std::string title = "(" + a.str() + ", 1)-primitives";
      doc = structured ? elements_json(title, basis) : elements_text(title, basis);
    } else if (tw->parsed()) {
      const TwistorAlgebra T = twistor(fa.make());
      const auto recs = verify_twistor(T);
      const bool ok = std::all_of(recs.begin(), recs.end(), [](const AxiomRecord& r) { return r.pass; });
      doc = structured ? to_json(T) : to_text(T);
      rc = ok ? 0 : 1;
    } else if (iso->parsed()) {
      const auto a = fa.make();
      const auto b = fb.make();
      IsoVerdict v;
      if (!map_text.empty()) {
        std::optional<AlgebraMap> inv;
        if (!inverse_text.empty()) inv = build_map(b, a, inverse_text);
        v = hopf_iso_check(build_map(a, b, map_text), inv);
        rc = v.verdict == IsoKind::HopfIsomorphic ? 0 : 1;
      } else {
        v = family_iso(a, b);
      }
      doc = structured ? to_json(v) : to_text(v);
    } else if (cls->parsed()) {
      const Classification c = classify({io, im, parse_dichotomy(dich)});
      doc = structured ? to_json(c) : to_text(c);
    } else if (suite->parsed()) {
      SuiteOptions opt;
      opt.window = window;
      opt.random_count = samples;
      opt.seed = seed;
      const SuiteResult s = run_suite(fa.make(), opt);
      doc = structured ? to_json(s) : to_text(s);
      rc = s.all_pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!doc.empty() && doc.back() != '\n') doc += '\n';
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << doc;
  }
  return rc;
}
