#include "primehopf/hopf.hpp"

#include "primehopf/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace primehopf {

Tensor2 coproduct(const Element& a) {
  const auto& h = a.presentation();
  TensorTerms<2> out;
  for (const auto& [m, c] : a.terms())
    for (const auto& [k, v] : h->coproduct(m)) add_term(out, k, c * v);
  return Tensor2(h, std::move(out));
}

Cyclotomic counit(const Element& a) {
  Cyclotomic r;
  for (const auto& [m, c] : a.terms()) r += c * a.presentation()->counit(m);
  return r;
}

Element antipode(const Element& a) {
  const auto& h = a.presentation();
  Terms out;
  for (const auto& [m, c] : a.terms())
    for (const auto& [k, v] : h->antipode(m)) add_term(out, k, c * v);
  return Element(h, std::move(out));
}

Element multiply_out(const Tensor2& t) {
  const auto& h = t.presentation();
  Terms out;
  for (const auto& [k, c] : t.terms()) h->multiply_into(k[0], k[1], c, out);
  return Element(h, std::move(out));
}

Tensor3 coproduct_first(const Tensor2& t) {
  const auto& h = t.presentation();
  TensorTerms<3> out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [d, v] : h->coproduct(k[0])) add_term(out, TensorKey<3>{d[0], d[1], k[1]}, c * v);
  return Tensor3(h, std::move(out));
}

Tensor3 coproduct_second(const Tensor2& t) {
  const auto& h = t.presentation();
  TensorTerms<3> out;
  for (const auto& [k, c] : t.terms())
    for (const auto& [d, v] : h->coproduct(k[1])) add_term(out, TensorKey<3>{k[0], d[0], d[1]}, c * v);
  return Tensor3(h, std::move(out));
}

bool AxiomReport::all_pass() const { return failures() == 0; }

std::size_t AxiomReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  return n;
}

const AxiomRecord* AxiomReport::first_failure() const {
  for (const auto& r : records)
    if (!r.pass) return &r;
  return nullptr;
}

std::vector<Element> random_elements(const PresentationPtr& h, std::size_t count, long window,
                                     std::uint64_t seed, std::size_t max_terms) {
  std::mt19937_64 rng(seed);
  const auto basis = h->window(window);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<std::size_t> nterms(1, std::max<std::size_t>(1, max_terms));
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> expo(0, std::max(1, h->n()) - 1);
  std::vector<Element> out;
  out.reserve(count);
  while (out.size() < count) {
    Terms t;
    const std::size_t k = nterms(rng);
    for (std::size_t i = 0; i < k; ++i) {
      const Cyclotomic c = Cyclotomic(small(rng)) + Cyclotomic(small(rng)) * h->root_power(expo(rng));
      add_term(t, basis[pick(rng)], c);
    }
    Element e(h, std::move(t));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Element> generator_elements(const PresentationPtr& h) {
  std::vector<Element> out;
  for (const auto& g : h->letters()) {
    out.emplace_back(h, h->letter_terms(Letter{g, 1}));
    try {
      out.emplace_back(h, h->letter_terms(Letter{g, -1}));
    } catch (const std::invalid_argument&) {
    }
  }
  return out;
}

namespace {

Tensor2 tensor_one(const PresentationPtr& h) {
  return Tensor2(h, TensorTerms<2>{{TensorKey<2>{}, Cyclotomic(1L)}});
}

Tensor2 letter_delta(const PresentationPtr& h, const Letter& l) {
  const Element step(h, h->letter_terms(Letter{l.gen, l.exp < 0 ? -1 : 1}));
  const Tensor2 d = coproduct(step);
  Tensor2 r = tensor_one(h);
  for (long k = 0; k < std::abs(l.exp); ++k) r = r * d;
  return r;
}

Tensor2 word_delta(const PresentationPtr& h, const Word& w) {
  Tensor2 r = tensor_one(h);
  for (const auto& l : w) r = r * letter_delta(h, l);
  return r;
}

Cyclotomic word_counit(const PresentationPtr& h, const Word& w) {
  Cyclotomic r(1L);
  for (const auto& l : w) {
    const Element step(h, h->letter_terms(Letter{l.gen, l.exp < 0 ? -1 : 1}));
    r *= counit(step).pow(std::abs(l.exp));
  }
  return r;
}

Element word_antipode(const PresentationPtr& h, const Word& w) {
  Element r = Element::one(h);
  for (const auto& l : w) {
    const Element step(h, h->letter_terms(Letter{l.gen, l.exp < 0 ? -1 : 1}));
    const Element s = antipode(step);
    for (long k = 0; k < std::abs(l.exp); ++k) r = s * r;
  }
  return r;
}

template <class T>
AxiomRecord record(std::string axiom, std::string sample, const T& lhs, const T& rhs) {
  AxiomRecord r{std::move(axiom), std::move(sample), lhs == rhs, "0"};
  if (!r.pass) r.witness = (lhs - rhs).str();
  return r;
}

AxiomRecord scalar_record(std::string axiom, std::string sample, const Cyclotomic& lhs, const Cyclotomic& rhs) {
  AxiomRecord r{std::move(axiom), std::move(sample), lhs == rhs, "0"};
  if (!r.pass) r.witness = (lhs - rhs).str();
  return r;
}

}  // namespace

AxiomReport verify_hopf_axioms(const PresentationPtr& h, const std::vector<Element>& samples) {
  AxiomReport rep;
  rep.presentation = h->label();

  for (const auto& rel : h->relations()) {
    Tensor2 drhs(h, {});
    Cyclotomic erhs;
    Element srhs = Element::zero(h);
    for (const auto& [c, w] : rel.rhs) {
      const Tensor2 dw = word_delta(h, w);
      TensorTerms<2> scaled;
      for (const auto& [k, v] : dw.terms()) add_term(scaled, k, c * v);
      drhs += Tensor2(h, std::move(scaled));
      erhs += c * word_counit(h, w);
      srhs += c * word_antipode(h, w);
    }
    rep.records.push_back(record("relation-coproduct", rel.label, word_delta(h, rel.lhs), drhs));
    rep.records.push_back(scalar_record("relation-counit", rel.label, word_counit(h, rel.lhs), erhs));
    rep.records.push_back(record("relation-antipode", rel.label, word_antipode(h, rel.lhs), srhs));
  }

  for (const auto& a : samples) {
    const std::string s = a.str();
    const Tensor2 d = coproduct(a);
    rep.records.push_back(record("coassociativity", s, coproduct_first(d), coproduct_second(d)));

    Terms left, right;
    Terms sl, sr;
    for (const auto& [k, c] : d.terms()) {
      add_term(left, k[1], c * h->counit(k[0]));
      add_term(right, k[0], c * h->counit(k[1]));
      for (const auto& [m, v] : h->antipode(k[0])) h->multiply_into(m, k[1], c * v, sl);
      for (const auto& [m, v] : h->antipode(k[1])) h->multiply_into(k[0], m, c * v, sr);
    }
    rep.records.push_back(record("counit-left", s, Element(h, left), a));
    rep.records.push_back(record("counit-right", s, Element(h, right), a));
    const Element unit = Element::scalar(h, counit(a));
    rep.records.push_back(record("antipode-left", s, Element(h, sl), unit));
    rep.records.push_back(record("antipode-right", s, Element(h, sr), unit));
  }

  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const Element& a = samples[i];
    const Element& b = samples[i + 1];
    const std::string s = a.str() + " ; " + b.str();
    rep.records.push_back(record("coproduct-multiplicative", s, coproduct(a * b), coproduct(a) * coproduct(b)));
    rep.records.push_back(scalar_record("counit-multiplicative", s, counit(a * b), counit(a) * counit(b)));
    rep.records.push_back(record("antipode-anti-multiplicative", s, antipode(a * b), antipode(b) * antipode(a)));
  }
  return rep;
}

AxiomReport verify_hopf_axioms(const PresentationPtr& h, std::size_t random_count, std::uint64_t seed) {
  std::vector<Element> samples = generator_elements(h);
  const long D = std::min(h->default_window(), 6L);
  auto extra = random_elements(h, random_count, D, seed);
  samples.insert(samples.end(), extra.begin(), extra.end());
  return verify_hopf_axioms(h, samples);
}

bool is_grouplike(const Element& a) {
  if (a.is_zero()) return false;
  return counit(a).is_one() && coproduct(a) == tensor(a, a);
}

GrouplikeSearch grouplikes(const PresentationPtr& h, long window) {
  GrouplikeSearch res;
  res.window = window;
  bool homogeneous = true;
  std::set<Monomial> degree_zero;
  std::set<Monomial> found;
  std::string bad;
  for (const auto& m : h->window(window)) {
    const long d = h->coalgebra_degree(m);
    for (const auto& [k, c] : h->coproduct(m)) {
      if (h->coalgebra_degree(k[0]) + h->coalgebra_degree(k[1]) != d) {
        homogeneous = false;
        if (bad.empty()) bad = "coproduct of " + h->monomial_str(m) + " is not homogeneous";
      }
    }
    if (d == 0) degree_zero.insert(m);
    const Element e = Element::monomial(h, m);
    if (is_grouplike(e)) {
      found.insert(m);
      res.grouplikes.push_back(e);
    }
  }
  const bool zero_part_grouplike = std::includes(found.begin(), found.end(), degree_zero.begin(), degree_zero.end());
  const bool only_zero = std::includes(degree_zero.begin(), degree_zero.end(), found.begin(), found.end());
  res.certified = homogeneous && zero_part_grouplike && only_zero;
  if (res.certified) {
    res.certificate = "coproduct homogeneous on " + std::to_string(h->window(window).size()) +
                      " window monomials; all " + std::to_string(degree_zero.size()) +
                      " degree-zero monomials group-like";
  } else if (!bad.empty()) {
    res.certificate = bad;
  } else {
    res.certificate = "degree-zero monomials and group-like monomials differ";
  }
  return res;
}

std::vector<Element> skew_primitives(const PresentationPtr& h, const Element& a, long window) {
  if (!is_grouplike(a)) throw std::invalid_argument("skew_primitives: " + a.str() + " is not group-like");
  const auto basis = h->window(window);
  Indexer<TensorKey<2>> keys;
  std::vector<SparseVector> columns;
  columns.reserve(basis.size());
  const Element one = Element::one(h);
  for (const auto& m : basis) {
    const Element z = Element::monomial(h, m);
    const Tensor2 diff = coproduct(z) - tensor(z, a) - tensor(one, z);
    SparseVector col;
    for (const auto& [k, c] : diff.terms()) col.emplace(keys.index(k), c);
    columns.push_back(std::move(col));
  }
  std::vector<Element> out;
  for (const auto& v : nullspace(columns)) {
    Terms t;
    for (const auto& [j, c] : v) add_term(t, basis[static_cast<std::size_t>(j)], c);
    out.emplace_back(h, std::move(t));
  }
  return out;
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
  Indexer<Monomial> idx;
  auto vec = [&](const Element& e) {
    SparseVector v;
    for (const auto& [m, c] : e.terms()) v.emplace(idx.index(m), c);
    return v;
  };
  EchelonBasis ea, eb;
  for (const auto& e : a) ea.insert(vec(e));
  for (const auto& e : b) eb.insert(vec(e));
  if (ea.rank() != eb.rank()) return false;
  for (const auto& e : a)
    if (!eb.contains(vec(e))) return false;
  return true;
}

}  // namespace primehopf

namespace primehopf {

std::vector<PresentationPtr> negative_controls(const PresentationPtr& h) {
  auto e = [&](const std::string& s) { return Element::parse(h, s); };
  auto t2 = [&](const std::string& a, const std::string& b) { return tensor(e(a), e(b)).terms(); };
  std::vector<PresentationPtr> out;
  switch (h->family()) {
    case Family::PolynomialLine:
      out.push_back(h->mutated("x", "Delta(x) = x (x) x", t2("x", "x"), std::nullopt, std::nullopt));
      break;
    case Family::LaurentLine:
      out.push_back(h->mutated("x", "Delta(x) = x (x) 1 + 1 (x) x",
                               (tensor(e("x"), e("1")) + tensor(e("1"), e("x"))).terms(), std::nullopt, std::nullopt));
      break;
    case Family::Dihedral:
      out.push_back(h->mutated("x", "Delta(x) = x (x) 1", t2("x", "1"), std::nullopt, std::nullopt));
      break;
    case Family::Taft: {
      const std::string G = "g^" + std::to_string(h->spec().t);
      out.push_back(h->mutated("x", "Delta(x) = x (x) " + G, t2("x", G), std::nullopt, std::nullopt));
      out.push_back(h->mutated("x", "S(x) = x g^-t", std::nullopt, std::nullopt,
                               e("x * g^-" + std::to_string(h->spec().t)).terms()));
      break;
    }
    case Family::Liu:
      out.push_back(h->mutated("y", "Delta(y) = y (x) 1 + 1 (x) y",
                               (tensor(e("y"), e("1")) + tensor(e("1"), e("y"))).terms(), std::nullopt, std::nullopt));
      break;
  }
  return out;
}

}  // namespace primehopf
