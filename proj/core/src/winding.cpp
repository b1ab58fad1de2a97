#include "primehopf/winding.hpp"

#include "primehopf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace primehopf {

namespace {

bool is_inverse_atom(const std::string& name) {
  return name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0;
}

std::string base_letter(const std::string& name) {
  return is_inverse_atom(name) ? name.substr(0, name.size() - 3) : name;
}

Cyclotomic evaluate_word(const Character& p, const Word& w) {
  const auto& h = p.presentation();
  Cyclotomic r(1L);
  for (const auto& l : w) {
    const Element step(h, h->letter_terms(Letter{l.gen, l.exp < 0 ? -1 : 1}));
    r *= p(step).pow(std::abs(l.exp));
  }
  return r;
}

}  // namespace

std::vector<std::string> basic_letters(const Presentation& h) {
  std::vector<std::string> out;
  for (const auto& a : h.atoms())
    if (!is_inverse_atom(a.name)) out.push_back(a.name);
  return out;
}

Character::Character(PresentationPtr h, std::map<std::string, Cyclotomic> values)
    : h_(std::move(h)), values_(std::move(values)) {
  const auto letters = basic_letters(*h_);
  for (const auto& [k, v] : values_) {
    if (std::find(letters.begin(), letters.end(), k) == letters.end()) {
      throw std::invalid_argument("character given on unknown letter '" + k + "'");
    }
  }
  for (const auto& a : h_->atoms()) {
    const std::string base = base_letter(a.name);
    auto it = values_.find(base);
    if (it == values_.end()) throw std::invalid_argument("character has no value on '" + base + "'");
    if (is_inverse_atom(a.name)) {
      if (it->second.is_zero()) throw std::invalid_argument("character sends invertible '" + base + "' to 0");
      atom_values_.push_back(it->second.inverse());
    } else {
      atom_values_.push_back(it->second);
    }
  }
  for (const auto& rel : h_->relations()) {
    Cyclotomic rhs;
    for (const auto& [c, w] : rel.rhs) rhs += c * evaluate_word(*this, w);
    if (evaluate_word(*this, rel.lhs) != rhs) {
      throw std::invalid_argument("character violates relation " + rel.label);
    }
  }
}

Character Character::counit(const PresentationPtr& h) {
  std::map<std::string, Cyclotomic> v;
  for (const auto& a : h->atoms())
    if (!is_inverse_atom(a.name)) v[a.name] = a.eps;
  return Character(h, std::move(v));
}

Cyclotomic Character::operator()(const Monomial& m) const {
  Cyclotomic r(1L);
  for (const auto& [atom, p] : h_->decompose(m)) r *= atom_values_[static_cast<std::size_t>(atom)].pow(p);
  return r;
}

Cyclotomic Character::operator()(const Element& a) const {
  Cyclotomic r;
  for (const auto& [m, c] : a.terms()) r += c * (*this)(m);
  return r;
}

std::string Character::str() const {
  std::string out;
  for (const auto& [k, v] : values_) {
    if (!out.empty()) out += ", ";
    out += k + " -> " + v.str();
  }
  return "{" + out + "}";
}

Character convolve(const Character& p, const Character& q) {
  const auto& h = p.presentation();
  if (h != q.presentation()) throw std::invalid_argument("convolve: characters on different presentations");
  std::map<std::string, Cyclotomic> v;
  for (const auto& a : h->atoms()) {
    if (is_inverse_atom(a.name)) continue;
    Cyclotomic s;
    for (const auto& [k, c] : h->coproduct(a.mono)) s += c * p(k[0]) * q(k[1]);
    v[a.name] = s;
  }
  return Character(h, std::move(v));
}

Character character_power(const Character& p, long k) {
  if (k < 0) throw std::invalid_argument("character_power: negative exponent");
  Character r = Character::counit(p.presentation());
  for (long i = 0; i < k; ++i) r = convolve(r, p);
  return r;
}

long character_order(const Character& p, long cap) {
  const Character eps = Character::counit(p.presentation());
  Character r = p;
  for (long m = 1; m <= cap; ++m) {
    if (r == eps) return m;
    r = convolve(r, p);
  }
  throw std::runtime_error("character order exceeds " + std::to_string(cap));
}

Character integral_character(const PresentationPtr& h) {
  switch (h->family()) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
      return Character::counit(h);
    case Family::Dihedral:
      return Character(h, {{"g", Cyclotomic(-1L)}, {"x", Cyclotomic(1L)}});
    case Family::Taft:
      return Character(h, {{"g", h->spec().xi.inverse()}, {"x", Cyclotomic()}});
    case Family::Liu: {
      const auto& P = h->liu();
      return Character(h, {{"h", P.theta.inverse()}, {"f", P.theta.pow(-P.np)}, {"y", Cyclotomic()}});
    }
  }
  throw std::logic_error("unknown family");
}

AlgebraMap::AlgebraMap(PresentationPtr src, PresentationPtr dst, std::vector<Element> atom_images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(atom_images)) {
  if (images_.size() != src_->atoms().size()) throw std::invalid_argument("AlgebraMap: wrong number of images");
  for (auto& e : images_) {
    if (!e.presentation()) e = Element::zero(dst_);
    if (e.presentation() != dst_) throw std::invalid_argument("AlgebraMap: image in the wrong presentation");
  }
}

AlgebraMap AlgebraMap::identity(const PresentationPtr& h) {
  std::vector<Element> im;
  for (const auto& a : h->atoms()) im.push_back(Element::monomial(h, a.mono));
  return AlgebraMap(h, h, std::move(im));
}

Element invert_grouplike_term(const Element& a) {
  if (a.terms().size() != 1) throw std::invalid_argument("cannot invert " + a.str());
  const auto& [m, c] = *a.terms().begin();
  const auto& h = a.presentation();
  const Element mono = Element::monomial(h, m);
  if (!is_grouplike(mono)) throw std::invalid_argument("cannot invert non-group-like " + a.str());
  Element inv = c.inverse() * antipode(mono);
  if (!(a * inv == Element::one(h))) throw std::invalid_argument("cannot invert " + a.str());
  return inv;
}

AlgebraMap AlgebraMap::from_letters(PresentationPtr src, PresentationPtr dst,
                                    const std::map<std::string, Element>& images) {
  std::vector<Element> im;
  for (const auto& a : src->atoms()) {
    const std::string base = base_letter(a.name);
    auto it = images.find(base);
    if (it == images.end()) throw std::invalid_argument("no image given for '" + base + "'");
    im.push_back(is_inverse_atom(a.name) ? invert_grouplike_term(it->second) : it->second);
  }
  return AlgebraMap(std::move(src), std::move(dst), std::move(im));
}

Element AlgebraMap::image(const Monomial& m) const {
  Element r = Element::one(dst_);
  for (const auto& [atom, p] : src_->decompose(m)) r = r * images_[static_cast<std::size_t>(atom)].pow(p);
  return r;
}

Element AlgebraMap::operator()(const Element& a) const {
  Element r = Element::zero(dst_);
  for (const auto& [m, c] : a.terms()) r += c * image(m);
  return r;
}

Element AlgebraMap::letter_image(const Letter& l) const {
  const Element step = (*this)(Element(src_, src_->letter_terms(Letter{l.gen, l.exp < 0 ? -1 : 1})));
  return step.pow(std::abs(l.exp));
}

AlgebraMap AlgebraMap::then(const AlgebraMap& other) const {
  if (other.src_ != dst_) throw std::invalid_argument("AlgebraMap::then: mismatched presentations");
  std::vector<Element> im;
  for (const auto& e : images_) im.push_back(other(e));
  return AlgebraMap(src_, other.dst_, std::move(im));
}

std::vector<std::string> AlgebraMap::relation_failures() const {
  std::vector<std::string> out;
  auto word_image = [&](const Word& w) {
    Element r = Element::one(dst_);
    for (const auto& l : w) r = r * letter_image(l);
    return r;
  };
  for (const auto& rel : src_->relations()) {
    Element rhs = Element::zero(dst_);
    for (const auto& [c, w] : rel.rhs) rhs += c * word_image(w);
    if (!(word_image(rel.lhs) == rhs)) out.push_back(rel.label);
  }
  return out;
}

std::string AlgebraMap::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += src_->atoms()[i].name + " -> " + images_[i].str();
  }
  return "{" + out + "}";
}

Element winding_apply(const Character& p, Side side, const Element& a) {
  const auto& h = a.presentation();
  Terms out;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [k, v] : h->coproduct(m)) {
      if (side == Side::Left) {
        add_term(out, k[1], c * v * p(k[0]));
      } else {
        add_term(out, k[0], c * v * p(k[1]));
      }
    }
  }
  return Element(h, std::move(out));
}

AlgebraMap winding_auto(const Character& p, Side side) {
  const auto& h = p.presentation();
  std::vector<Element> im;
  for (const auto& a : h->atoms()) im.push_back(winding_apply(p, side, Element::monomial(h, a.mono)));
  return AlgebraMap(h, h, std::move(im));
}

long automorphism_order(const AlgebraMap& f, long cap) {
  const AlgebraMap id = AlgebraMap::identity(f.source());
  AlgebraMap g = f;
  for (long m = 1; m <= cap; ++m) {
    if (g == id) return m;
    g = g.then(f);
  }
  throw std::runtime_error("automorphism order exceeds " + std::to_string(cap));
}

IoIm io_im(const PresentationPtr& h) {
  const Character pi = integral_character(h);
  const AlgebraMap L = winding_auto(pi, Side::Left);
  const AlgebraMap R = winding_auto(pi, Side::Right);
  IoIm r;
  r.io = automorphism_order(L);
  if (character_order(pi) != r.io) throw std::logic_error("winding order differs from character order");
  const long ord_r = automorphism_order(R);
  std::vector<AlgebraMap> rights{AlgebraMap::identity(h)};
  for (long j = 1; j < ord_r; ++j) rights.push_back(rights.back().then(R));
  AlgebraMap li = AlgebraMap::identity(h);
  for (long i = 0; i < r.io; ++i) {
    if (std::find(rights.begin(), rights.end(), li) != rights.end()) ++r.intersection;
    li = li.then(L);
  }
  r.im = r.io / r.intersection;
  return r;
}

namespace {

struct EigenIndexer {
  PresentationPtr h;
  Character pi;
  std::vector<Cyclotomic> omega_powers;

  EigenIndexer(const PresentationPtr& hh, long io) : h(hh), pi(integral_character(hh)) {
    const Cyclotomic omega = primitive_root(static_cast<int>(io));
    omega_powers.push_back(Cyclotomic(1L));
    for (long i = 1; i < io; ++i) omega_powers.push_back(omega_powers.back() * omega);
  }

  long index(Side side, const Monomial& m) const {
    const Element e = winding_apply(pi, side, Element::monomial(h, m));
    if (e.terms().size() != 1 || e.terms().begin()->first != m) {
      throw std::runtime_error("monomial " + h->monomial_str(m) + " is not a winding eigenvector");
    }
    const Cyclotomic& lambda = e.terms().begin()->second;
    for (std::size_t i = 0; i < omega_powers.size(); ++i)
      if (omega_powers[i] == lambda) return static_cast<long>(i);
    throw std::runtime_error("eigenvalue " + lambda.str() + " is not a power of z(io)");
  }
};

}  // namespace

bool GradedDecomposition::components_nonzero() const {
  for (long i = 0; i < io; ++i) {
    if (!left.count(i) || !right.count(i)) return false;
  }
  return true;
}

GradedDecomposition graded_decomposition(const PresentationPtr& h, long window) {
  GradedDecomposition d;
  d.io = io_im(h).io;
  d.window = window;
  const EigenIndexer ix(h, d.io);
  for (const auto& m : h->window(window)) {
    const long l = ix.index(Side::Left, m);
    const long r = ix.index(Side::Right, m);
    d.left[l].push_back(m);
    d.right[r].push_back(m);
    d.both[{l, r}].push_back(m);
  }
  return d;
}

std::vector<std::string> fixed_ring_generators(const Presentation& h, FixedSide side) {
  switch (h.family()) {
    case Family::PolynomialLine:
      return {"x"};
    case Family::LaurentLine:
    case Family::Dihedral:
      return {"x", "x^-1"};
    case Family::Taft: {
      const int n = h.spec().n, t = h.spec().t;
      const long m = n / gcd_long(n, t);
      switch (side) {
        case FixedSide::Left:
          return {"x"};
        case FixedSide::Right:
          return {t == 0 ? "x" : "x*g^-" + std::to_string(t)};
        case FixedSide::Both:
          return {m == 1 ? "x" : "x^" + std::to_string(m)};
      }
      break;
    }
    case Family::Liu:
      switch (side) {
        case FixedSide::Left:
          return {"y", "x", "x^-1"};
        case FixedSide::Right:
          return {"y*g^-1", "x", "x^-1"};
        case FixedSide::Both:
          return {"x", "x^-1"};
      }
      break;
  }
  return {};
}

std::vector<Element> generated_slice(const PresentationPtr& h, const std::vector<Element>& gens, long window,
                                     long excursion) {
  const auto inner = h->window(window);
  const std::set<Monomial> inner_set(inner.begin(), inner.end());
  const auto box = h->window(window + excursion);
  const std::set<Monomial> box_set(box.begin(), box.end());
  Indexer<Monomial> idx;
  for (const auto& m : box)
    if (!inner_set.count(m)) idx.index(m);
  const int outer_count = static_cast<int>(idx.size());
  for (const auto& m : inner) idx.index(m);

  auto vec = [&](const Element& e, SparseVector& v) {
    for (const auto& [m, c] : e.terms()) {
      if (!box_set.count(m)) return false;
      v.emplace(idx.find(m), c);
    }
    return true;
  };

  EchelonBasis span;
  std::deque<Element> queue;
  const Element one = Element::one(h);
  {
    SparseVector v;
    vec(one, v);
    span.insert(v);
  }
  queue.push_back(one);
  while (!queue.empty()) {
    const Element e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Element p = e * g;
      SparseVector v;
      if (p.is_zero() || !vec(p, v)) continue;
      if (span.insert(v)) queue.push_back(std::move(p));
    }
  }
  std::vector<Element> out;
  for (const auto& row : span.reduced_rows()) {
    if (row.begin()->first < outer_count) continue;
    Terms t;
    for (const auto& [j, c] : row) t.emplace(idx.key(j), c);
    out.emplace_back(h, std::move(t));
  }
  return out;
}

namespace {

long max_abs_growth(const Presentation& h, const std::vector<Element>& gens) {
  long g = 1;
  for (const auto& e : gens)
    for (const auto& [m, c] : e.terms()) g = std::max(g, std::abs(h.growth(m)));
  return g;
}

std::vector<Element> parse_all(const PresentationPtr& h, const std::vector<std::string>& texts) {
  std::vector<Element> out;
  for (const auto& s : texts) out.push_back(Element::parse(h, s));
  return out;
}

}  // namespace

FixedRingCheck fixed_ring_check(const PresentationPtr& h, FixedSide side, long window) {
  FixedRingCheck r;
  r.side = side;
  r.window = window;
  r.generators = fixed_ring_generators(*h, side);
  const GradedDecomposition d = graded_decomposition(h, window);
  switch (side) {
    case FixedSide::Left:
      if (d.left.count(0)) r.fixed.insert(d.left.at(0).begin(), d.left.at(0).end());
      break;
    case FixedSide::Right:
      if (d.right.count(0)) r.fixed.insert(d.right.at(0).begin(), d.right.at(0).end());
      break;
    case FixedSide::Both:
      if (d.both.count({0, 0})) r.fixed.insert(d.both.at({0, 0}).begin(), d.both.at({0, 0}).end());
      break;
  }
  const auto gens = parse_all(h, r.generators);
  const long excursion = static_cast<long>(std::max(1, h->n())) * max_abs_growth(*h, gens);
  const auto slice = generated_slice(h, gens, window, excursion);
  r.generated_rank = slice.size();
  r.generated_inside_fixed = true;
  for (const auto& e : slice)
    for (const auto& [m, c] : e.terms())
      if (!r.fixed.count(m)) r.generated_inside_fixed = false;
  r.equal = r.generated_inside_fixed && r.generated_rank == r.fixed.size();
  return r;
}

std::vector<GradingWitness> strong_grading_witnesses(const PresentationPtr& h, Side side, long window) {
  const long io = io_im(h).io;
  const EigenIndexer ix(h, io);
  std::map<long, std::vector<Monomial>> comps;
  for (const auto& m : h->window(window)) comps[ix.index(side, m)].push_back(m);
  std::vector<GradingWitness> out;
  for (long i = 0; i < io; ++i) {
    auto& ms = comps[i];
    std::stable_sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
      return std::abs(h->growth(a)) < std::abs(h->growth(b));
    });
    const Monomial* found = nullptr;
    for (const auto& m : ms) {
      if (!h->counit(m).is_zero()) {
        found = &m;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error("no strong grading witness for component " + std::to_string(i) + " in window " +
                               std::to_string(window));
    }
    GradingWitness w;
    w.side = side;
    w.component = i;
    w.b = Element::monomial(h, *found, h->counit(*found).inverse());
    Terms cert;
    w.left_factors_in_component = true;
    const Tensor2 db = coproduct(w.b);
    for (const auto& [k, c] : db.terms()) {
      for (const auto& [m, v] : h->antipode(k[1])) h->multiply_into(k[0], m, c * v, cert);
      if (ix.index(side, k[0]) != i) w.left_factors_in_component = false;
    }
    w.certificate = Element(h, std::move(cert));
    w.ok = w.left_factors_in_component && w.certificate == Element::one(h);
    out.push_back(std::move(w));
  }
  return out;
}

std::string dichotomy(const PresentationPtr& h) {
  const Element u = Element::parse(h, fixed_ring_generators(*h, FixedSide::Both).front());
  const Element one = Element::one(h);
  const Tensor2 d = coproduct(u);
  if (d == tensor(u, one) + tensor(one, u)) return "primitive";
  if (d == tensor(u, u)) return "grouplike";
  return "neither";
}

std::vector<std::string> jiq_generators(const Presentation& h) {
  switch (h.family()) {
    case Family::PolynomialLine:
    case Family::Taft:
      return {"x"};
    case Family::LaurentLine:
    case Family::Dihedral:
      return {"x - 1"};
    case Family::Liu:
      return {"y", "x - 1"};
  }
  return {};
}

bool jiq_contains(const Element& a, const Character& pi, long io) {
  Character p = Character::counit(a.presentation());
  for (long i = 0; i < io; ++i) {
    if (!p(a).is_zero()) return false;
    p = convolve(p, pi);
  }
  return true;
}

JiqCheck jiq_check(const PresentationPtr& h, long window, long span_window) {
  JiqCheck r;
  r.window = window;
  const Character pi = integral_character(h);
  r.io = character_order(pi);
  std::vector<Character> chars{Character::counit(h)};
  for (long i = 1; i < r.io; ++i) chars.push_back(convolve(chars.back(), pi));

  auto evaluate = [&](const Element& e) {
    SparseVector v;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      Cyclotomic c = chars[i](e);
      if (!c.is_zero()) v.emplace(static_cast<int>(i), std::move(c));
    }
    return v;
  };

  const auto W = h->window(window);
  const std::set<Monomial> wset(W.begin(), W.end());
  std::vector<SparseVector> columns;
  for (const auto& m : W) columns.push_back(evaluate(Element::monomial(h, m)));
  const auto kernel = nullspace(columns);
  r.kernel_dimension = kernel.size();
  r.quotient_dimension = W.size() - kernel.size();
  r.quotient_commutative_semisimple = r.quotient_dimension == static_cast<std::size_t>(r.io);

  r.generators_in_jiq = true;
  for (const auto& g : jiq_generators(*h))
    if (!jiq_contains(Element::parse(h, g), pi, r.io)) r.generators_in_jiq = false;

  Indexer<Monomial> idx;
  for (const auto& m : W) idx.index(m);
  auto to_vec = [&](const Element& e) {
    SparseVector v;
    for (const auto& [m, c] : e.terms()) v.emplace(idx.find(m), c);
    return v;
  };
  auto inside = [&](const Element& e) {
    for (const auto& [m, c] : e.terms())
      if (!wset.count(m)) return false;
    return true;
  };

  // (ker eps cap H^l_0) H on the slice.
  const GradedDecomposition d = graded_decomposition(h, span_window);
  const auto S = h->window(span_window);
  std::vector<Element> us;
  if (d.left.count(0)) {
    for (const auto& u : d.left.at(0)) {
      Element e = Element::monomial(h, u) - Element::scalar(h, h->counit(u));
      if (!e.is_zero()) us.push_back(std::move(e));
    }
  }
  EchelonBasis span;
  r.span_inside_kernel = true;
  for (const auto& u : us) {
    for (const auto& m : S) {
      const Element p = u * Element::monomial(h, m);
      if (p.is_zero() || !inside(p)) continue;
      if (!evaluate(p).empty()) r.span_inside_kernel = false;
      if (span.rank() < r.kernel_dimension) span.insert(to_vec(p));
    }
  }
  r.span_rank = span.rank();
  r.span_equals_kernel = r.span_inside_kernel && r.span_rank == r.kernel_dimension;

  if (h->family() == Family::Taft) {
    const Element x = Element::word(h, "x");
    EchelonBasis xh;
    for (const auto& m : W) {
      const Element p = x * Element::monomial(h, m);
      if (inside(p)) xh.insert(to_vec(p));
    }
    bool ok = xh.rank() == kernel.size();
    for (const auto& k : kernel) ok = ok && xh.contains(k);
    r.taft_xh = ok;
  }
  return r;
}

namespace {

struct LatticeShape {
  std::size_t free = 0;
  std::vector<long> moduli;  // torsion coordinates after the free ones
};

LatticeShape lattice_shape(const Presentation& h) {
  switch (h.family()) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
      return {1, {}};
    case Family::Dihedral:
      return {1, {2}};
    case Family::Taft:
      return {1, {h.spec().n}};
    case Family::Liu:
      return {1, {h.liu().b, h.spec().n}};
  }
  return {};
}

std::vector<long> lattice_vector(const Presentation& h, const Monomial& m) {
  switch (h.family()) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
      return {m.e[0]};
    case Family::Dihedral:
    case Family::Taft:
      return {m.e[1], m.e[0]};
    case Family::Liu:
      return {m.e[0], m.e[1], m.e[2]};
  }
  return {};
}

// |Z^d / L| for the lattice spanned by rows, or 0 when L has lower rank.
long lattice_index(std::vector<std::vector<long>> rows, std::size_t dim) {
  long index = 1;
  std::size_t r0 = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = r0; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || std::abs(rows[r][col]) < std::abs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) return 0;
      std::swap(rows[r0], rows[best]);
      bool done = true;
      for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const long q = rows[r][col] / rows[r0][col];
        for (std::size_t c = col; c < dim; ++c) rows[r][c] -= q * rows[r0][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    index *= std::abs(rows[r0][col]);
    ++r0;
  }
  return index;
}

}  // namespace

CenterInfo center_truncated(const PresentationPtr& h, long window) {
  CenterInfo info;
  info.window = window;
  const auto W = h->window(window);
  std::vector<Element> gens;
  for (const auto& a : h->atoms())
    if (!is_inverse_atom(a.name)) gens.push_back(Element::monomial(h, a.mono));

  Indexer<std::pair<std::size_t, Monomial>> keys;
  std::vector<SparseVector> columns;
  for (const auto& m : W) {
    const Element z = Element::monomial(h, m);
    SparseVector col;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Element comm = z * gens[g] - gens[g] * z;
      for (const auto& [mm, c] : comm.terms()) col.emplace(keys.index({g, mm}), c);
    }
    columns.push_back(std::move(col));
  }
  for (const auto& v : nullspace(columns)) {
    Terms t;
    for (const auto& [j, c] : v) t.emplace(W[static_cast<std::size_t>(j)], c);
    info.basis.emplace_back(h, std::move(t));
  }

  auto spread = [&](const Element& e) {
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
      const long g = h->growth(m);
      lo = first ? g : std::min(lo, g);
      hi = first ? g : std::max(hi, g);
      first = false;
    }
    return std::make_pair(lo, hi);
  };
  std::vector<Element> sorted = info.basis;
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Element& a, const Element& b) {
    auto [alo, ahi] = spread(a);
    auto [blo, bhi] = spread(b);
    return std::max(std::abs(alo), std::abs(ahi)) < std::max(std::abs(blo), std::abs(bhi));
  });
  std::vector<Element> current{Element::one(h)};
  for (const auto& b : sorted) {
    if (same_span(current, [&] {
          auto c = current;
          c.push_back(b);
          return c;
        }())) {
      continue;
    }
    info.generators.push_back(b);
    current = generated_slice(h, info.generators, window, 0);
  }

  const LatticeShape shape = lattice_shape(*h);
  const std::size_t dim = shape.free + shape.moduli.size();
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < shape.moduli.size(); ++i) {
    std::vector<long> r(dim, 0);
    r[shape.free + i] = shape.moduli[i];
    rows.push_back(std::move(r));
  }
  for (const auto& g : info.generators) {
    if (g.terms().size() == 1) {
      rows.push_back(lattice_vector(*h, g.terms().begin()->first));
    } else {
      auto [lo, hi] = spread(g);
      std::vector<long> r(dim, 0);
      r[0] = hi - lo;
      rows.push_back(std::move(r));
    }
  }
  info.rank = lattice_index(rows, dim);
  if (info.rank == 0) throw std::runtime_error("center generators in window do not have full rank");
  const long root = std::lround(std::sqrt(static_cast<double>(info.rank)));
  if (root * root != info.rank) {
    throw std::runtime_error("rank " + std::to_string(info.rank) + " over the center is not a perfect square");
  }
  info.pi_degree = root;

  const GradedDecomposition d = graded_decomposition(h, window);
  std::set<Monomial> h0;
  if (d.both.count({0, 0})) h0.insert(d.both.at({0, 0}).begin(), d.both.at({0, 0}).end());
  info.inside_h0 = true;
  for (const auto& e : info.basis)
    for (const auto& [m, c] : e.terms())
      if (!h0.count(m)) info.inside_h0 = false;
  return info;
}

long pi_degree(const PresentationPtr& h) { return center_truncated(h, h->default_window()).pi_degree; }

}  // namespace primehopf

namespace primehopf {

std::vector<AxiomRecord> verify_winding_identities(const PresentationPtr& h, const std::vector<Element>& samples) {
  const Character pi = integral_character(h);
  const AlgebraMap L = winding_auto(pi, Side::Left);
  const AlgebraMap R = winding_auto(pi, Side::Right);
  AlgebraMap Linv = AlgebraMap::identity(h);
  for (long k = 1; k < automorphism_order(L); ++k) Linv = Linv.then(L);

  auto on_left = [&](const AlgebraMap& f, const Tensor2& t) {
    Tensor2 out(h, {});
    for (const auto& [k, c] : t.terms()) out += tensor(c * f.image(k[0]), Element::monomial(h, k[1]));
    return out;
  };
  auto on_right = [&](const AlgebraMap& f, const Tensor2& t) {
    Tensor2 out(h, {});
    for (const auto& [k, c] : t.terms()) out += tensor(c * Element::monomial(h, k[0]), f.image(k[1]));
    return out;
  };

  std::vector<AxiomRecord> records;
  auto record = [&](const std::string& name, const std::string& sample, bool ok, const std::string& diff) {
    records.push_back({name, sample, ok, ok ? "0" : diff});
  };
  for (const Element& a : samples) {
    const std::string sa = a.str();
    const Tensor2 da = coproduct(a);
    {
      const Tensor2 lhs = on_left(L, da), rhs = coproduct(L(a));
      record("winding-left-coproduct", sa, lhs == rhs, (lhs - rhs).str());
    }
    {
      const Tensor2 lhs = on_right(R, da), rhs = coproduct(R(a));
      record("winding-right-coproduct", sa, lhs == rhs, (lhs - rhs).str());
    }
    {
      const Element lhs = L(R(a)), rhs = R(L(a));
      record("winding-commute", sa, lhs == rhs, (lhs - rhs).str());
    }
    {
      const Element lhs = R(antipode(a)), rhs = antipode(Linv(a));
      record("winding-antipode", sa, lhs == rhs, (lhs - rhs).str());
    }
    {
      const Tensor2 lhs = on_right(L, da), rhs = on_left(R, da);
      record("winding-middle", sa, lhs == rhs, (lhs - rhs).str());
    }
  }
  return records;
}

}  // namespace primehopf
