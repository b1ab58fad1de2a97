#include "primehopf/iso.hpp"

#include <stdexcept>

namespace primehopf {

namespace {

Tensor2 map_tensor(const AlgebraMap& phi, const Tensor2& t) {
  Tensor2 out(phi.target(), {});
  for (const auto& [k, c] : t.terms()) {
    Tensor2 piece = tensor(c * phi.image(k[0]), phi.image(k[1]));
    out += piece;
  }
  return out;
}

std::string check_morphism(const AlgebraMap& phi, const std::string& name) {
  const auto failures = phi.relation_failures();
  if (!failures.empty()) return name + " breaks relation " + failures.front();
  const auto& src = phi.source();
  for (const Atom& a : src->atoms()) {
    const Element e = Element::monomial(src, a.mono);
    const Element img = phi(e);
    if (!(coproduct(img) == map_tensor(phi, coproduct(e)))) return name + " does not commute with Delta on " + a.name;
    if (!(counit(img) == counit(e))) return name + " does not preserve epsilon on " + a.name;
    if (!(antipode(img) == phi(antipode(e)))) return name + " does not commute with S on " + a.name;
  }
  return {};
}

bool is_identity(const AlgebraMap& f) { return f == AlgebraMap::identity(f.source()); }

AlgebraMap letters_map(const PresentationPtr& src, const PresentationPtr& dst,
                       const std::map<std::string, std::string>& words) {
  std::map<std::string, Element> images;
  for (const auto& [letter, text] : words) images.emplace(letter, Element::parse(dst, text));
  return AlgebraMap::from_letters(src, dst, images);
}

AlgebraMap same_letters(const PresentationPtr& a, const PresentationPtr& b) {
  std::map<std::string, std::string> words;
  for (const auto& l : basic_letters(*a)) words.emplace(l, l);
  return letters_map(a, b, words);
}

// v with xi_a = xi_b^v, or -1.
long root_exponent(const Cyclotomic& xi_a, const Cyclotomic& xi_b, long n) {
  Cyclotomic p(1L);
  for (long v = 0; v < n; ++v) {
    if (p == xi_a) return v;
    p *= xi_b;
  }
  return -1;
}

long inverse_mod(long a, long n) {
  for (long k = 1; k < n; ++k)
    if (mod_floor(a * k, n) == 1) return k;
  return n == 1 ? 0 : -1;
}

// h of a, written in the g and x of b (which share n, w, xi with a).
std::string liu_h_word(const LiuParams& p) {
  const long gexp = p.u + p.v * p.n;
  const long xexp = p.u * p.i0 - p.v * p.b * (p.wp - 1);
  return "g^" + std::to_string(gexp) + " * x^" + std::to_string(xexp);
}

AlgebraMap liu_map(const PresentationPtr& a, const PresentationPtr& b) {
  const std::string h = liu_h_word(a->liu());
  const std::string f = "x^-1 * (" + h + ")^" + std::to_string(a->liu().np);
  return letters_map(a, b, {{"h", h}, {"f", f}, {"y", "y"}});
}

struct Invariants {
  IoIm ioim;
  std::string dichotomy;
};

Invariants invariants(const PresentationPtr& h) { return {io_im(h), dichotomy(h)}; }

}  // namespace

std::string iso_kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::HopfIsomorphic:
      return "hopf-isomorphic";
    case IsoKind::NotIsomorphic:
      return "not-isomorphic";
    case IsoKind::Undecided:
      return "undecided";
  }
  return "?";
}

IsoVerdict hopf_iso_check(const AlgebraMap& phi, const std::optional<AlgebraMap>& psi) {
  IsoVerdict v;
  v.witness = phi;
  v.inverse = psi;
  if (auto err = check_morphism(phi, "map"); !err.empty()) {
    v.reason = err;
    return v;
  }
  if (!psi) {
    v.reason = "map is a Hopf algebra morphism; bijectivity not certified";
    return v;
  }
  if (auto err = check_morphism(*psi, "inverse"); !err.empty()) {
    v.reason = err;
    return v;
  }
  if (!is_identity(phi.then(*psi)) || !is_identity(psi->then(phi))) {
    v.reason = "the two maps are not mutually inverse";
    return v;
  }
  v.verdict = IsoKind::HopfIsomorphic;
  v.reason = "Hopf algebra morphisms, mutually inverse on generators";
  return v;
}

bool family_iso_criterion(const PresentationPtr& a, const PresentationPtr& b) {
  if (a->family() != b->family()) return false;
  switch (a->family()) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
    case Family::Dihedral:
      return true;
    case Family::Taft:
      return a->n() == b->n() && a->spec().xi.pow(a->spec().t) == b->spec().xi.pow(b->spec().t);
    case Family::Liu:
      return a->liu().n == b->liu().n && a->liu().w == b->liu().w && a->liu().xi == b->liu().xi;
  }
  return false;
}

IsoVerdict family_iso(const PresentationPtr& a, const PresentationPtr& b) {
  if (a->family() != b->family()) {
    const Invariants ia = invariants(a), ib = invariants(b);
    IsoVerdict v;
    v.verdict = IsoKind::NotIsomorphic;
    if (ia.ioim.io != ib.ioim.io) {
      v.reason = "integral orders differ: " + std::to_string(ia.ioim.io) + " vs " + std::to_string(ib.ioim.io);
    } else if (ia.ioim.im != ib.ioim.im) {
      v.reason = "integral minors differ: " + std::to_string(ia.ioim.im) + " vs " + std::to_string(ib.ioim.im);
    } else if (ia.dichotomy != ib.dichotomy) {
      v.reason = "H_0 types differ: " + ia.dichotomy + " vs " + ib.dichotomy;
    } else {
      v.verdict = IsoKind::Undecided;
      v.reason = "different families with equal io, im and H_0 type";
    }
    return v;
  }

  switch (a->family()) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
    case Family::Dihedral:
      return hopf_iso_check(same_letters(a, b), same_letters(b, a));
    case Family::Taft: {
      const long n = a->n();
      if (n != b->n()) {
        return {IsoKind::NotIsomorphic, std::nullopt, std::nullopt,
                "integral orders differ: " + std::to_string(n) + " vs " + std::to_string(b->n())};
      }
      if (!family_iso_criterion(a, b)) {
        return {IsoKind::NotIsomorphic, std::nullopt, std::nullopt,
                "xi^t = " + a->spec().xi.pow(a->spec().t).str() + " differs from " + b->spec().xi.pow(b->spec().t).str()};
      }
      const long v = root_exponent(a->spec().xi, b->spec().xi, n);
      const long vi = inverse_mod(v, n);
      if (v < 0 || vi < 0) throw std::logic_error("Taft roots of unity are not both primitive");
      const AlgebraMap phi = letters_map(a, b, {{"g", "g^" + std::to_string(v)}, {"x", "x"}});
      const AlgebraMap psi = letters_map(b, a, {{"g", "g^" + std::to_string(vi)}, {"x", "x"}});
      IsoVerdict out = hopf_iso_check(phi, psi);
      if (out.verdict == IsoKind::Undecided) throw std::logic_error("Taft witness failed: " + out.reason);
      return out;
    }
    case Family::Liu: {
      const LiuParams &pa = a->liu(), &pb = b->liu();
      if (pa.n != pb.n) {
        return {IsoKind::NotIsomorphic, std::nullopt, std::nullopt,
                "integral orders differ: " + std::to_string(pa.n) + " vs " + std::to_string(pb.n)};
      }
      if (pa.w != pb.w) {
        return {IsoKind::NotIsomorphic, std::nullopt, std::nullopt,
                "w differs: " + std::to_string(pa.w) + " vs " + std::to_string(pb.w)};
      }
      if (!(pa.xi == pb.xi)) {
        return {IsoKind::NotIsomorphic, std::nullopt, std::nullopt,
                "xi differs: " + pa.xi.str() + " vs " + pb.xi.str()};
      }
      IsoVerdict out = hopf_iso_check(liu_map(a, b), liu_map(b, a));
      if (out.verdict == IsoKind::Undecided) throw std::logic_error("Liu witness failed: " + out.reason);
      return out;
    }
  }
  return {};
}

}  // namespace primehopf
