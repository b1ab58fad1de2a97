#include "primehopf/twistor.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace primehopf {

namespace {

long inverse_mod(long a, long n) {
  a = mod_floor(a, n);
  for (long k = 1; k < n; ++k)
    if (mod_floor(a * k, n) == 1) return k;
  return n == 1 ? 0 : -1;
}

// Index of the basis vector a normal monomial reduces to, or nullopt when it
// lies in (ker eps cap H_0) H.  Every surviving monomial maps to a basis
// vector with coefficient 1.
std::optional<int> reduce_monomial(const Presentation& h, const Monomial& m) {
  const int n = h.spec().n;
  if (h.family() == Family::Taft) {
    const long l = m.e[1];
    if (l >= n) return std::nullopt;
    const long s = mod_floor(m.e[0] * inverse_mod(h.spec().t, n), n);
    return static_cast<int>(s * n + (s + l) % n);
  }
  const auto& P = h.liu();
  const long i = m.e[0], j = m.e[1], l = m.e[2];
  for (long s = 0; s < n; ++s) {
    const long rest = i - s * P.wp;
    if (mod_floor(rest, P.np) != 0) continue;
    const long a = rest / P.np;
    if (mod_floor(s * P.i0 - a - j, P.b) == 0) return static_cast<int>(s * n + (s + l) % n);
  }
  throw std::logic_error("monomial " + h.monomial_str(m) + " has no g^s x^a y^l form");
}

SparseVector reduce_terms(const Presentation& h, const Terms& t) {
  SparseVector v;
  for (const auto& [m, c] : t)
    if (auto k = reduce_monomial(h, m)) add_term(v, *k, c);
  return v;
}

using Pair = std::map<std::pair<int, int>, Cyclotomic>;
using Triple = std::map<std::array<int, 3>, Cyclotomic>;

Pair delta_basis(const TwistorAlgebra& T, int k) {
  const int i = k / T.n, j = k % T.n;
  Pair out;
  for (const auto& [st, c] : T.coproduct[static_cast<std::size_t>(k)])
    out.emplace(std::make_pair(T.index(i, st.first), T.index(st.second, j)), c);
  return out;
}

Pair delta_vector(const TwistorAlgebra& T, const SparseVector& v) {
  Pair out;
  for (const auto& [k, c] : v)
    for (const auto& [key, d] : delta_basis(T, k)) add_term(out, key, c * d);
  return out;
}

std::string vec_str(const TwistorAlgebra& T, const SparseVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ") " + T.label(k);
  }
  return out;
}

}  // namespace

Cyclotomic TwistorAlgebra::coefficient(int i, int j, int s, int t) const {
  const auto& row = coproduct[static_cast<std::size_t>(index(mod_floor(i, n), mod_floor(j, n)))];
  auto it = row.find({static_cast<int>(mod_floor(s, n)), static_cast<int>(mod_floor(t, n))});
  return it == row.end() ? Cyclotomic() : it->second;
}

SparseVector TwistorAlgebra::product(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      for (const auto& [k, c] : mult[static_cast<std::size_t>(ka * dim() + kb)]) add_term(out, k, ca * cb * c);
  return out;
}

std::string TwistorAlgebra::label(int k) const {
  return "v_" + std::to_string(k / n) + "," + std::to_string(k % n);
}

std::pair<Element, Element> twistor_generators(const PresentationPtr& h) {
  switch (h->family()) {
    case Family::Taft: {
      const int n = h->spec().n, t = h->spec().t;
      if (gcd_long(n, t) != 1) {
        throw std::invalid_argument("the twistor is defined only when io = im; Taft(n, t) with gcd(t, n) = " +
                                    std::to_string(gcd_long(n, t)) + " > 1 is rejected");
      }
      return {Element::word(h, "g^" + std::to_string(t)), Element::word(h, "x")};
    }
    case Family::Liu:
      return {Element::word(h, "g"), Element::word(h, "y")};
    default:
      throw std::invalid_argument("no twistor for " + family_name(h->family()) +
                                  ": the twistor is defined for Taft algebras with gcd(t, n) = 1 and Liu algebras");
  }
}

Element twistor_lift(const PresentationPtr& h, int i, int j) {
  const auto [G, Y] = twistor_generators(h);
  const int n = h->spec().n;
  return G.pow(i) * Y.pow(mod_floor(j - i, n));
}

TwistorAlgebra twistor(const PresentationPtr& h) {
  const auto [G, Y] = twistor_generators(h);
  TwistorAlgebra T;
  T.source = h;
  T.n = h->spec().n;
  T.q = h->family() == Family::Taft ? h->spec().xi.pow(h->spec().t) : h->liu().xi;
  const int N = T.dim();
  std::vector<Element> lifts;
  for (int k = 0; k < N; ++k) lifts.push_back(G.pow(k / T.n) * Y.pow(mod_floor(k % T.n - k / T.n, T.n)));

  T.mult.resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      T.mult[static_cast<std::size_t>(a * N + b)] = reduce_terms(*h, (lifts[a] * lifts[b]).terms());

  for (int k = 0; k < N; ++k) {
    T.counit.push_back(counit(lifts[k]));
    T.antipode.push_back(reduce_terms(*h, antipode(lifts[k]).terms()));
    const int i = k / T.n, j = k % T.n;
    Pair row;
    const Tensor2 dk = coproduct(lifts[k]);
    for (const auto& [key, c] : dk.terms()) {
      const auto r1 = reduce_monomial(*h, key[0]);
      const auto r2 = reduce_monomial(*h, key[1]);
      if (!r1 || !r2) continue;
      if (*r1 / T.n != i || *r2 % T.n != j) {
        throw std::runtime_error("coproduct of " + T.label(k) + " has a term " + T.label(*r1) + " (x) " +
                                 T.label(*r2) + " outside v_is (x) v_tj");
      }
      add_term(row, std::make_pair(*r1 % T.n, *r2 / T.n), c);
    }
    T.coproduct.push_back(std::move(row));
  }
  return T;
}

std::vector<AxiomRecord> verify_twistor(const TwistorAlgebra& T) {
  std::vector<AxiomRecord> out;
  const int n = T.n, N = T.dim();
  const Cyclotomic one(1L), zero;
  auto push = [&](const std::string& name, const std::string& witness) {
    out.push_back({name, T.source->label(), witness.empty(), witness.empty() ? "0" : witness});
  };
  auto idx = [&](long i, long j) { return T.index(static_cast<int>(mod_floor(i, n)), static_cast<int>(mod_floor(j, n))); };
  auto bv = [&](long i, long j) { return SparseVector{{idx(i, j), one}}; };
  auto power = [&](const SparseVector& v, int e) {
    SparseVector r = bv(0, 0);
    for (int k = 0; k < e; ++k) r = T.product(r, v);
    return r;
  };
  auto tag = [](std::initializer_list<long> xs) {
    std::string s = "(";
    for (long x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
  };
  auto c = [&](long i, long j, long s, long t) { return T.coefficient(static_cast<int>(i), static_cast<int>(j),
                                                                       static_cast<int>(s), static_cast<int>(t)); };

  {
    std::string w;
    if (N != n * n || static_cast<int>(T.counit.size()) != N) w = "dimension " + std::to_string(N);
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        if (reduce_terms(*T.source, twistor_lift(T.source, i, j).terms()) != bv(i, j)) w = "lift " + tag({i, j});
    push("dimension n^2 with basis v_ij", w);
  }
  {
    std::string w;
    for (int k = 0; k < N && w.empty(); ++k)
      if (T.counit[k] != ((k / n == k % n) ? one : zero)) w = "eps(" + T.label(k) + ") = " + T.counit[k].str();
    push("eps(v_ij) = delta_ij", w);
  }
  {
    std::string w;
    for (int k = 0; k < N && w.empty(); ++k) {
      const SparseVector v{{k, one}};
      if (T.product(bv(0, 0), v) != v || T.product(v, bv(0, 0)) != v) w = T.label(k);
    }
    push("v_00 is the unit", w);
  }
  const SparseVector g = bv(1, 1);
  {
    std::string w;
    if (power(g, n) != bv(0, 0)) w = "g^n = " + vec_str(T, power(g, n));
    for (int i = 0; i < n && w.empty(); ++i)
      if (power(g, i) != bv(i, i)) w = "g^" + std::to_string(i) + " != v_ii";
    push("g = v_11: g^n = 1 and v_ii = g^i", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        if (i != j && !power(bv(i, j), n).empty()) w = tag({i, j});
    push("v_ij^n = 0 for i != j", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        SparseVector rhs = T.product(bv(i, j), g);
        for (auto& [k, v] : rhs) v *= T.q.pow(i - j);
        if (T.product(g, bv(i, j)) != rhs) w = tag({i, j});
      }
    push("g v_ij = q^(i-j) v_ij g", w);
  }
  {
    std::string w;
    const auto& row = T.coproduct[static_cast<std::size_t>(idx(1, 1))];
    if (row != Pair{{{1, 1}, one}}) w = "Delta(g) has extra terms";
    for (int i = 0; i < n && w.empty(); ++i)
      for (int s = 0; s < n && w.empty(); ++s)
        for (int t = 0; t < n && w.empty(); ++t) {
          if (s == t) continue;
          if (!c(t, t, s, s).is_zero()) w = "c^tt_ss " + tag({t, s});
          if (i != s && i != t && w.empty()) {
            if (!(c(i, t, s, s) * c(i, s, t, t)).is_zero() || !(c(t, i, s, s) * c(s, i, t, t)).is_zero()) {
              w = "c^it_ss c^is_tt " + tag({i, s, t});
            }
          }
        }
    push("g group-like; c^tt_ss = 0; c^it_ss c^is_tt = c^ti_ss c^si_tt = 0", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        if (T.product(power(g, i), bv(0, j - i)) != bv(i, j)) w = "v_ij != g^i v_0(j-i) at " + tag({i, j});
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j)
        for (int s = 0; s < n && w.empty(); ++s) {
          if (i == j || i == s || j == s) continue;
          for (int t = 0; t < n && w.empty(); ++t)
            if (c(i, j, s, s) != c(i - t, j - t, s - t, s - t)) w = tag({i, j, s, t});
        }
    push("v_ij = g^i v_0(j-i); c^ij_ss = c^(i-t)(j-t)_(s-t)(s-t)", w);
  }
  {
    std::string w;
    const SparseVector y = bv(0, 1);
    for (int i = 0; i < n && w.empty(); ++i) {
      const SparseVector p = power(y, i);
      if (p.size() != 1 || p.begin()->first != idx(0, i)) w = "v_01^" + std::to_string(i);
    }
    push("k<v_01> contains every v_0i", w);
  }
  {
    std::string w;
    for (int k = 0; k < N && w.empty(); ++k)
      for (const auto& [st, v] : T.coproduct[static_cast<std::size_t>(k)])
        if (st.first != st.second) w = T.label(k) + " has c^ij_st with s != t";
    push("c^ij_st = 0 for s != t", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i) {
      if (c(i, i, i, i) != one) w = "c^ii_ii " + tag({i});
      for (int s = 0; s < n && w.empty(); ++s)
        if (s != i && c(i, i, s, s) != c(s, s, i, i)) w = "c^ii_ss != c^ss_ii " + tag({i, s});
    }
    push("Delta(v_ii) shape; c^ii_ss = c^ss_ii", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n && w.empty(); ++j) {
        if (i == j) continue;
        if (c(i, j, i, i) != one || c(i, j, j, j) != one) w = "leading terms of Delta(v_ij) " + tag({i, j});
        for (int s = 0; s < n && w.empty(); ++s)
          for (int t = 0; t < n && w.empty(); ++t) {
            if (s == i || s == j || t == i || t == j || s == t) continue;
            if (c(i, j, t, t) * c(i, t, s, s) != c(i, j, s, s) * c(s, j, t, t)) w = tag({i, j, s, t});
          }
      }
    push("c^ij_tt c^it_ss = c^ij_ss c^sj_tt", w);
  }
  {
    std::string w;
    for (int i = 0; i < n && w.empty(); ++i)
      for (int s = 0; s < n && w.empty(); ++s)
        for (int t = 0; t < n && w.empty(); ++t) {
          if (i == s || i == t || s == t) continue;
          const Cyclotomic a = c(t, t, s, s);
          if (a != c(i, t, s, s) * c(i, s, t, t) || a != c(t, i, s, s) * c(s, i, t, t)) w = tag({i, s, t});
        }
    push("c^tt_ss = c^it_ss c^is_tt = c^ti_ss c^si_tt", w);
  }
  {
    std::string w;
    for (int j = 0; j < n && w.empty(); ++j)
      for (int s = 0; s < n && w.empty(); ++s) {
        const Cyclotomic expect = s <= j ? qbinom(j, s, T.q) : Cyclotomic();
        if (c(0, j, s, s) != expect) w = "c^0j_ss " + tag({j, s}) + " = " + c(0, j, s, s).str();
      }
    push("c^0j_ss = qbinom(j, s, q)", w);
  }
  {
    std::string w;
    for (int s = 2; s < n && w.empty(); ++s)
      if (!c(0, 1, s, s).is_zero()) w = tag({s});
    push("c^01_ss = 0 for s > 1", w);
  }
  {
    std::string w;
    for (int k = 0; k < N && w.empty(); ++k) {
      Triple left, right;
      for (const auto& [key, v] : delta_basis(T, k)) {
        for (const auto& [k2, v2] : delta_basis(T, key.first))
          add_term(left, std::array<int, 3>{k2.first, k2.second, key.second}, v * v2);
        for (const auto& [k2, v2] : delta_basis(T, key.second))
          add_term(right, std::array<int, 3>{key.first, k2.first, k2.second}, v * v2);
      }
      if (left != right) w = T.label(k);
    }
    push("coassociativity", w);
  }
  {
    std::string w;
    for (int k = 0; k < N && w.empty(); ++k) {
      SparseVector l, r, sl, sr;
      for (const auto& [key, v] : delta_basis(T, k)) {
        add_term(l, key.second, v * T.counit[key.first]);
        add_term(r, key.first, v * T.counit[key.second]);
        for (const auto& [kk, vv] : T.product(T.antipode[key.first], SparseVector{{key.second, one}}))
          add_term(sl, kk, v * vv);
        for (const auto& [kk, vv] : T.product(SparseVector{{key.first, one}}, T.antipode[key.second]))
          add_term(sr, kk, v * vv);
      }
      const SparseVector self{{k, one}};
      SparseVector unit;
      add_term(unit, idx(0, 0), T.counit[k]);
      if (l != self || r != self) w = "counit at " + T.label(k);
      if (w.empty() && (sl != unit || sr != unit)) w = "antipode at " + T.label(k);
    }
    push("counit and antipode laws", w);
  }
  {
    std::string w;
    for (int a = 0; a < N && w.empty(); ++a)
      for (int b = 0; b < N && w.empty(); ++b) {
        const Pair lhs = delta_vector(T, T.mult[static_cast<std::size_t>(a * N + b)]);
        Pair rhs;
        for (const auto& [ka, va] : delta_basis(T, a))
          for (const auto& [kb, vb] : delta_basis(T, b))
            for (const auto& [p1, c1] : T.mult[static_cast<std::size_t>(ka.first * N + kb.first)])
              for (const auto& [p2, c2] : T.mult[static_cast<std::size_t>(ka.second * N + kb.second)])
                add_term(rhs, std::make_pair(p1, p2), va * vb * c1 * c2);
        if (lhs != rhs) w = T.label(a) + " * " + T.label(b);
      }
    push("coproduct multiplicative", w);
  }
  {
    // Jac = span{v_ij : i != j}.
    auto in_jac = [&](const SparseVector& v) {
      for (const auto& [k, x] : v)
        if (k / n == k % n) return false;
      return true;
    };
    std::string w;
    std::vector<int> jac;
    for (int k = 0; k < N; ++k)
      if (k / n != k % n) jac.push_back(k);
    for (int k = 0; k < N && w.empty(); ++k)
      for (int j : jac) {
        if (!in_jac(T.product(bv(k / n, k % n), bv(j / n, j % n))) ||
            !in_jac(T.product(bv(j / n, j % n), bv(k / n, k % n)))) {
          w = "ideal fails at " + T.label(k) + ", " + T.label(j);
          break;
        }
      }
    std::vector<SparseVector> layer;
    for (int j : jac) layer.push_back(SparseVector{{j, one}});
    int steps = 1;
    while (!layer.empty() && steps <= n && w.empty()) {
      EchelonBasis next;
      for (const auto& a : layer)
        for (int j : jac) next.insert(T.product(a, SparseVector{{j, one}}));
      layer = next.reduced_rows();
      ++steps;
    }
    if (w.empty() && !layer.empty()) w = "Jac^" + std::to_string(n) + " != 0";
    push("span{v_ij : i != j} is a nilpotent two-sided ideal", w);

    std::string w2;
    if (N - static_cast<int>(jac.size()) != n) w2 = "quotient dimension " + std::to_string(N - jac.size());
    for (int i = 0; i < n && w2.empty(); ++i)
      for (int j = 0; j < n && w2.empty(); ++j) {
        SparseVector d = T.product(bv(i, i), bv(j, j));
        for (const auto& [k, v] : T.product(bv(j, j), bv(i, i))) add_term(d, k, -v);
        if (!in_jac(d)) w2 = tag({i, j});
      }
    push("T/Jac commutative of dimension n", w2);
  }
  return out;
}

AxiomRecord verify_commutation_lift(const PresentationPtr& h) {
  const auto T = twistor_generators(h);
  const int n = h->spec().n;
  const Cyclotomic q = h->family() == Family::Taft ? h->spec().xi.pow(h->spec().t) : h->liu().xi;
  std::vector<Element> u;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u.push_back(twistor_lift(h, i, j));
  AxiomRecord r{"u_ij u_i'j' = q^(i'j - ij') u_i'j' u_ij", h->label(), true, "0"};
  for (int a = 0; a < n * n && r.pass; ++a)
    for (int b = 0; b < n * n && r.pass; ++b) {
      const int i = a / n, j = a % n, i2 = b / n, j2 = b % n;
      if (!(u[a] * u[b] == q.pow(i2 * j - i * j2) * (u[b] * u[a]))) {
        r.pass = false;
        r.witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(i2) + "," +
                    std::to_string(j2) + ")";
      }
    }
  (void)T;
  return r;
}

TwistorIso twistor_iso(const TwistorAlgebra& a, const TwistorAlgebra& b) {
  TwistorIso r;
  if (a.n != b.n) {
    r.mismatch = "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim());
    return r;
  }
  const int N = a.dim();
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const auto k = static_cast<std::size_t>(x * N + y);
      if (a.mult[k] != b.mult[k]) {
        r.mismatch = "product " + a.label(x) + " * " + a.label(y) + ": " + vec_str(a, a.mult[k]) + " vs " +
                     vec_str(b, b.mult[k]);
        return r;
      }
    }
  for (int x = 0; x < N; ++x) {
    if (a.counit[x] != b.counit[x]) {
      r.mismatch = "counit at " + a.label(x);
      return r;
    }
    if (a.antipode[x] != b.antipode[x]) {
      r.mismatch = "antipode at " + a.label(x) + ": " + vec_str(a, a.antipode[x]) + " vs " +
                   vec_str(b, b.antipode[x]);
      return r;
    }
    if (a.coproduct[x] != b.coproduct[x]) {
      r.mismatch = "coproduct of " + a.label(x);
      return r;
    }
  }
  r.isomorphic = true;
  return r;
}

}  // namespace primehopf
