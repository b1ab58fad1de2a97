#pragma once

// The twistor H_tw = H / (ker eps cap H_0) H for Taft algebras with
// gcd(t, n) = 1 and for Liu algebras, as structure-constant tables on the
// basis v_ij (images of u_ij = G^i Y^{(j-i) mod n}).

#include "primehopf/hopf.hpp"
#include "primehopf/linalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace primehopf {

struct TwistorAlgebra {
  PresentationPtr source;
  int n = 0;
  /// Skew-commutation scalar: Y G = q G Y (xi^t for Taft, xi for Liu).
  Cyclotomic q;
  std::vector<SparseVector> mult;  // v_a v_b at a * dim() + b
  std::vector<Cyclotomic> counit;
  std::vector<SparseVector> antipode;
  /// coproduct[k][(s, t)] = c^{ij}_{st} for k = index(i, j):
  /// Delta(v_ij) = sum c^{ij}_{st} v_is (x) v_tj.
  std::vector<std::map<std::pair<int, int>, Cyclotomic>> coproduct;

  int dim() const { return n * n; }
  int index(int i, int j) const { return i * n + j; }
  Cyclotomic coefficient(int i, int j, int s, int t) const;
  SparseVector product(const SparseVector& a, const SparseVector& b) const;
  SparseVector basis(int i, int j) const { return SparseVector{{index(i, j), Cyclotomic(1L)}}; }
  std::string label(int k) const;
};

/// Group-like G and skew-primitive Y used for the lifts: (g^t, x) for Taft,
/// (g, y) for Liu.  Throws std::invalid_argument outside the twistor's scope.
std::pair<Element, Element> twistor_generators(const PresentationPtr& h);
Element twistor_lift(const PresentationPtr& h, int i, int j);

TwistorAlgebra twistor(const PresentationPtr& h);

/// Structural identities of the twistor, one record per identity; the
/// witness names the first failing index tuple.
std::vector<AxiomRecord> verify_twistor(const TwistorAlgebra& T);

/// u_ij u_i'j' = q^{i'j - ij'} u_i'j' u_ij in H for all n^4 tuples.
AxiomRecord verify_commutation_lift(const PresentationPtr& h);

struct TwistorIso {
  bool isomorphic = false;
  std::string mismatch;
};

/// Entrywise comparison of all tables under v_ij -> v_ij.
TwistorIso twistor_iso(const TwistorAlgebra& a, const TwistorAlgebra& b);

}  // namespace primehopf
