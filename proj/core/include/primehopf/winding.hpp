#pragma once

// Characters, winding automorphisms, integral order and minor, graded
// decompositions, fixed rings, strong grading, the integral annihilator and
// the center / PI-degree.

#include "primehopf/hopf.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace primehopf {

/// Algebra homomorphism H -> k, determined by its values on the atoms'
/// letters (g, x for Taft and the dihedral algebra, x for the lines, h, f, y
/// for Liu).
class Character {
 public:
  /// Throws std::invalid_argument when a letter is missing, an invertible
  /// letter is sent to 0, or a relation is violated.
  Character(PresentationPtr h, std::map<std::string, Cyclotomic> values);
  static Character counit(const PresentationPtr& h);

  const PresentationPtr& presentation() const { return h_; }
  const std::map<std::string, Cyclotomic>& values() const { return values_; }
  Cyclotomic operator()(const Monomial& m) const;
  Cyclotomic operator()(const Element& a) const;
  bool operator==(const Character& o) const { return values_ == o.values_; }
  std::string str() const;

 private:
  PresentationPtr h_;
  std::map<std::string, Cyclotomic> values_;
  std::vector<Cyclotomic> atom_values_;
};

/// The letters a character is specified on.
std::vector<std::string> basic_letters(const Presentation& h);

Character convolve(const Character& p, const Character& q);
Character character_power(const Character& p, long k);
/// Least m >= 1 with p^{*m} = epsilon; throws std::runtime_error past cap.
long character_order(const Character& p, long cap = 1000);

/// The character attached to the left homological integral.
Character integral_character(const PresentationPtr& h);

/// Algebra map src -> dst, determined by the images of the atoms of src.
class AlgebraMap {
 public:
  AlgebraMap(PresentationPtr src, PresentationPtr dst, std::vector<Element> atom_images);
  static AlgebraMap identity(const PresentationPtr& h);
  /// Images of the basic letters; images of inverse atoms are the inverses
  /// of group-like images (throws std::invalid_argument otherwise).
  static AlgebraMap from_letters(PresentationPtr src, PresentationPtr dst,
                                 const std::map<std::string, Element>& images);

  const PresentationPtr& source() const { return src_; }
  const PresentationPtr& target() const { return dst_; }
  const std::vector<Element>& atom_images() const { return images_; }

  Element image(const Monomial& m) const;
  Element operator()(const Element& a) const;
  Element letter_image(const Letter& l) const;
  /// other o this
  AlgebraMap then(const AlgebraMap& other) const;
  bool operator==(const AlgebraMap& o) const { return images_ == o.images_; }
  /// Labels of source relations not preserved by the map.
  std::vector<std::string> relation_failures() const;
  std::string str() const;

 private:
  PresentationPtr src_, dst_;
  std::vector<Element> images_;
};

/// The inverse of c * m for a group-like monomial m.
Element invert_grouplike_term(const Element& a);

enum class Side { Left, Right };

/// Xi^l_p(a) = sum p(a_1) a_2 and Xi^r_p(a) = sum a_1 p(a_2), applied
/// linearly through the coproduct.
Element winding_apply(const Character& p, Side side, const Element& a);
/// The same automorphism as an algebra map (images of atoms).
AlgebraMap winding_auto(const Character& p, Side side);
/// Least m >= 1 with f^m = id.
long automorphism_order(const AlgebraMap& f, long cap = 1000);

/// Identities of the winding automorphisms of the integral character on the
/// samples: (Xi^l (x) id) Delta = Delta Xi^l, (id (x) Xi^r) Delta = Delta Xi^r,
/// Xi^l Xi^r = Xi^r Xi^l, Xi^r S = S (Xi^l)^{-1} and
/// (id (x) Xi^l) Delta = (Xi^r (x) id) Delta.
std::vector<AxiomRecord> verify_winding_identities(const PresentationPtr& h, const std::vector<Element>& samples);

struct IoIm {
  long io = 0;
  long im = 0;
  long intersection = 0;  // |G^l cap G^r|
};

IoIm io_im(const PresentationPtr& h);

/// Eigen-indices of the winding automorphisms on window monomials.  Index i
/// means eigenvalue omega^i for omega = z(io).
struct GradedDecomposition {
  long io = 0;
  long window = 0;
  std::map<long, std::vector<Monomial>> left, right;
  std::map<std::pair<long, long>, std::vector<Monomial>> both;
  /// Every index 0..io-1 occurs on both sides.
  bool components_nonzero() const;
};

/// Throws std::runtime_error if some monomial is not an eigenvector.
GradedDecomposition graded_decomposition(const PresentationPtr& h, long window);

enum class FixedSide { Left, Right, Both };

/// Word generators of H^l_0, H^r_0 and H_0 for each family.
std::vector<std::string> fixed_ring_generators(const Presentation& h, FixedSide side);

struct FixedRingCheck {
  FixedSide side = FixedSide::Left;
  long window = 0;
  std::vector<std::string> generators;
  std::set<Monomial> fixed;  // window monomials fixed by the winding group
  std::size_t generated_rank = 0;  // dim of (generated subalgebra) cap slice
  bool generated_inside_fixed = false;
  bool equal = false;
};

FixedRingCheck fixed_ring_check(const PresentationPtr& h, FixedSide side, long window);

/// Span of the subalgebra generated by gens, restricted to the window slice.
/// Products may leave the window by up to `excursion` in the growth exponent.
std::vector<Element> generated_slice(const PresentationPtr& h, const std::vector<Element>& gens, long window,
                                     long excursion);

struct GradingWitness {
  Side side = Side::Left;
  long component = 0;
  Element b;
  Element certificate;  // sum b_1 S(b_2)
  bool left_factors_in_component = false;
  bool ok = false;
};

/// For every component index of the left or right grading, an element b with
/// epsilon(b) = 1 and sum b_1 S(b_2) = 1.  Throws std::runtime_error when a
/// component has no witness in the window.
std::vector<GradingWitness> strong_grading_witnesses(const PresentationPtr& h, Side side, long window);

/// "primitive" or "grouplike", from the first generator of H_0.
std::string dichotomy(const PresentationPtr& h);

std::vector<std::string> jiq_generators(const Presentation& h);

/// a lies in J_iq iff it vanishes under every p^{*i}, 0 <= i < io.
bool jiq_contains(const Element& a, const Character& pi, long io);

struct JiqCheck {
  long io = 0;
  long window = 0;
  std::size_t quotient_dimension = 0;   // rank of the evaluations on the slice
  bool quotient_commutative_semisimple = false;  // image is all of k^io
  bool generators_in_jiq = false;
  std::size_t kernel_dimension = 0;
  std::size_t span_rank = 0;        // rank of (ker eps cap H^l_0) H on the slice
  bool span_inside_kernel = false;
  bool span_equals_kernel = false;  // the J_iq = (ker eps cap H^l_0) H check
  bool taft_xh = true;              // Taft only: kernel slice = x H slice
};

JiqCheck jiq_check(const PresentationPtr& h, long window, long span_window);

struct CenterInfo {
  long window = 0;
  std::vector<Element> basis;       // center cap slice
  std::vector<Element> generators;  // greedy algebra generators, by growth
  long rank = 0;                    // rank of H over the generated center
  long pi_degree = 0;
  bool inside_h0 = false;
};

/// Throws std::runtime_error when the rank is not a perfect square.
CenterInfo center_truncated(const PresentationPtr& h, long window);
long pi_degree(const PresentationPtr& h);

}  // namespace primehopf
