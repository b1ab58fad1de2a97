#pragma once

// Coalgebra operations, Hopf axiom verification, group-likes and
// skew-primitives in truncated slices.

#include "primehopf/element.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace primehopf {

Tensor2 coproduct(const Element& a);
Cyclotomic counit(const Element& a);
Element antipode(const Element& a);

/// m(a (x) b) = ab.
Element multiply_out(const Tensor2& t);
/// (Delta (x) id) and (id (x) Delta).
Tensor3 coproduct_first(const Tensor2& t);
Tensor3 coproduct_second(const Tensor2& t);

struct AxiomRecord {
  std::string axiom;
  std::string sample;
  bool pass = false;
  std::string witness;  // lhs - rhs, "0" on success
};

struct AxiomReport {
  std::string presentation;
  std::vector<AxiomRecord> records;

  bool all_pass() const;
  std::size_t failures() const;
  /// First failing record, or nullptr.
  const AxiomRecord* first_failure() const;
};

/// Random combinations of up to max_terms window monomials with coefficients
/// a + b * root^k, a, b small integers.
std::vector<Element> random_elements(const PresentationPtr& h, std::size_t count, long window,
                                     std::uint64_t seed, std::size_t max_terms = 4);

/// Images of the letters and their inverses where they exist.
std::vector<Element> generator_elements(const PresentationPtr& h);

/// Relation compatibility of Delta, epsilon and S, then per-sample
/// coassociativity, counit and antipode laws, then multiplicativity of
/// Delta and anti-multiplicativity of S on consecutive sample pairs.
AxiomReport verify_hopf_axioms(const PresentationPtr& h, const std::vector<Element>& samples);
/// Generators plus random_count random elements.
AxiomReport verify_hopf_axioms(const PresentationPtr& h, std::size_t random_count = 50,
                               std::uint64_t seed = 20240601);

/// Deliberately broken copies of h, each with one atom's coalgebra data
/// altered so that some Hopf axiom fails.
std::vector<PresentationPtr> negative_controls(const PresentationPtr& h);

struct GrouplikeSearch {
  long window = 0;
  std::vector<Element> grouplikes;
  /// True when Delta is homogeneous for the coalgebra grading on the slice and
  /// every degree-zero monomial is group-like; then a group-like element of
  /// the slice has no positive-degree part, so the list is complete.
  bool certified = false;
  std::string certificate;
};

GrouplikeSearch grouplikes(const PresentationPtr& h, long window);

bool is_grouplike(const Element& a);

/// Basis, in reduced echelon form over the sorted window, of
/// {z in slice : Delta(z) = z (x) a + 1 (x) z}.  Throws std::invalid_argument
/// when a is not group-like.
std::vector<Element> skew_primitives(const PresentationPtr& h, const Element& a, long window);

/// Whether the two families of elements span the same subspace.
bool same_span(const std::vector<Element>& a, const std::vector<Element>& b);

}  // namespace primehopf
