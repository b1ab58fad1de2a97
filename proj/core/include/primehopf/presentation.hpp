#pragma once

// The five Hopf algebra families as rewriting systems with normal-monomial
// bases.
//
// Normal monomials are exponent triples, read per family as
//   PolynomialLine, LaurentLine : x^e0
//   Dihedral                    : g^e0 x^e1      (e0 in {0,1}, e1 in Z)
//   Taft                        : g^e0 x^e1      (0 <= e0 < n, e1 >= 0)
//   Liu                         : h^e0 f^e1 y^e2 (e0 in Z, 0 <= e1 < b, 0 <= e2 < n)
// Group-like letters sit to the left.  Products of two normal monomials are
// computed in closed form from the skew-commutation and power relations.

#include "primehopf/cyclotomic.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace primehopf {

enum class Family { PolynomialLine, LaurentLine, Dihedral, Taft, Liu };

std::string family_name(Family f);
/// Accepts the canonical names and short aliases (poly, laurent, dihedral,
/// taft, liu), case-insensitively.
Family parse_family(std::string_view text);

struct FamilySpec {
  Family family = Family::PolynomialLine;
  int n = 0;
  int t = 0;
  int w = 0;
  int i0 = -1;  // Liu only; -1 means "use find_i0"
  Cyclotomic xi;
  Cyclotomic theta;

  static FamilySpec polynomial_line();
  static FamilySpec laurent_line();
  static FamilySpec dihedral();
  static FamilySpec taft(int n, int t, const Cyclotomic& xi);
  /// Taft with xi = z(n).
  static FamilySpec taft(int n, int t);
  static FamilySpec liu(int n, int w, const Cyclotomic& theta, int i0 = -1);
  /// Liu with theta = z(n).
  static FamilySpec liu(int n, int w);
  /// Liu algebra B(n,w,xi): theta is recovered from xi = theta^(w' + n' i0).
  static FamilySpec liu_with_xi(int n, int w, const Cyclotomic& xi);

  std::string label() const;
};

struct Monomial {
  std::array<long, 3> e{};
  auto operator<=>(const Monomial&) const = default;
};

using Terms = std::map<Monomial, Cyclotomic>;
template <std::size_t K>
using TensorKey = std::array<Monomial, K>;
template <std::size_t K>
using TensorTerms = std::map<TensorKey<K>, Cyclotomic>;

template <class Map, class Key>
void add_term(Map& m, const Key& k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

struct Letter {
  std::string gen;
  long exp = 1;
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Parses "x*g^-1", "x g^2 y" or "1" (empty word).
Word parse_word(std::string_view text);
std::string word_str(const Word& w);

struct Relation {
  std::string label;
  Word lhs;
  std::vector<std::pair<Cyclotomic, Word>> rhs;
};

/// Building block of normal monomials; every normal monomial is an ordered
/// product of powers of atoms.  Coalgebra data lives on atoms.
struct Atom {
  std::string name;
  Monomial mono;
  TensorTerms<2> delta;
  Cyclotomic eps;
  Terms antipode;
};

struct LiuParams {
  int n = 0, w = 0, b = 0, np = 0, wp = 0, i0 = 0;
  long u = 0, v = 0;  // u (w' + n' i0) + v n = 1
  Cyclotomic theta, xi;
};

/// Closed form prod{p prime : p | b, p does not divide w'} reduced mod b.
int find_i0(int n, int w);
/// The unreduced product, possibly >= b.
int find_i0_raw(int n, int w);
bool i0_admissible(int n, int w, int i);

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
 public:
  /// Validates the parameters and builds the presentation.  Throws
  /// std::invalid_argument on a non-primitive root, t out of range or a
  /// violated gcd(n, w' + n' i0) = 1 condition.
  static PresentationPtr make(const FamilySpec& spec);

  Family family() const { return spec_.family; }
  const FamilySpec& spec() const { return spec_; }
  std::string label() const;
  /// n for Taft and Liu, 2 for the dihedral algebra, 1 for the lines.
  int n() const;
  const LiuParams& liu() const { return liu_; }
  /// The root of unity used in structure constants (xi for Taft, theta for Liu).
  const Cyclotomic& root() const { return root_; }
  const Cyclotomic& root_power(long k) const;

  const std::vector<std::string>& letters() const { return letters_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& mutation() const { return mutation_; }

  bool is_normal(const Monomial& m) const;
  /// out += c * a * b in normal form.
  void multiply_into(const Monomial& a, const Monomial& b, const Cyclotomic& c, Terms& out) const;
  Terms multiply(const Terms& a, const Terms& b) const;
  template <std::size_t K>
  TensorTerms<K> multiply(const TensorTerms<K>& a, const TensorTerms<K>& b) const;

  /// Atom indices and non-negative powers whose ordered product is m.
  std::vector<std::pair<int, long>> decompose(const Monomial& m) const;
  /// Normal form of gen^exp.  Throws std::invalid_argument for unknown
  /// letters and negative powers of non-invertible letters.
  Terms letter_terms(const Letter& l) const;
  Terms word_terms(const Word& w) const;

  std::string monomial_str(const Monomial& m) const;
  /// The unbounded exponent used for truncation (x, or h for Liu).
  long growth(const Monomial& m) const;
  /// Coalgebra grading: x-degree (Taft, polynomial line), y-degree (Liu), 0 otherwise.
  long coalgebra_degree(const Monomial& m) const;
  /// Normal monomials with growth in [0, D] (one-sided families) or [-D, D].
  std::vector<Monomial> window(long D) const;
  long default_window() const;

  /// Memoized multiplicative extension of the atom coproducts.
  const TensorTerms<2>& coproduct(const Monomial& m) const;
  Cyclotomic counit(const Monomial& m) const;
  /// Anti-multiplicative extension of the atom antipodes.
  const Terms& antipode(const Monomial& m) const;

  /// Copy with the coalgebra data of one atom replaced (negative controls).
  PresentationPtr mutated(const std::string& atom, const std::string& label,
                          std::optional<TensorTerms<2>> delta, std::optional<Cyclotomic> eps,
                          std::optional<Terms> antipode) const;

  Presentation(const Presentation& other);

 private:
  Presentation() = default;
  void build();
  int atom_index(const std::string& name) const;

  FamilySpec spec_;
  LiuParams liu_;
  Cyclotomic root_;
  std::vector<Cyclotomic> root_powers_;
  std::vector<std::string> letters_;
  std::vector<Atom> atoms_;
  std::vector<Relation> relations_;
  std::string mutation_;

  mutable std::mutex cache_mutex_;
  mutable std::map<Monomial, TensorTerms<2>> delta_cache_;
  mutable std::map<Monomial, Terms> antipode_cache_;
};

template <std::size_t K>
TensorTerms<K> Presentation::multiply(const TensorTerms<K>& a, const TensorTerms<K>& b) const {
  TensorTerms<K> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      // Expand slot by slot.
      std::vector<std::pair<TensorKey<K>, Cyclotomic>> partial{{TensorKey<K>{}, ca * cb}};
      for (std::size_t s = 0; s < K; ++s) {
        Terms slot;
        multiply_into(ka[s], kb[s], Cyclotomic(1L), slot);
        std::vector<std::pair<TensorKey<K>, Cyclotomic>> next;
        next.reserve(partial.size() * slot.size());
        for (const auto& [key, c] : partial) {
          for (const auto& [m, cm] : slot) {
            TensorKey<K> k2 = key;
            k2[s] = m;
            next.emplace_back(k2, c * cm);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [key, c] : partial) add_term(out, key, c);
    }
  }
  return out;
}

}  // namespace primehopf
