#pragma once

// Elements of a presentation and of its tensor powers.

#include "primehopf/presentation.hpp"

#include <string>
#include <string_view>

namespace primehopf {

class Element {
 public:
  Element() = default;
  Element(PresentationPtr h, Terms terms);

  static Element zero(PresentationPtr h) { return Element(std::move(h), {}); }
  static Element scalar(PresentationPtr h, const Cyclotomic& c);
  static Element one(PresentationPtr h) { return scalar(std::move(h), Cyclotomic(1L)); }
  static Element monomial(PresentationPtr h, const Monomial& m, const Cyclotomic& c = Cyclotomic(1L));
  static Element word(PresentationPtr h, std::string_view text);
  /// Sums and products of rationals, z(N)^k, generator powers and
  /// parenthesized subexpressions, e.g. "1 - g", "(1 + z(4)^1) * x^2 g".
  static Element parse(PresentationPtr h, std::string_view text);

  const PresentationPtr& presentation() const { return h_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Cyclotomic coefficient(const Monomial& m) const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Cyclotomic& c, const Element& a);
  Element pow(long e) const;

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// "coeff * mono + ..." sorted by monomial; "0" for zero.
  std::string str() const;

 private:
  void check_same(const Element& other) const;

  PresentationPtr h_;
  Terms terms_;
};

std::string format_terms(const Presentation& h, const Terms& terms);

template <std::size_t K>
class Tensor {
 public:
  Tensor() = default;
  Tensor(PresentationPtr h, TensorTerms<K> terms) : h_(std::move(h)), terms_(std::move(terms)) {}

  const PresentationPtr& presentation() const { return h_; }
  const TensorTerms<K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Tensor& operator+=(const Tensor& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(terms_, k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(terms_, k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Tensor& a, const Tensor& b) {
    return Tensor(a.h_, a.h_->template multiply<K>(a.terms_, b.terms_));
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ") * ";
      for (std::size_t s = 0; s < K; ++s) {
        if (s) out += " (x) ";
        out += "[" + h_->monomial_str(k[s]) + "]";
      }
    }
    return out;
  }

 private:
  PresentationPtr h_;
  TensorTerms<K> terms_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

/// a (x) b
Tensor2 tensor(const Element& a, const Element& b);

}  // namespace primehopf
