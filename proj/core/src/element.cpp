#include "primehopf/element.hpp"

#include <cctype>
#include <stdexcept>

namespace primehopf {

Element::Element(PresentationPtr h, Terms terms) : h_(std::move(h)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Element Element::scalar(PresentationPtr h, const Cyclotomic& c) {
  Terms t;
  add_term(t, Monomial{}, c);
  return Element(std::move(h), std::move(t));
}

Element Element::monomial(PresentationPtr h, const Monomial& m, const Cyclotomic& c) {
  if (!h->is_normal(m)) throw std::invalid_argument("monomial is not in normal form");
  Terms t;
  add_term(t, m, c);
  return Element(std::move(h), std::move(t));
}

Element Element::word(PresentationPtr h, std::string_view text) {
  Terms t = h->word_terms(parse_word(text));
  return Element(std::move(h), std::move(t));
}

Cyclotomic Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void Element::check_same(const Element& other) const {
  if (h_ && other.h_ && h_ != other.h_) {
    throw std::invalid_argument("elements belong to different presentations");
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& rhs) {
  check_same(rhs);
  if (!h_) h_ = rhs.h_;
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  check_same(rhs);
  if (!h_) h_ = rhs.h_;
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.check_same(b);
  const PresentationPtr& h = a.h_ ? a.h_ : b.h_;
  if (!h) return Element();
  return Element(h, h->multiply(a.terms_, b.terms_));
}

Element operator*(const Cyclotomic& c, const Element& a) {
  Element r = a;
  if (c.is_zero()) {
    r.terms_.clear();
    return r;
  }
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Element Element::pow(long e) const {
  if (e < 0) throw std::invalid_argument("negative power of an element");
  Element r = one(h_);
  for (long k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::string format_terms(const Presentation& h, const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool unit = m == Monomial{};
    std::string cs = c.str();
    const bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos ||
                          cs.find(" * ") != std::string::npos;
    std::string term;
    if (unit) {
      term = compound ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      term = h.monomial_str(m);
    } else if ((-c).is_one()) {
      term = "-" + h.monomial_str(m);
    } else {
      term = (compound ? "(" + cs + ")" : cs) + " * " + h.monomial_str(m);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

std::string Element::str() const {
  if (!h_) return "0";
  return format_terms(*h_, terms_);
}

Tensor2 tensor(const Element& a, const Element& b) {
  TensorTerms<2> t;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) add_term(t, TensorKey<2>{ma, mb}, ca * cb);
  return Tensor2(a.presentation() ? a.presentation() : b.presentation(), std::move(t));
}

namespace {

class ElementParser {
 public:
  ElementParser(PresentationPtr h, std::string_view text) : h_(std::move(h)), text_(text) {}

  Element parse_all() {
    Element v = parse_sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse element '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }
  long exponent() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    const long e = integer();
    return neg ? -e : e;
  }

  Element parse_sum() {
    Element acc = Element::zero(h_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Element t = parse_product();
    acc += neg ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += parse_product();
      } else if (accept('-')) {
        acc -= parse_product();
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Element parse_product() {
    Element acc = parse_power();
    while (true) {
      if (accept('*')) {
        acc = acc * parse_power();
      } else if (starts_factor()) {
        acc = acc * parse_power();
      } else {
        return acc;
      }
    }
  }

  Element parse_power() {
    skip();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "z" && peek('(')) {
        accept('(');
        const long n = integer();
        if (!accept(')')) fail("expected ')'");
        long k = 1;
        if (accept('^')) k = exponent();
        return Element::scalar(h_, Cyclotomic::zeta_power(static_cast<int>(n), k));
      }
      long e = 1;
      if (accept('^')) e = exponent();
      return Element(h_, h_->letter_terms(Letter{name, e}));
    }
    Element base;
    if (accept('(')) {
      base = parse_sum();
      if (!accept(')')) fail("expected ')'");
    } else {
      mpq_class num(integer());
      if (accept('/')) {
        num /= mpq_class(integer());
      }
      base = Element::scalar(h_, Cyclotomic(num));
    }
    if (!accept('^')) return base;
    const long e = exponent();
    if (e >= 0) return base.pow(e);
    if (base.terms().size() == 1 && base.terms().begin()->first == Monomial{}) {
      return Element::scalar(h_, base.terms().begin()->second.pow(e));
    }
    fail("negative power of a non-scalar expression");
  }

  PresentationPtr h_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element Element::parse(PresentationPtr h, std::string_view text) {
  return ElementParser(std::move(h), text).parse_all();
}

}  // namespace primehopf
