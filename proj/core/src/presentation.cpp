#include "primehopf/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace primehopf {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

// Returns (g, u, v) with u a + v b = g.
std::tuple<long, long, long> ext_gcd(long a, long b) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

long inverse_mod(long a, long n) {
  auto [g, u, v] = ext_gcd(mod_floor(a, n), n);
  (void)v;
  if (g != 1) throw std::invalid_argument("not invertible modulo n");
  return mod_floor(u, n);
}

Monomial mono(long a, long b = 0, long c = 0) { return Monomial{{a, b, c}}; }

const Monomial kOne = mono(0);

std::string power_str(const char* name, long e) {
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::PolynomialLine:
      return "PolynomialLine";
    case Family::LaurentLine:
      return "LaurentLine";
    case Family::Dihedral:
      return "Dihedral";
    case Family::Taft:
      return "Taft";
    case Family::Liu:
      return "Liu";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  const std::string s = lower(text);
  if (s == "polynomialline" || s == "poly" || s == "polynomial" || s == "line") return Family::PolynomialLine;
  if (s == "laurentline" || s == "laurent") return Family::LaurentLine;
  if (s == "dihedral" || s == "kd") return Family::Dihedral;
  if (s == "taft") return Family::Taft;
  if (s == "liu") return Family::Liu;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

FamilySpec FamilySpec::polynomial_line() { return FamilySpec{}; }

FamilySpec FamilySpec::laurent_line() {
  FamilySpec s;
  s.family = Family::LaurentLine;
  return s;
}

FamilySpec FamilySpec::dihedral() {
  FamilySpec s;
  s.family = Family::Dihedral;
  return s;
}

FamilySpec FamilySpec::taft(int n, int t, const Cyclotomic& xi) {
  FamilySpec s;
  s.family = Family::Taft;
  s.n = n;
  s.t = t;
  s.xi = xi;
  return s;
}

FamilySpec FamilySpec::taft(int n, int t) { return taft(n, t, primitive_root(n)); }

FamilySpec FamilySpec::liu(int n, int w, const Cyclotomic& theta, int i0) {
  FamilySpec s;
  s.family = Family::Liu;
  s.n = n;
  s.w = w;
  s.theta = theta;
  s.i0 = i0;
  return s;
}

FamilySpec FamilySpec::liu(int n, int w) { return liu(n, w, primitive_root(n)); }

FamilySpec FamilySpec::liu_with_xi(int n, int w, const Cyclotomic& xi) {
  if (n < 2 || w < 1) throw std::invalid_argument("Liu needs n >= 2 and w >= 1");
  const int b = static_cast<int>(gcd_long(n, w));
  const int i0 = find_i0(n, w);
  const long e = w / b + (n / b) * i0;
  const long e_inv = inverse_mod(e, n);
  return liu(n, w, xi.pow(e_inv), i0);
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  os << family_name(family);
  switch (family) {
    case Family::Taft:
      os << "(n=" << n << ", t=" << t << ", xi=" << xi << ")";
      break;
    case Family::Liu:
      os << "(n=" << n << ", w=" << w << ", theta=" << theta;
      if (i0 >= 0) os << ", i0=" << i0;
      if (!xi.is_zero()) os << ", xi=" << xi;
      os << ")";
      break;
    default:
      break;
  }
  return os.str();
}

int find_i0_raw(int n, int w) {
  if (n < 1 || w < 1) throw std::invalid_argument("find_i0 needs positive n and w");
  const int b = static_cast<int>(gcd_long(n, w));
  const int wp = w / b;
  int prod = 1;
  int m = b;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    if (wp % p != 0) prod *= p;
  }
  return prod;
}

int find_i0(int n, int w) {
  const int b = static_cast<int>(gcd_long(n, w));
  return find_i0_raw(n, w) % b;
}

bool i0_admissible(int n, int w, int i) {
  const int b = static_cast<int>(gcd_long(n, w));
  return gcd_long(n, w / b + static_cast<long>(n / b) * i) == 1;
}

Word parse_word(std::string_view text) {
  Word word;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw std::invalid_argument("cannot parse word '" + std::string(text) + "'");
    return word;
  }
  while (i < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("cannot parse word '" + std::string(text) + "'");
    }
    const std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    Letter l{std::string(text.substr(start, i - start)), 1};
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
      const std::size_t ds = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (ds == i) throw std::invalid_argument("missing exponent in word '" + std::string(text) + "'");
      l.exp = std::stol(std::string(text.substr(ds, i - ds)));
      if (neg) l.exp = -l.exp;
    }
    word.push_back(std::move(l));
    skip();
  }
  return word;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += "*";
    out += l.gen;
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Presentation::Presentation(const Presentation& other)
    : spec_(other.spec_),
      liu_(other.liu_),
      root_(other.root_),
      root_powers_(other.root_powers_),
      letters_(other.letters_),
      atoms_(other.atoms_),
      relations_(other.relations_),
      mutation_(other.mutation_) {}

PresentationPtr Presentation::make(const FamilySpec& spec) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->spec_ = spec;
  p->build();
  return p;
}

int Presentation::n() const {
  switch (spec_.family) {
    case Family::Taft:
    case Family::Liu:
      return spec_.n;
    case Family::Dihedral:
      return 2;
    default:
      return 1;
  }
}

std::string Presentation::label() const {
  std::string s = spec_.label();
  if (!mutation_.empty()) s += " [mutated: " + mutation_ + "]";
  return s;
}

const Cyclotomic& Presentation::root_power(long k) const {
  return root_powers_[static_cast<std::size_t>(mod_floor(k, static_cast<long>(root_powers_.size())))];
}

int Presentation::atom_index(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown atom '" + name + "'");
}

void Presentation::build() {
  FamilySpec& s = spec_;
  auto single = [](const Monomial& m) { return Terms{{m, Cyclotomic(1L)}}; };
  auto grouplike = [](const Monomial& m) { return TensorTerms<2>{{{m, m}, Cyclotomic(1L)}}; };
  auto L = [](const char* g, long e = 1) { return Letter{g, e}; };
  const Cyclotomic one(1L);

  switch (s.family) {
    case Family::PolynomialLine: {
      root_ = one;
      root_powers_ = {one};
      letters_ = {"x"};
      const Monomial x = mono(1);
      atoms_.push_back({"x", x, {{{x, kOne}, one}, {{kOne, x}, one}}, Cyclotomic(), {{x, Cyclotomic(-1L)}}});
      break;
    }
    case Family::LaurentLine: {
      root_ = one;
      root_powers_ = {one};
      letters_ = {"x"};
      const Monomial x = mono(1), xi = mono(-1);
      atoms_.push_back({"x", x, grouplike(x), one, single(xi)});
      atoms_.push_back({"x^-1", xi, grouplike(xi), one, single(x)});
      relations_.push_back({"x*x^-1=1", {L("x"), L("x", -1)}, {{one, {}}}});
      relations_.push_back({"x^-1*x=1", {L("x", -1), L("x")}, {{one, {}}}});
      break;
    }
    case Family::Dihedral: {
      root_ = Cyclotomic(-1L);
      root_powers_ = {one, Cyclotomic(-1L)};
      letters_ = {"g", "x"};
      const Monomial g = mono(1), x = mono(0, 1), xi = mono(0, -1);
      atoms_.push_back({"g", g, grouplike(g), one, single(g)});
      atoms_.push_back({"x", x, grouplike(x), one, single(xi)});
      atoms_.push_back({"x^-1", xi, grouplike(xi), one, single(x)});
      relations_.push_back({"g^2=1", {L("g", 2)}, {{one, {}}}});
      relations_.push_back({"g*x*g=x^-1", {L("g"), L("x"), L("g")}, {{one, {L("x", -1)}}}});
      relations_.push_back({"x*x^-1=1", {L("x"), L("x", -1)}, {{one, {}}}});
      relations_.push_back({"x^-1*x=1", {L("x", -1), L("x")}, {{one, {}}}});
      break;
    }
    case Family::Taft: {
      const int n = s.n;
      if (n < 2) throw std::invalid_argument("Taft needs n >= 2");
      if (s.t < 0 || s.t >= n) throw std::invalid_argument("Taft needs 0 <= t <= n-1");
      if (s.xi.is_zero() || multiplicative_order(s.xi) != std::optional<long>(n)) {
        throw std::invalid_argument("xi = " + s.xi.str() + " is not a primitive " + std::to_string(n) +
                                    "-th root of unity");
      }
      root_ = s.xi;
      root_powers_.assign(1, one);
      for (int k = 1; k < n; ++k) root_powers_.push_back(root_powers_.back() * s.xi);
      letters_ = {"g", "x"};
      const Monomial g = mono(1 % n), x = mono(0, 1), gt = mono(s.t);
      atoms_.push_back({"g", g, grouplike(g), one, single(mono(n - 1))});
      Terms sx;
      multiply_into(x, mono((n - s.t) % n), Cyclotomic(-1L), sx);
      atoms_.push_back({"x", x, {{{x, gt}, one}, {{kOne, x}, one}}, Cyclotomic(), sx});
      relations_.push_back({"g^" + std::to_string(n) + "=1", {L("g", n)}, {{one, {}}}});
      relations_.push_back({"x*g=xi*g*x", {L("x"), L("g")}, {{s.xi, {L("g"), L("x")}}}});
      break;
    }
    case Family::Liu: {
      const int n = s.n, w = s.w;
      if (n < 2) throw std::invalid_argument("Liu needs n >= 2");
      if (w < 1) throw std::invalid_argument("Liu needs w >= 1");
      if (s.theta.is_zero() || multiplicative_order(s.theta) != std::optional<long>(n)) {
        throw std::invalid_argument("theta = " + s.theta.str() + " is not a primitive " + std::to_string(n) +
                                    "-th root of unity");
      }
      LiuParams& P = liu_;
      P.n = n;
      P.w = w;
      P.b = static_cast<int>(gcd_long(n, w));
      P.np = n / P.b;
      P.wp = w / P.b;
      if (s.i0 < 0) s.i0 = find_i0(n, w);
      if (s.i0 >= P.b) throw std::invalid_argument("i0 must lie in 0..b-1");
      P.i0 = s.i0;
      const long e = P.wp + static_cast<long>(P.np) * P.i0;
      auto [gg, u, v] = ext_gcd(e, n);
      if (gg != 1) {
        throw std::invalid_argument("gcd(n, w' + n' i0) = " + std::to_string(gg) + " != 1");
      }
      P.u = u;
      P.v = v;
      P.theta = s.theta;
      P.xi = s.theta.pow(e);
      s.xi = P.xi;
      root_ = s.theta;
      root_powers_.assign(1, one);
      for (int k = 1; k < n; ++k) root_powers_.push_back(root_powers_.back() * s.theta);
      letters_ = {"h", "f", "y", "x", "g"};
      const int b = P.b;
      const Monomial h = mono(1), hi = mono(-1), f = mono(0, 1 % b), y = mono(0, 0, 1);
      const Monomial g = mono(P.wp, P.i0 % b), gi = mono(-P.wp, mod_floor(-P.i0, b));
      atoms_.push_back({"h", h, grouplike(h), one, single(hi)});
      atoms_.push_back({"h^-1", hi, grouplike(hi), one, single(h)});
      atoms_.push_back({"f", f, grouplike(f), one, single(mono(0, (b - 1) % b))});
      Terms sy;
      multiply_into(y, gi, Cyclotomic(-1L), sy);
      atoms_.push_back({"y", y, {{{y, g}, one}, {{kOne, y}, one}}, Cyclotomic(), sy});

      const Cyclotomic minus_one(-1L);
      relations_.push_back({"h*h^-1=1", {L("h"), L("h", -1)}, {{one, {}}}});
      relations_.push_back({"h^-1*h=1", {L("h", -1), L("h")}, {{one, {}}}});
      relations_.push_back({"f^" + std::to_string(b) + "=1", {L("f", b)}, {{one, {}}}});
      relations_.push_back({"h*f=f*h", {L("h"), L("f")}, {{one, {L("f"), L("h")}}}});
      relations_.push_back({"y*h=theta*h*y", {L("y"), L("h")}, {{s.theta, {L("h"), L("y")}}}});
      relations_.push_back(
          {"y*f=theta^n'*f*y", {L("y"), L("f")}, {{s.theta.pow(P.np), {L("f"), L("y")}}}});
      relations_.push_back({"y^n=1-h^(n w')",
                            {L("y", n)},
                            {{one, {}}, {minus_one, {L("h", static_cast<long>(n) * P.wp)}}}});
      relations_.push_back({"y*g=xi*g*y", {L("y"), L("g")}, {{P.xi, {L("g"), L("y")}}}});
      relations_.push_back({"y^n=1-x^w", {L("y", n)}, {{one, {}}, {minus_one, {L("x", w)}}}});
      relations_.push_back({"y^n=1-g^n", {L("y", n)}, {{one, {}}, {minus_one, {L("g", n)}}}});
      relations_.push_back({"x*y=y*x", {L("x"), L("y")}, {{one, {L("y"), L("x")}}}});
      relations_.push_back({"x*g=g*x", {L("x"), L("g")}, {{one, {L("g"), L("x")}}}});
      relations_.push_back({"x*x^-1=1", {L("x"), L("x", -1)}, {{one, {}}}});
      break;
    }
  }
}

bool Presentation::is_normal(const Monomial& m) const {
  const auto& e = m.e;
  switch (spec_.family) {
    case Family::PolynomialLine:
      return e[0] >= 0 && e[1] == 0 && e[2] == 0;
    case Family::LaurentLine:
      return e[1] == 0 && e[2] == 0;
    case Family::Dihedral:
      return (e[0] == 0 || e[0] == 1) && e[2] == 0;
    case Family::Taft:
      return e[0] >= 0 && e[0] < spec_.n && e[1] >= 0 && e[2] == 0;
    case Family::Liu:
      return e[1] >= 0 && e[1] < liu_.b && e[2] >= 0 && e[2] < spec_.n;
  }
  return false;
}

void Presentation::multiply_into(const Monomial& a, const Monomial& b, const Cyclotomic& c, Terms& out) const {
  const auto& x = a.e;
  const auto& y = b.e;
  switch (spec_.family) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
      add_term(out, mono(x[0] + y[0]), c);
      return;
    case Family::Dihedral:
      add_term(out, mono((x[0] + y[0]) % 2, (y[0] != 0 ? -x[1] : x[1]) + y[1]), c);
      return;
    case Family::Taft: {
      const long n = spec_.n;
      add_term(out, mono((x[0] + y[0]) % n, x[1] + y[1]), c * root_power(x[1] * y[0]));
      return;
    }
    case Family::Liu: {
      const long n = spec_.n;
      const long expo = mod_floor(x[2] * mod_floor(y[0], n) + static_cast<long>(liu_.np) * x[2] * y[1], n);
      const Cyclotomic coeff = c * root_power(expo);
      const long h = x[0] + y[0];
      const long f = (x[1] + y[1]) % liu_.b;
      const long yy = x[2] + y[2];
      if (yy < n) {
        add_term(out, mono(h, f, yy), coeff);
      } else {
        add_term(out, mono(h, f, yy - n), coeff);
        add_term(out, mono(h + n * liu_.wp, f, yy - n), -coeff);
      }
      return;
    }
  }
}

Terms Presentation::multiply(const Terms& a, const Terms& b) const {
  Terms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) multiply_into(ma, mb, ca * cb, out);
  return out;
}

std::vector<std::pair<int, long>> Presentation::decompose(const Monomial& m) const {
  std::vector<std::pair<int, long>> out;
  auto push = [&](int atom, long p) {
    if (p != 0) out.emplace_back(atom, p);
  };
  const auto& e = m.e;
  switch (spec_.family) {
    case Family::PolynomialLine:
      push(0, e[0]);
      break;
    case Family::LaurentLine:
      push(e[0] >= 0 ? 0 : 1, std::abs(e[0]));
      break;
    case Family::Dihedral:
      push(0, e[0]);
      push(e[1] >= 0 ? 1 : 2, std::abs(e[1]));
      break;
    case Family::Taft:
      push(0, e[0]);
      push(1, e[1]);
      break;
    case Family::Liu:
      push(e[0] >= 0 ? 0 : 1, std::abs(e[0]));
      push(2, e[1]);
      push(3, e[2]);
      break;
  }
  return out;
}

Terms Presentation::letter_terms(const Letter& l) const {
  std::optional<Monomial> base, inv;
  const long b = liu_.b > 0 ? liu_.b : 1;
  const std::string& g = l.gen;
  switch (spec_.family) {
    case Family::PolynomialLine:
      if (g == "x") base = mono(1);
      break;
    case Family::LaurentLine:
      if (g == "x") base = mono(1), inv = mono(-1);
      break;
    case Family::Dihedral:
      if (g == "g") base = mono(1), inv = mono(1);
      if (g == "x") base = mono(0, 1), inv = mono(0, -1);
      break;
    case Family::Taft:
      if (g == "g") base = mono(1 % spec_.n), inv = mono(spec_.n - 1);
      if (g == "x") base = mono(0, 1);
      break;
    case Family::Liu:
      if (g == "h") base = mono(1), inv = mono(-1);
      if (g == "f") base = mono(0, 1 % b), inv = mono(0, (b - 1) % b);
      if (g == "x") base = mono(liu_.np, (b - 1) % b), inv = mono(-liu_.np, 1 % b);
      if (g == "g") base = mono(liu_.wp, liu_.i0 % b), inv = mono(-liu_.wp, mod_floor(-liu_.i0, b));
      if (g == "y") base = mono(0, 0, 1);
      break;
  }
  if (!base) throw std::invalid_argument("unknown generator '" + g + "' for " + family_name(spec_.family));
  Monomial step = *base;
  if (l.exp < 0) {
    if (!inv) throw std::invalid_argument("generator '" + g + "' is not invertible");
    step = *inv;
  }
  Terms result{{kOne, Cyclotomic(1L)}};
  for (long k = 0; k < std::abs(l.exp); ++k) {
    Terms next;
    for (const auto& [m, c] : result) multiply_into(m, step, c, next);
    result = std::move(next);
  }
  return result;
}

Terms Presentation::word_terms(const Word& w) const {
  Terms result{{kOne, Cyclotomic(1L)}};
  for (const auto& l : w) result = multiply(result, letter_terms(l));
  return result;
}

std::string Presentation::monomial_str(const Monomial& m) const {
  const auto& e = m.e;
  std::vector<std::string> parts;
  switch (spec_.family) {
    case Family::PolynomialLine:
    case Family::LaurentLine:
      if (e[0] != 0) parts.push_back(power_str("x", e[0]));
      break;
    case Family::Dihedral:
    case Family::Taft:
      if (e[0] != 0) parts.push_back(power_str("g", e[0]));
      if (e[1] != 0) parts.push_back(power_str("x", e[1]));
      break;
    case Family::Liu:
      if (e[0] != 0) parts.push_back(power_str("h", e[0]));
      if (e[1] != 0) parts.push_back(power_str("f", e[1]));
      if (e[2] != 0) parts.push_back(power_str("y", e[2]));
      break;
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
  return out;
}

long Presentation::growth(const Monomial& m) const {
  switch (spec_.family) {
    case Family::Dihedral:
    case Family::Taft:
      return m.e[1];
    default:
      return m.e[0];
  }
}

long Presentation::coalgebra_degree(const Monomial& m) const {
  switch (spec_.family) {
    case Family::PolynomialLine:
      return m.e[0];
    case Family::Taft:
      return m.e[1];
    case Family::Liu:
      return m.e[2];
    default:
      return 0;
  }
}

std::vector<Monomial> Presentation::window(long D) const {
  std::vector<Monomial> out;
  switch (spec_.family) {
    case Family::PolynomialLine:
      for (long x = 0; x <= D; ++x) out.push_back(mono(x));
      break;
    case Family::LaurentLine:
      for (long x = -D; x <= D; ++x) out.push_back(mono(x));
      break;
    case Family::Dihedral:
      for (long g = 0; g < 2; ++g)
        for (long x = -D; x <= D; ++x) out.push_back(mono(g, x));
      break;
    case Family::Taft:
      for (long g = 0; g < spec_.n; ++g)
        for (long x = 0; x <= D; ++x) out.push_back(mono(g, x));
      break;
    case Family::Liu:
      for (long h = -D; h <= D; ++h)
        for (long f = 0; f < liu_.b; ++f)
          for (long y = 0; y < spec_.n; ++y) out.push_back(mono(h, f, y));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long Presentation::default_window() const { return std::max(2L * n(), 4L); }

const TensorTerms<2>& Presentation::coproduct(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = delta_cache_.find(m);
    if (it != delta_cache_.end()) return it->second;
  }
  TensorTerms<2> result;
  const auto parts = decompose(m);
  if (parts.empty()) {
    result.emplace(TensorKey<2>{kOne, kOne}, Cyclotomic(1L));
  } else {
    const Atom& last = atoms_[static_cast<std::size_t>(parts.back().first)];
    Monomial prefix = m;
    for (std::size_t k = 0; k < 3; ++k) prefix.e[k] -= last.mono.e[k];
    result = multiply<2>(coproduct(prefix), last.delta);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return delta_cache_.emplace(m, std::move(result)).first->second;
}

Cyclotomic Presentation::counit(const Monomial& m) const {
  Cyclotomic r(1L);
  for (const auto& [atom, p] : decompose(m)) r *= atoms_[static_cast<std::size_t>(atom)].eps.pow(p);
  return r;
}

const Terms& Presentation::antipode(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = antipode_cache_.find(m);
    if (it != antipode_cache_.end()) return it->second;
  }
  Terms result;
  const auto parts = decompose(m);
  if (parts.empty()) {
    result.emplace(kOne, Cyclotomic(1L));
  } else {
    const Atom& last = atoms_[static_cast<std::size_t>(parts.back().first)];
    Monomial prefix = m;
    for (std::size_t k = 0; k < 3; ++k) prefix.e[k] -= last.mono.e[k];
    result = multiply(last.antipode, antipode(prefix));
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return antipode_cache_.emplace(m, std::move(result)).first->second;
}

PresentationPtr Presentation::mutated(const std::string& atom, const std::string& label,
                                      std::optional<TensorTerms<2>> delta, std::optional<Cyclotomic> eps,
                                      std::optional<Terms> antipode) const {
  std::shared_ptr<Presentation> p(new Presentation(*this));
  Atom& a = p->atoms_[static_cast<std::size_t>(atom_index(atom))];
  if (delta) a.delta = std::move(*delta);
  if (eps) a.eps = *eps;
  if (antipode) a.antipode = std::move(*antipode);
  p->mutation_ = mutation_.empty() ? label : mutation_ + "; " + label;
  return p;
}

}  // namespace primehopf
