#include "primehopf/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace primehopf {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

int totient(int n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  return quot;
}

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Polynomial division over Q; returns quotient, replaces a by the remainder.
Poly poly_divmod(Poly& a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    const mpq_class c = a[k] / lead;
    q[k - (b.size() - 1)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
  }
  trim(a);
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly;
  if (n == 1) {
    poly = {-1, 1};
  } else {
    poly = compute_cyclotomic(n);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1, mpq_class(0)) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_(1, mpq_class(value)) {}

Cyclotomic::Cyclotomic(const mpq_class& value) : conductor_(1), coeffs_(1, value) {}

Cyclotomic::Cyclotomic(int conductor, std::vector<mpq_class> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

void Cyclotomic::reduce_from(Poly poly) {
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k] == 0) continue;
    const mpq_class c = poly[k];
    for (std::size_t i = 0; i < d; ++i) {
      if (phi[i] != 0) poly[k - d + i] -= c * phi[i];
    }
    poly[k] = 0;
  }
  poly.resize(d);
  for (auto& c : poly) c.canonicalize();
  coeffs_ = std::move(poly);
}

Cyclotomic Cyclotomic::from_powers(int conductor, const std::vector<mpq_class>& coeffs) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  Poly poly(static_cast<std::size_t>(conductor), mpq_class(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    poly[k % static_cast<std::size_t>(conductor)] += coeffs[k];
  }
  Cyclotomic r(conductor, {});
  r.reduce_from(std::move(poly));
  return r;
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long k) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  Poly poly(static_cast<std::size_t>(conductor), mpq_class(0));
  poly[static_cast<std::size_t>(mod_floor(k, conductor))] = 1;
  Cyclotomic r(conductor, {});
  r.reduce_from(std::move(poly));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

std::optional<mpq_class> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(int target) const {
  if (target == conductor_) return *this;
  if (target < 1 || target % conductor_ != 0) {
    throw std::invalid_argument("lift: target conductor must be a multiple of the conductor");
  }
  if (is_rational()) {
    Cyclotomic r(target, Poly(static_cast<std::size_t>(totient(target)), mpq_class(0)));
    r.coeffs_[0] = coeffs_[0];
    return r;
  }
  const std::size_t step = static_cast<std::size_t>(target / conductor_);
  Poly poly(static_cast<std::size_t>(target), mpq_class(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
  Cyclotomic r(target, {});
  r.reduce_from(std::move(poly));
  return r;
}

namespace {

int common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
  return static_cast<int>(lcm_long(a.conductor(), b.conductor()));
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.conductor_ == conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  if (rhs.conductor_ == 1) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  const int l = common_conductor(*this, rhs);
  *this = lift(l);
  const Cyclotomic other = rhs.lift(l);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (rhs.conductor_ == 1) {
    Cyclotomic r = lhs;
    for (auto& c : r.coeffs_) c *= rhs.coeffs_[0];
    return r;
  }
  if (lhs.conductor_ == 1) {
    Cyclotomic r = rhs;
    for (auto& c : r.coeffs_) c *= lhs.coeffs_[0];
    return r;
  }
  if (lhs.conductor_ != rhs.conductor_) {
    const int l = common_conductor(lhs, rhs);
    return lhs.lift(l) * rhs.lift(l);
  }
  Cyclotomic r(lhs.conductor_, {});
  r.reduce_from(poly_mul(lhs.coeffs_, rhs.coeffs_));
  return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0;
  Poly s1{mpq_class(1)};
  while (!r1.empty()) {
    Poly rem = r0;
    const Poly q = poly_divmod(rem, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  const mpq_class scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  Cyclotomic r(conductor_, {});
  r.reduce_from(std::move(s0));
  return r;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  *this = *this * rhs.inverse();
  return *this;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1L);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const int l = common_conductor(a, b);
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      const std::string zeta = "z(" + std::to_string(conductor_) + ")^" + std::to_string(k);
      if (c == 1) {
        term = zeta;
      } else if (c == -1) {
        term = "-" + zeta;
      } else {
        term = c.get_str() + " * " + zeta;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Cyclotomic parse_all() {
    Cyclotomic v = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long parse_integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Cyclotomic parse_sum() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Cyclotomic total = parse_product();
    if (negative) total = -total;
    for (;;) {
      if (accept('+')) {
        total += parse_product();
      } else if (accept('-')) {
        total -= parse_product();
      } else {
        return total;
      }
    }
  }

  Cyclotomic parse_product() {
    Cyclotomic v = parse_factor();
    while (accept('*')) v *= parse_factor();
    return v;
  }

  Cyclotomic parse_factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Cyclotomic v = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('-')) return -parse_factor();
    if (text_[pos_] == 'z') {
      ++pos_;
      if (!accept('(')) fail("expected '(' after z");
      const long n = parse_integer();
      if (n < 1) fail("conductor must be positive");
      if (!accept(')')) fail("expected ')'");
      long k = 1;
      if (accept('^')) {
        bool neg = accept('-');
        k = parse_integer();
        if (neg) k = -k;
      }
      return Cyclotomic::zeta_power(static_cast<int>(n), k);
    }
    const long num = parse_integer();
    if (accept('/')) {
      const long den = parse_integer();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Cyclotomic(q);
    }
    return Cyclotomic(num);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

Cyclotomic primitive_root(int n) {
  if (n < 1) throw std::invalid_argument("primitive_root: n must be positive");
  return Cyclotomic::zeta_power(n, 1);
}

std::optional<long> multiplicative_order(const Cyclotomic& s) {
  if (s.is_zero()) throw std::domain_error("multiplicative_order of zero");
  const long cap = 2L * s.conductor();
  Cyclotomic power = s;
  for (long m = 1; m <= cap; ++m) {
    if (power.is_one()) return m;
    power *= s;
  }
  return std::nullopt;
}

Cyclotomic qbinom(int n, int s, const Cyclotomic& q) {
  if (n < 0 || s < 0) throw std::invalid_argument("qbinom: arguments must be non-negative");
  if (s > n) throw std::invalid_argument("qbinom: s > n");
  std::vector<Cyclotomic> qpow(static_cast<std::size_t>(s) + 1);
  qpow[0] = Cyclotomic(1L);
  for (int j = 1; j <= s; ++j) qpow[static_cast<std::size_t>(j)] = qpow[static_cast<std::size_t>(j) - 1] * q;
  // row[j] holds [i choose j]_q for the current i.
  std::vector<Cyclotomic> row(static_cast<std::size_t>(s) + 1, Cyclotomic());
  row[0] = Cyclotomic(1L);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, s); j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      row[uj] = row[uj - 1] + qpow[uj] * row[uj];
    }
  }
  return row[static_cast<std::size_t>(s)];
}

}  // namespace primehopf
