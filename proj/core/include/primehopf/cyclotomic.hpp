#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as its coordinate vector in the power basis
// 1, z, ..., z^{phi(N)-1}, reduced modulo the N-th cyclotomic polynomial.
// Binary operations on elements of different conductors embed both operands
// in Q(zeta_L), L = lcm of the conductors, via zeta_N -> zeta_L^{L/N}.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace primehopf {

/// Euler's totient.
int totient(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

class Cyclotomic {
 public:
  /// Zero of Q.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const mpq_class& value);

  /// Builds sum_k coeffs[k] * zeta_N^k; any length is accepted and reduced.
  static Cyclotomic from_powers(int conductor, const std::vector<mpq_class>& coeffs);

  /// zeta_N^k for arbitrary integer k.
  static Cyclotomic zeta_power(int conductor, long k);

  int conductor() const { return conductor_; }
  /// Power-basis coordinates, length phi(conductor).
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value as a rational, if the element lies in Q.
  std::optional<mpq_class> as_rational() const;

  /// Image in Q(zeta_L); L must be a multiple of conductor().
  Cyclotomic lift(int target_conductor) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend Cyclotomic operator/(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs /= rhs; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Cyclotomic pow(long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// "a/b * z(N)^k + ..." form; "0" for zero.
  std::string str() const;
  /// Parses sums of products of rationals and z(N)^k (negative k allowed),
  /// with parentheses.  Throws std::invalid_argument on malformed text.
  static Cyclotomic parse(std::string_view text);

 private:
  Cyclotomic(int conductor, std::vector<mpq_class> coeffs);
  void reduce_from(std::vector<mpq_class> poly);

  int conductor_ = 1;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

/// The canonical primitive n-th root of unity zeta_n = z(n)^1.
Cyclotomic primitive_root(int n);

/// Least m >= 1 with s^m = 1, searching m <= 2 * conductor; std::nullopt when
/// s is not a root of unity.  Throws std::domain_error for s = 0.
std::optional<long> multiplicative_order(const Cyclotomic& s);

/// Gaussian binomial coefficient [n choose s]_q by the q-Pascal recurrence
/// [n, s] = [n-1, s-1] + q^s [n-1, s].  Throws std::invalid_argument when
/// s > n or either argument is negative.
Cyclotomic qbinom(int n, int s, const Cyclotomic& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
/// Non-negative remainder.
long mod_floor(long a, long m);

}  // namespace primehopf
