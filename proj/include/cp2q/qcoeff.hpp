// Exact coefficient arithmetic in the base variable v = q^(1/4).
//
// LaurentV  - Laurent polynomials in v with rational coefficients.
// RatV      - reduced quotients of Laurent polynomials (the rational
//             function field Q(v)).
// Radical   - finite sums  sum_r  m_r * sqrt(r)  with canonical
//             square-free radicands r and RatV multipliers m_r.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cp2q {

using Rational = mpq_class;
using Integer = mpz_class;

class LaurentV {
 public:
  LaurentV() = default;
  LaurentV(long c);  // NOLINT(google-explicit-constructor)
  LaurentV(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentV monomial(int exponent, const Rational& c = 1);
  /// Dense constructor; c[i] is the coefficient of v^(low + i).
  static LaurentV from_dense(int low, std::vector<Rational> c);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Lowest / highest exponent carried; undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return is_zero() ? -1 : high() - low(); }
  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  const std::vector<Rational>& dense() const { return coeffs_; }
  std::size_t term_count() const;

  LaurentV shifted(int k) const;  // multiply by v^k
  LaurentV operator-() const;
  LaurentV& operator+=(const LaurentV& o);
  LaurentV& operator-=(const LaurentV& o);
  LaurentV& operator*=(const LaurentV& o);
  LaurentV& operator*=(const Rational& r);
  friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
  friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }
  friend LaurentV operator*(const LaurentV& a, const LaurentV& b);
  friend LaurentV operator*(LaurentV a, const Rational& r) { return a *= r; }

  friend bool operator==(const LaurentV& a, const LaurentV& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order used for map keys; not an algebraic order.
  friend std::strong_ordering operator<=>(const LaurentV& a, const LaurentV& b);

  /// Substitute v -> 1/v.
  LaurentV inverted_variable() const;
  Rational evaluate(const Rational& v0) const;

  /// Canonical text form "e:c,e:c,..." ("0" for zero); used by caches.
  std::string encode() const;
  static LaurentV decode(const std::string& text);

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Element of Q(v) in lowest terms: numerator / denominator with the
/// denominator a polynomial in v with nonzero constant term and leading
/// coefficient 1.
class RatV {
 public:
  RatV() = default;
  RatV(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatV(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatV(LaurentV n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  RatV(LaurentV n, LaurentV d);

  /// v^k
  static RatV vpow(int k) { return RatV(LaurentV::monomial(k)); }
  /// q^(k/4) = v^k; alias kept for readability at call sites.
  static RatV qpow_quarter(int k) { return vpow(k); }

  const LaurentV& num() const { return num_; }
  const LaurentV& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  /// Rough size used for pivot selection.
  int complexity() const { return num_.span() + den_.span() + 1; }

  RatV operator-() const;
  RatV& operator+=(const RatV& o);
  RatV& operator-=(const RatV& o);
  RatV& operator*=(const RatV& o);
  RatV& operator/=(const RatV& o);
  friend RatV operator+(RatV a, const RatV& b) { return a += b; }
  friend RatV operator-(RatV a, const RatV& b) { return a -= b; }
  friend RatV operator*(RatV a, const RatV& b) { return a *= b; }
  friend RatV operator/(RatV a, const RatV& b) { return a /= b; }
  RatV inverse() const;

  friend bool operator==(const RatV& a, const RatV& b) = default;
  friend std::strong_ordering operator<=>(const RatV& a, const RatV& b);

  RatV inverted_variable() const;
  Rational evaluate(const Rational& v0) const;

  std::string encode() const;
  static RatV decode(const std::string& text);

 private:
  void canonicalize();
  LaurentV num_;
  LaurentV den_{1};
};

/// One factor of a radicand in factored positive form.
struct SqrtFactor {
  enum class Kind { QInt, QFactorial, Rational, VPower };
  Kind kind;
  long index = 0;        // q-integer / factorial index, or v exponent
  Rational value = 1;    // for Kind::Rational
  int multiplicity = 1;  // may be negative (factor in the denominator)

  static SqrtFactor qint(long n, int mult = 1) { return {Kind::QInt, n, 1, mult}; }
  static SqrtFactor qfact(long n, int mult = 1) { return {Kind::QFactorial, n, 1, mult}; }
  static SqrtFactor rational(Rational r, int mult = 1) { return {Kind::Rational, 0, std::move(r), mult}; }
  static SqrtFactor vpower(long e, int mult = 1) { return {Kind::VPower, e, 1, mult}; }
};

class Radical {
 public:
  Radical() = default;
  Radical(long c) : Radical(RatV(c)) {}  // NOLINT(google-explicit-constructor)
  Radical(const RatV& r);  // NOLINT(google-explicit-constructor)

  /// sqrt of a product of positive factors; square parts are extracted.
  static Radical sqrt_factored(const std::vector<SqrtFactor>& factors);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The rational part (radicand 1); throws unless is_rational().
  RatV as_rational() const;
  const std::map<LaurentV, RatV>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Radical operator-() const;
  Radical& operator+=(const Radical& o);
  Radical& operator-=(const Radical& o);
  Radical& operator*=(const Radical& o);
  Radical& operator*=(const RatV& r);
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(Radical a, const Radical& b) { return a *= b; }
  friend Radical operator*(Radical a, const RatV& b) { return a *= b; }
  /// Division by a RatV or by a single-term Radical; sums of unlike
  /// radicals in the denominator are rejected.
  Radical& operator/=(const Radical& o);
  friend Radical operator/(Radical a, const Radical& b) { return a /= b; }

  friend bool operator==(const Radical& a, const Radical& b) = default;

  double evaluate(const Rational& q0) const;

 private:
  std::map<LaurentV, RatV> terms_;  // radicand -> multiplier, no zeros
};

// ---- q-combinatorics -------------------------------------------------------

/// [z] = (q^z - q^-z)/(q - q^-1)
RatV q_int(long z);
/// [z/4]: q-number at a quarter-integer argument (v^z - v^-z)/(v^4 - v^-4).
RatV q_int_quarter(long four_z);
RatV q_factorial(long n);
RatV q_binomial(long n, long m);
/// [j,k,l]! = q^-(jk+kl+lj) [j+k+l]! / ([j]![k]![l]!)
RatV q_trinomial(long j, long k, long l);
/// q^k for integer k, as a RatV.
inline RatV qpow(long k) { return RatV::vpow(static_cast<int>(4 * k)); }

// ---- numerics --------------------------------------------------------------

/// Evaluate at q = q0 in (0,1); computed in extended precision and
/// returned as double.
double eval_numeric(const RatV& x, const Rational& q0);
double eval_numeric(const Radical& x, const Rational& q0);
double eval_numeric(const LaurentV& x, const Rational& q0);

// ---- formatting ------------------------------------------------------------

/// Human readable form in powers of q, e.g. "q + q^-1", "q^(1/2)".
std::string to_string(const LaurentV& x);
std::string to_string(const RatV& x);
std::string to_string(const Radical& x);
/// Same as to_string, but wrapped in parentheses when it has several terms.
std::string to_factor_string(const RatV& x);
std::string to_factor_string(const Radical& x);

// ---- polynomial helpers exposed for tests ----------------------------------

/// Monic gcd of the polynomial parts (v-powers are units and ignored).
LaurentV poly_gcd(const LaurentV& a, const LaurentV& b);
/// Exact division; throws std::domain_error if b does not divide a.
LaurentV poly_div_exact(const LaurentV& a, const LaurentV& b);
/// Square-free decomposition (Yun): returns s_1, s_2, ... with
/// p = c * prod s_i^i, each s_i primitive integral and square-free.
std::vector<LaurentV> squarefree_decomposition(const LaurentV& p);

}  // namespace cp2q
