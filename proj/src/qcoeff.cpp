#include "cp2q/qcoeff.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cp2q {

namespace {

// Dense integer polynomial helpers (index = exponent, constant term first).
using IntPoly = std::vector<Integer>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Polynomial part of a Laurent polynomial (shifted to constant term),
// scaled to a primitive integer polynomial with positive leading coefficient.
IntPoly to_primitive(const LaurentV& a) {
  Integer l = 1;
  for (const auto& c : a.dense()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly p;
  p.reserve(a.dense().size());
  for (const auto& c : a.dense()) {
    Integer t = l / c.get_den();
    p.push_back(t * c.get_num());
  }
  make_primitive(p);
  return p;
}

LaurentV from_int(const IntPoly& p, int low = 0) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return LaurentV::from_dense(low, std::move(c));
}

// Pseudo-remainder of a by b (deg a >= deg b).
IntPoly prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    trim_int(a);
  }
  return a;
}

// Exact division over Z; empty optional if b does not divide a.
bool int_divides(const IntPoly& b, IntPoly a) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
    Integer f = a.back() / lb;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim_int(a);
  }
  return a.empty();
}

Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& c : p)
    if (abs(c) > m) m = abs(c);
  return m;
}

// Heuristic gcd (evaluation at a large integer and xi-adic reconstruction);
// returns empty when it gives up.
IntPoly heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    auto eval = [&](const IntPoly& p) {
      Integer acc = 0;
      for (std::size_t i = p.size(); i-- > 0;) acc = acc * xi + p[i];
      return acc;
    };
    Integer ea = eval(a), eb = eval(b), g;
    mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    IntPoly h;
    Integer half = xi / 2;
    while (g != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      h.push_back(r);
      g = (g - r) / xi;
    }
    trim_int(h);
    if (!h.empty()) {
      make_primitive(h);
      if (int_divides(h, a) && int_divides(h, b)) return h;
    }
    xi = xi * 73794 / 27011 + 1;
  }
  return {};
}

IntPoly int_gcd(IntPoly a, IntPoly b) {
  if (a.size() > 1 && b.size() > 1) {
    IntPoly h = heuristic_gcd(a, b);
    if (!h.empty()) return h;
  }
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return IntPoly{1};
    IntPoly r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// Quotient over Q of polynomial parts; both constant-term aligned.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                    const std::vector<Rational>& b) {
  std::vector<Rational> q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const Rational& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = a[k + b.size() - 1] / lb;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
  }
  a.resize(b.size() - 1);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {q, a};
}

int sign_at_half(const LaurentV& p) {
  Rational v = p.evaluate(Rational(1, 2));
  return sgn(v);
}

// n = f^2 * k with k square-free (trial division for small primes,
// perfect-square test on the cofactor).
void split_square(Integer n, Integer& f, Integer& k) {
  f = 1;
  k = 1;
  for (unsigned long p = 2; p < 100000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        f *= p;
      } else {
        k *= p;
      }
    }
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      f *= r;
    } else {
      k *= n;
    }
  }
}

// sqrt(x) = multiplier * sqrt(radicand) with a canonical radicand.
std::pair<RatV, LaurentV> canonical_sqrt(const RatV& x) {
  if (x.is_zero()) return {RatV(), LaurentV(1)};
  LaurentV p = x.num() * x.den();
  const int e = p.low();
  LaurentV p0 = p.shifted(-e);
  if (sign_at_half(p0) <= 0) throw std::domain_error("sqrt of a radicand that is not positive on (0,1)");
  RatV mult = RatV(1) / RatV(x.den());
  const int half = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  const int parity = e - 2 * half;
  mult *= RatV::vpow(half);

  Rational c;
  LaurentV square_part(1);
  LaurentV free_part(1);
  if (p0.is_constant()) {
    c = p0.coeff(0);
  } else {
    auto factors = squarefree_decomposition(p0);
    LaurentV prod(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::size_t mult_i = i + 1;
      LaurentV pw(1);
      for (std::size_t r = 0; r < mult_i / 2; ++r) pw *= factors[i];
      square_part *= pw;
      if (mult_i % 2 == 1) free_part *= factors[i];
      for (std::size_t r = 0; r < mult_i; ++r) prod *= factors[i];
    }
    // p0 = c * prod; read c from leading coefficients.
    c = p0.leading() / prod.leading();
  }
  if (c <= 0) throw std::domain_error("sqrt of a non-positive constant");
  Integer a = c.get_num(), b = c.get_den();
  Integer f, k;
  split_square(a * b, f, k);
  mult *= RatV(Rational(f, b));
  mult *= RatV(square_part);
  LaurentV radicand = free_part.shifted(parity) * Rational(k);
  // Center the radicand (low + high in [-1, 2]) so palindromic factors such
  // as q-integers stay in their familiar symmetric form.
  const int s = radicand.low() + radicand.high();
  const int shift = -static_cast<int>(std::floor((s + 1) / 4.0));
  radicand = radicand.shifted(2 * shift);
  mult *= RatV::vpow(-shift);
  return {mult, radicand};
}

}  // namespace

// ---- LaurentV --------------------------------------------------------------

LaurentV::LaurentV(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentV::LaurentV(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentV LaurentV::monomial(int exponent, const Rational& c) {
  LaurentV r;
  if (c != 0) {
    r.low_ = exponent;
    r.coeffs_.push_back(c);
  }
  return r;
}

LaurentV LaurentV::from_dense(int low, std::vector<Rational> c) {
  LaurentV r;
  r.low_ = low;
  r.coeffs_ = std::move(c);
  r.trim();
  return r;
}

void LaurentV::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentV::is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

Rational LaurentV::coeff(int exponent) const {
  if (is_zero() || exponent < low() || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentV::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

LaurentV LaurentV::shifted(int k) const {
  LaurentV r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentV LaurentV::operator-() const {
  LaurentV r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentV& LaurentV::operator+=(const LaurentV& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low(), o.low());
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& o) { return *this += -o; }

LaurentV operator*(const LaurentV& a, const LaurentV& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentV::from_dense(a.low_ + b.low_, std::move(c));
}

LaurentV& LaurentV::operator*=(const LaurentV& o) { return *this = *this * o; }

LaurentV& LaurentV::operator*=(const Rational& r) {
  if (r == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= r;
  return *this;
}

std::strong_ordering operator<=>(const LaurentV& a, const LaurentV& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  if (a.low_ != b.low_) return a.low_ <=> b.low_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

LaurentV LaurentV::inverted_variable() const {
  std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
  return from_dense(-high(), std::move(c));
}

Rational LaurentV::evaluate(const Rational& v0) const {
  if (is_zero()) return 0;
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v0 + coeffs_[i];
  Rational p = 1;
  Rational base = low_ >= 0 ? v0 : Rational(1) / v0;
  for (int i = 0; i < std::abs(low_); ++i) p *= base;
  return acc * p;
}

std::string LaurentV::encode() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << (low_ + static_cast<int>(i)) << ':' << coeffs_[i].get_str();
  }
  return os.str();
}

LaurentV LaurentV::decode(const std::string& text) {
  if (text == "0") return {};
  LaurentV r;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad Laurent encoding: " + text);
    int e = std::stoi(item.substr(0, colon));
    Rational c(item.substr(colon + 1));
    c.canonicalize();
    r += monomial(e, c);
  }
  return r;
}

// ---- polynomial helpers ----------------------------------------------------

LaurentV poly_gcd(const LaurentV& a, const LaurentV& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return poly_gcd(b, b);
  if (b.is_zero()) return poly_gcd(a, a);
  IntPoly g = int_gcd(to_primitive(a.shifted(-a.low())), to_primitive(b.shifted(-b.low())));
  LaurentV r = from_int(g);
  return r * (Rational(1) / r.leading());
}

LaurentV poly_div_exact(const LaurentV& a, const LaurentV& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  auto [q, r] = poly_divmod(a.dense(), b.dense());
  if (!r.empty()) throw std::domain_error("inexact polynomial division");
  return LaurentV::from_dense(a.low() - b.low(), std::move(q));
}

std::vector<LaurentV> squarefree_decomposition(const LaurentV& p_in) {
  // Yun's algorithm on the primitive integral polynomial part.
  LaurentV p = from_int(to_primitive(p_in.shifted(-p_in.low())));
  std::vector<LaurentV> out;
  if (p.is_constant()) return out;
  auto derivative = [](const LaurentV& f) {
    std::vector<Rational> c;
    for (int e = std::max(1, f.low()); e <= f.high(); ++e) c.push_back(f.coeff(e) * e);
    return LaurentV::from_dense(std::max(1, f.low()) - 1, std::move(c));
  };
  LaurentV dp = derivative(p);
  LaurentV a = poly_gcd(p, dp);
  LaurentV b = poly_div_exact(p, a);
  LaurentV c = poly_div_exact(dp, a);
  LaurentV d = c - derivative(b);
  while (!b.is_constant()) {
    LaurentV g = poly_gcd(b, d);
    out.push_back(g);
    b = poly_div_exact(b, g);
    c = poly_div_exact(d, g);
    d = c - derivative(b);
  }
  for (auto& f : out) {
    f = from_int(to_primitive(f));
    if (f.is_constant()) {
      f = LaurentV(1);
      continue;
    }
    if (sign_at_half(f) < 0) f = -f;
  }
  while (!out.empty() && out.back().is_one()) out.pop_back();
  return out;
}

// ---- RatV ------------------------------------------------------------------

RatV::RatV(LaurentV n, LaurentV d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("RatV with zero denominator");
  canonicalize();
}

void RatV::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentV(1);
    return;
  }
  if (den_.is_monomial()) {
    Rational inv = Rational(1) / den_.leading();
    num_ = num_.shifted(-den_.low()) * inv;
    den_ = LaurentV(1);
    return;
  }
  num_ = num_.shifted(-den_.low());
  den_ = den_.shifted(-den_.low());
  LaurentV g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
  if (den_.is_monomial()) {
    canonicalize();
    return;
  }
  Rational inv = Rational(1) / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

RatV RatV::operator-() const {
  RatV r = *this;
  r.num_ = -r.num_;
  return r;
}

RatV& RatV::operator+=(const RatV& o) {
  if (o.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  LaurentV g = poly_gcd(den_, o.den_);
  LaurentV d1 = poly_div_exact(den_, g);
  LaurentV d2 = poly_div_exact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  canonicalize();
  return *this;
}

RatV& RatV::operator-=(const RatV& o) { return *this += -o; }

RatV& RatV::operator*=(const RatV& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatV();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentV a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_one()) {
    LaurentV g = poly_gcd(a, d);
    if (!g.is_constant()) {
      a = poly_div_exact(a, g);
      d = poly_div_exact(d, g);
    }
  }
  if (!b.is_one()) {
    LaurentV g = poly_gcd(c, b);
    if (!g.is_constant()) {
      c = poly_div_exact(c, g);
      b = poly_div_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  canonicalize();
  return *this;
}

RatV RatV::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatV(den_, num_);
}

RatV& RatV::operator/=(const RatV& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const RatV& a, const RatV& b) {
  if (auto c = a.num_ <=> b.num_; c != 0) return c;
  return a.den_ <=> b.den_;
}

RatV RatV::inverted_variable() const { return RatV(num_.inverted_variable(), den_.inverted_variable()); }

Rational RatV::evaluate(const Rational& v0) const {
  Rational d = den_.evaluate(v0);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(v0) / d;
}

std::string RatV::encode() const {
  if (den_.is_one()) return num_.encode();
  return num_.encode() + ";" + den_.encode();
}

RatV RatV::decode(const std::string& text) {
  auto pos = text.find(';');
  if (pos == std::string::npos) return RatV(LaurentV::decode(text));
  return RatV(LaurentV::decode(text.substr(0, pos)), LaurentV::decode(text.substr(pos + 1)));
}

// ---- Radical ---------------------------------------------------------------

Radical::Radical(const RatV& r) {
  if (!r.is_zero()) terms_.emplace(LaurentV(1), r);
}

bool Radical::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

RatV Radical::as_rational() const {
  if (!is_rational()) throw std::domain_error("radical expression is not rational");
  return terms_.empty() ? RatV() : terms_.begin()->second;
}

Radical Radical::sqrt_factored(const std::vector<SqrtFactor>& factors) {
  RatV prod(1);
  for (const auto& f : factors) {
    RatV base;
    switch (f.kind) {
      case SqrtFactor::Kind::QInt:
        if (f.index < 0) throw std::invalid_argument("negative q-integer index in radicand");
        base = q_int(f.index);
        break;
      case SqrtFactor::Kind::QFactorial:
        base = q_factorial(f.index);
        break;
      case SqrtFactor::Kind::Rational:
        if (f.value <= 0) throw std::invalid_argument("non-positive rational factor in radicand");
        base = RatV(f.value);
        break;
      case SqrtFactor::Kind::VPower:
        base = RatV::vpow(static_cast<int>(f.index));
        break;
    }
    if (base.is_zero()) {
      if (f.multiplicity < 0) throw std::domain_error("zero factor in the denominator of a radicand");
      if (f.multiplicity > 0) return {};
      continue;
    }
    const int m = std::abs(f.multiplicity);
    RatV p(1);
    for (int i = 0; i < m; ++i) p *= base;
    prod = f.multiplicity >= 0 ? prod * p : prod / p;
  }
  auto [mult, radicand] = canonical_sqrt(prod);
  Radical r;
  if (!mult.is_zero()) r.terms_.emplace(std::move(radicand), std::move(mult));
  return r;
}

Radical Radical::operator-() const {
  Radical r = *this;
  for (auto& [k, m] : r.terms_) m = -m;
  return r;
}

Radical& Radical::operator+=(const Radical& o) {
  for (const auto& [rad, m] : o.terms_) {
    auto it = terms_.find(rad);
    if (it == terms_.end()) {
      terms_.emplace(rad, m);
    } else {
      it->second += m;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Radical& Radical::operator-=(const Radical& o) { return *this += -o; }

Radical& Radical::operator*=(const RatV& r) {
  if (r.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, m] : terms_) m *= r;
  return *this;
}

Radical& Radical::operator*=(const Radical& o) {
  if (o.is_rational()) return *this *= o.as_rational();
  if (is_rational()) {
    RatV s = as_rational();
    *this = o;
    return *this *= s;
  }
  Radical out;
  for (const auto& [r1, m1] : terms_) {
    for (const auto& [r2, m2] : o.terms_) {
      RatV m = m1 * m2;
      if (r1.is_one() || r2.is_one()) {
        out += [&] {
          Radical t;
          t.terms_.emplace(r1.is_one() ? r2 : r1, m);
          return t;
        }();
        continue;
      }
      auto [mult, radicand] = canonical_sqrt(RatV(r1 * r2));
      Radical t;
      t.terms_.emplace(std::move(radicand), m * mult);
      out += t;
    }
  }
  return *this = std::move(out);
}

Radical& Radical::operator/=(const Radical& o) {
  if (o.is_zero()) throw std::domain_error("division by zero radical");
  if (o.is_rational()) return *this *= o.as_rational().inverse();
  if (o.terms_.size() != 1) throw std::domain_error("division by a sum of unlike radicals is unsupported");
  const auto& [rad, m] = *o.terms_.begin();
  Radical s;
  s.terms_.emplace(rad, (m * RatV(rad)).inverse());
  return *this *= s;
}

double Radical::evaluate(const Rational& q0) const { return eval_numeric(*this, q0); }

// ---- q-combinatorics -------------------------------------------------------

RatV q_int(long z) {
  if (z == 0) return {};
  if (z < 0) return -q_int(-z);
  std::vector<Rational> c(static_cast<std::size_t>(8 * (z - 1) + 1), Rational(0));
  for (long k = 0; k < z; ++k) c[static_cast<std::size_t>(8 * k)] = 1;
  return RatV(LaurentV::from_dense(static_cast<int>(-4 * (z - 1)), std::move(c)));
}

RatV q_int_quarter(long four_z) {
  if (four_z % 4 == 0) return q_int(four_z / 4);
  LaurentV num = LaurentV::monomial(static_cast<int>(four_z)) - LaurentV::monomial(static_cast<int>(-four_z));
  LaurentV den = LaurentV::monomial(4) - LaurentV::monomial(-4);
  return RatV(num, den);
}

RatV q_factorial(long n) {
  if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
  RatV r(1);
  for (long k = 2; k <= n; ++k) r *= q_int(k);
  return r;
}

RatV q_binomial(long n, long m) {
  if (m < 0 || m > n) throw std::invalid_argument("q_binomial index out of range");
  return q_factorial(n) / (q_factorial(m) * q_factorial(n - m));
}

RatV q_trinomial(long j, long k, long l) {
  if (j < 0 || k < 0 || l < 0) throw std::invalid_argument("q_trinomial of a negative integer");
  return qpow(-(j * k + k * l + l * j)) * q_factorial(j + k + l) / (q_factorial(j) * q_factorial(k) * q_factorial(l));
}

// ---- numerics --------------------------------------------------------------

namespace {

constexpr unsigned kPrecisionBits = 256;

mpf_class v_at(const Rational& q0) {
  if (q0 <= 0 || q0 >= 1) throw std::domain_error("evaluation point q0 must lie in (0,1)");
  mpf_class q(q0, kPrecisionBits);
  mpf_class s(0, kPrecisionBits);
  mpf_sqrt(s.get_mpf_t(), q.get_mpf_t());
  mpf_sqrt(s.get_mpf_t(), s.get_mpf_t());
  return s;
}

mpf_class eval_mpf(const LaurentV& x, const mpf_class& v) {
  mpf_class acc(0, kPrecisionBits);
  if (x.is_zero()) return acc;
  const auto& c = x.dense();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= v;
    acc += mpf_class(c[i], kPrecisionBits);
  }
  mpf_class p(1, kPrecisionBits);
  mpf_pow_ui(p.get_mpf_t(), v.get_mpf_t(), static_cast<unsigned long>(std::abs(x.low())));
  if (x.low() >= 0) return acc * p;
  return acc / p;
}

mpf_class eval_mpf(const RatV& x, const mpf_class& v) {
  mpf_class d = eval_mpf(x.den(), v);
  if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
  return eval_mpf(x.num(), v) / d;
}

}  // namespace

double eval_numeric(const LaurentV& x, const Rational& q0) { return eval_mpf(x, v_at(q0)).get_d(); }

double eval_numeric(const RatV& x, const Rational& q0) { return eval_mpf(x, v_at(q0)).get_d(); }

double eval_numeric(const Radical& x, const Rational& q0) {
  mpf_class v = v_at(q0);
  mpf_class acc(0, kPrecisionBits);
  for (const auto& [rad, m] : x.terms()) {
    mpf_class r = eval_mpf(rad, v);
    if (r <= 0) throw std::domain_error("radicand not positive at evaluation point");
    mpf_class s(0, kPrecisionBits);
    mpf_sqrt(s.get_mpf_t(), r.get_mpf_t());
    acc += eval_mpf(m, v) * s;
  }
  return acc.get_d();
}

// ---- formatting ------------------------------------------------------------

namespace {

std::string qpow_text(int e) {
  if (e == 0) return "";
  if (e % 4 == 0) {
    int k = e / 4;
    return k == 1 ? "q" : "q^" + std::to_string(k);
  }
  int g = std::gcd(std::abs(e), 4);
  return "q^(" + std::to_string(e / g) + "/" + std::to_string(4 / g) + ")";
}

bool multi_term(const std::string& s) {
  return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos || s.find('/') != std::string::npos;
}

}  // namespace

std::string to_string(const LaurentV& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = x.high(); e >= x.low(); --e) {
    Rational c = x.coeff(e);
    if (c == 0) continue;
    std::string mono = qpow_text(e);
    bool neg = c < 0;
    Rational a = abs(c);
    std::string term;
    if (mono.empty())
      term = a.get_str();
    else if (a == 1)
      term = mono;
    else
      term = a.get_str() + " " + mono;
    if (first) {
      out = neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out;
}

std::string to_string(const RatV& x) {
  if (x.is_laurent()) return to_string(x.num());
  std::string n = to_string(x.num());
  std::string d = to_string(x.den());
  if (multi_term(n) || n.find(' ') != std::string::npos) n = "(" + n + ")";
  if (multi_term(d) || d.find(' ') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::string to_factor_string(const RatV& x) {
  std::string s = to_string(x);
  if (multi_term(s) && !(s.front() == '(' && s.back() == ')' && s.find(")/(") == std::string::npos && s.find(")/") == std::string::npos))
    return "(" + s + ")";
  return s;
}

std::string to_string(const Radical& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [rad, m] : x.terms()) {
    std::string term;
    if (rad.is_one()) {
      term = to_string(m);
    } else {
      std::string ms = m.is_one() ? "" : to_factor_string(m) + " ";
      term = ms + "sqrt(" + to_string(rad) + ")";
    }
    if (first) {
      out = term;
      first = false;
    } else {
      out += term.front() == '-' ? " - " + term.substr(1) : " + " + term;
    }
  }
  return out;
}

std::string to_factor_string(const Radical& x) {
  if (x.is_rational()) return to_factor_string(x.as_rational());
  if (x.term_count() == 1) return to_string(x);
  return "(" + to_string(x) + ")";
}

}  // namespace cp2q
