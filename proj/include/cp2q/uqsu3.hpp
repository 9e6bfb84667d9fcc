// U_q(su(3)): generator words, the involutions theta and *, and exact
// matrices of the irreducible representations V(n1, n2).
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cp2q/qcoeff.hpp"

namespace cp2q {

enum class UqGen : char8_t { E1, E2, F1, F2, K1, K2, K1i, K2i };

using UqWord = std::u8string;  // letters are UqGen values

/// Linear combination of generator words. Adjacent K_i K_i^-1 cancel.
class UqElement {
 public:
  UqElement() = default;
  UqElement(const Radical& c);  // NOLINT(google-explicit-constructor)
  static UqElement gen(UqGen g);
  static UqElement word(UqWord w, const Radical& c = Radical(1));

  const std::map<UqWord, Radical>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UqElement& operator+=(const UqElement& o);
  UqElement& operator-=(const UqElement& o);
  UqElement& operator*=(const Radical& c);
  friend UqElement operator+(UqElement a, const UqElement& b) { return a += b; }
  friend UqElement operator-(UqElement a, const UqElement& b) { return a -= b; }
  friend UqElement operator*(UqElement a, const Radical& c) { return a *= c; }
  friend UqElement operator*(const UqElement& a, const UqElement& b);
  friend bool operator==(const UqElement& a, const UqElement& b) = default;

  /// Word power h^n (n >= 0).
  UqElement pow(int n) const;

 private:
  void add_term(UqWord w, const Radical& c);
  std::map<UqWord, Radical> terms_;
};

/// Canonicalize a word: cancel adjacent K_i K_i^-1 pairs.
UqWord cancel_k(const UqWord& w);

std::string gen_name(UqGen g);
UqGen parse_gen(const std::string& name);  // E1 E2 F1 F2 K1 K2 K1i K2i
UqElement parse_uq_word(const std::string& text);  // e.g. "F2 F1" or "K1 K2 K2"
std::string to_string(const UqElement& h);

/// theta(K)=K, theta(E)=F, theta(F)=E, extended anti-multiplicatively.
UqElement theta(const UqElement& h);
/// E* = F, F* = E, K* = K; anti-linear (q real) and anti-multiplicative.
UqElement star_uq(const UqElement& h);
/// [a, b]_q = ab - q^-1 ba
UqElement q_commutator(const UqElement& a, const UqElement& b);

// ---- representations -------------------------------------------------------

/// Basis label |n1, n2, j1, j2, m> with m stored doubled.
struct WeightLabel {
  int n1 = 0, n2 = 0, j1 = 0, j2 = 0, m2 = 0;
  auto operator<=>(const WeightLabel&) const = default;
  bool valid() const;
  std::string str() const;
};

/// Labels in lexicographic order of (j1, j2, 2m).
std::vector<WeightLabel> rep_basis(int n1, int n2);
int rep_dimension(int n1, int n2);  // (n1+1)(n2+1)(n1+n2+2)/2

/// Image of a basis vector under one generator.
std::vector<std::pair<WeightLabel, Radical>> act_generator(UqGen g, const WeightLabel& label);

/// Sparse square matrix on rep_basis(n1, n2); entry (target, source).
class RepMatrix {
 public:
  RepMatrix() = default;
  RepMatrix(int n1, int n2);
  static RepMatrix of(UqGen g, int n1, int n2);
  static RepMatrix identity(int n1, int n2);
  static RepMatrix of(const UqElement& h, int n1, int n2);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<WeightLabel>& basis() const { return basis_; }
  std::size_t index(const WeightLabel& l) const;
  const std::map<std::pair<std::size_t, std::size_t>, Radical>& entries() const { return entries_; }
  Radical get(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Radical& x);

  RepMatrix transpose() const;
  RepMatrix& operator+=(const RepMatrix& o);
  RepMatrix& operator*=(const Radical& s);
  friend RepMatrix operator+(RepMatrix a, const RepMatrix& b) { return a += b; }
  friend RepMatrix operator-(RepMatrix a, RepMatrix b) {
    b *= Radical(-1);
    return a += b;
  }
  friend RepMatrix operator*(RepMatrix a, const Radical& s) { return a *= s; }
  friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
  bool is_zero() const { return entries_.empty(); }

 private:
  int n1_ = 0, n2_ = 0;
  std::vector<WeightLabel> basis_;
  std::map<std::pair<std::size_t, std::size_t>, Radical> entries_;
};

struct RelationCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // first nonzero entry of (lhs - rhs) when failing
};

/// Every defining relation of U_q(su(3)) on V(n1, n2), exactly.
std::vector<RelationCheck> verify_relations(int n1, int n2);

}  // namespace cp2q
