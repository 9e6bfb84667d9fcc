// Haar state of A(S^5_q) on polynomial slices, the modular automorphism
// sigma, and twisted Hochschild cochains with b_sigma and lambda_sigma.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "cp2q/qalgebras.hpp"

namespace cp2q {

/// (#z, #z^*) of an S^5_q word.
std::pair<int, int> bidegree(const Word& s5_word);

/// sigma(x) = K |> x <| K with K = (K1 K2)^-4. Diagonal on S^5_q words:
/// sigma(w) = v^sigma_exponent(w) w.
int sigma_exponent(const Word& s5_word);
PolyR sigma(const PolyR& x);

/// Values of the Haar state on the normal S^5_q words of bidegree <= (D, D).
/// Solved from h(g |> w) = 0 for g in {E1, E2, F1, F2}, h(w) = 0 for words of
/// nonzero left weight or nonzero line degree, and h(1) = 1. The constructor
/// throws std::runtime_error unless the invariant functionals on the slice
/// form a line.
class HaarTable {
 public:
  explicit HaarTable(int D);
  int degree() const { return D_; }
  const std::map<Word, RatV>& values() const { return values_; }
  std::size_t constraints() const { return constraints_; }
  /// h(x); throws std::domain_error if x leaves the slice.
  RatV operator()(const PolyR& x) const;

 private:
  int D_;
  std::size_t constraints_ = 0;
  std::map<Word, RatV> values_;
};

/// Shared table per D.
const HaarTable& haar_table(int D);
RatV haar_state(const PolyR& x, int D);

/// h(xy) == h(sigma(y) x), both reduced in S^5_q.
bool twisted_trace_check(const PolyR& x, const PolyR& y, int D);

/// h(a a^*) at q = q0, as a double, on the smallest slice holding a a^*.
double positivity_probe(const PolyR& a, const Rational& q0);

/// n-cochain on the truncated algebra: a function of n+1 normal words,
/// extended multilinearly. Arguments and every product formed by b_sigma
/// must stay within bidegree (bound, bound); otherwise std::domain_error.
class Cochain {
 public:
  using Fn = std::function<RatV(const std::vector<Word>&)>;
  Cochain(std::size_t arity, int bound, Fn on_words);
  std::size_t arity() const { return arity_; }
  int bound() const { return bound_; }
  RatV operator()(const std::vector<PolyR>& args) const;

 private:
  std::size_t arity_;
  int bound_;
  std::shared_ptr<const Fn> fn_;
};

/// (b_sigma phi)(a0..a_{n+1}) = sum_{i=0}^n (-1)^i phi(.., a_i a_{i+1}, ..)
///                             + (-1)^{n+1} phi(sigma(a_{n+1}) a0, a1, .., a_n)
Cochain b_sigma(const Cochain& phi);
/// (lambda_sigma phi)(a0..an) = (-1)^n phi(sigma(a_n), a0, .., a_{n-1})
Cochain lambda_sigma(const Cochain& phi);

/// Pseudo-random integer-valued cochain in Ker(1 - lambda_sigma^{n+1}):
/// values in [-3, 3] on word tuples whose sigma exponents sum to zero, 0 elsewhere.
Cochain random_twisted_cochain(std::size_t arity, int bound, unsigned seed);

}  // namespace cp2q
