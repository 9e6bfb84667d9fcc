// The presented algebras A(SU_q(3)) and A(S^5_q), the Hopf actions of
// U_q(su(3)) on them, line bundle membership and Peter-Weyl elements.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cp2q/exactla.hpp"
#include "cp2q/ncpoly.hpp"
#include "cp2q/uqsu3.hpp"

namespace cp2q {

struct Presentation {
  RewriteSystem sys;
  std::vector<PolyR> star;  // image of each letter under *
  CompletionResult completion;

  const std::string& name() const { return sys.name(); }
  const Alphabet& alphabet() const { return sys.alphabet(); }
  template <class C>
  Poly<C> reduce(const Poly<C>& p) const {
    return sys.normal_form(p);
  }
  template <class C>
  Poly<C> mul(const Poly<C>& a, const Poly<C>& b) const {
    return sys.normal_form(a * b);
  }
  template <class C>
  Poly<C> star_of(const Poly<C>& p) const {
    return star_poly(p, star, sys);
  }
  template <class C>
  std::string str(const Poly<C>& p) const {
    return to_string(p, sys.alphabet(), sys.order());
  }
  PolyR parse(const std::string& text) const { return sys.normal_form(parse_poly(text, sys.alphabet())); }
};

/// Builds the raw presentations (relations oriented, no completion run).
/// The FRT system holds only the quadratic rules of O_q(M_3).
RewriteSystem build_frt_system();
RewriteSystem build_suq3_system(bool with_central_rule = true);
/// NF_FRT(u D - D u) for every generator u; all zero certifies the central rule.
std::vector<PolyR> determinant_commutators();
RewriteSystem build_s5q_system();

/// Completed presentations, built once per process.
const Presentation& suq3();
const Presentation& s5q();
/// "suq3" or "s5q"
const Presentation& presentation(const std::string& name);

/// Letters: u^i_j (1-based), z_j, z_j^*.
Letter u_letter(int i, int j);
Letter z_letter(int j);
Letter zs_letter(int j);
PolyR u_gen(int i, int j);
PolyR z_gen(int j);
PolyR zs_gen(int j);

/// (u^i_j)^* as the reduced quantum-minor expansion.
PolyR star_u(int i, int j);

/// The determinant sum_sigma (-q)^l(sigma) u^1_s1 u^2_s2 u^3_s3 (unreduced).
PolyR quantum_determinant();

/// z_j -> u^3_j, z_j^* -> (u^3_j)^* on free words; result reduced in A(SU_q(3)).
PolyR embed_s5(const PolyR& x);
PolyX embed_s5(const PolyX& x);

/// The nine defining relations of A(S^5_q) as elements of the free algebra.
std::vector<std::pair<std::string, PolyR>> s5q_relations();

// ---- actions ---------------------------------------------------------------

enum class Side { Left, Right };

/// a <| h (Side::Right) or h |> a (Side::Left) for a in A(SU_q(3)).
/// Words of h act generator by generator: a <| h1 h2 = (a <| h1) <| h2 and
/// h1 h2 |> a = h1 |> (h2 |> a); products use the coproduct
/// Delta(E) = E (x) K + K^-1 (x) E (same for F), K group-like.
PolyR act_suq3(Side side, UqGen g, const PolyR& a);
PolyX act_suq3(Side side, const UqElement& h, const PolyX& a);
PolyX act_right(const PolyX& a, const UqElement& h);
PolyX act_left(const UqElement& h, const PolyX& a);

/// Left action inside A(S^5_q) (which it preserves), in S^5_q normal form.
PolyR act_left_s5(UqGen g, const PolyR& a);
PolyX act_left_s5(const UqElement& h, const PolyX& a);

/// v-exponents of the K1, K2 eigenvalues of a monomial, per side. Works on
/// both presentations (S^5_q words are weight vectors too).
std::pair<int, int> k_weight(Side side, const Presentation& p, const Word& w);

/// Right K1 K2^2 eigenvalue exponent (in units of q) of an S^5_q word:
/// (#z) - (#z^*).
int line_degree(const Word& s5_word);

bool is_in_S5(const PolyX& a);  // a in A(SU_q(3))
bool is_in_LN(const PolyX& a, int N);
bool is_in_CP2(const PolyX& a);

// ---- Peter-Weyl elements ---------------------------------------------------

/// X^{n1,n2}_{j1,j2,m}, with m passed doubled.
UqElement x_operator(int n1, int n2, int j1, int j2, int m2);
/// t(n1,n2)^{l1,l2,k}_{j1,j2,m} = X_lower |> (u^1_1)^{*n1} (u^3_3)^{n2} <| (X_upper)^*.
PolyX pw_element(const WeightLabel& lower, const WeightLabel& upper);

struct EquivarianceResult {
  bool pass = false;
  std::string detail;
};
/// Checks t <| h = sum_l' <l'| theta(h) |l> t(l') on the upper label.
EquivarianceResult q_equivariance_check(const WeightLabel& lower, const WeightLabel& upper, const UqElement& h);

// ---- operator matrices -----------------------------------------------------

/// Matrix of a linear map on the span of `domain` words. Rows are indexed by
/// `rows` (normal words of the target presentation), in ascending order.
struct OperatorMatrix {
  SparseMatrix matrix;
  std::vector<Word> rows;
};

/// Columns are images of the domain words; the codomain coordinates are the
/// words that actually occur (or exactly `codomain` if given, in which case
/// an escaping image throws std::domain_error naming the word).
OperatorMatrix operator_matrix(const std::vector<PolyR>& images, const Presentation& target,
                               const std::vector<Word>* codomain = nullptr);

/// Right action of h on S^5_q words, in A(SU_q(3)) coordinates.
OperatorMatrix right_action_matrix(const UqElement& h, const std::vector<Word>& s5_domain,
                                   const std::vector<Word>* codomain = nullptr);

/// Drops the memoized normal forms, embeddings and action images. Results
/// stay the same; only memory is released. Not safe while another thread
/// uses the algebras.
void clear_algebra_caches();

}  // namespace cp2q
