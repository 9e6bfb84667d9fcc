// Holomorphic structure on CP^2_q: the operators d and dbar, (0,1)-forms,
// frames of the line bundles L_N, their flat dbar-connections, holomorphic
// sections and the bimodule twist.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cp2q/exactla.hpp"
#include "cp2q/qalgebras.hpp"

namespace cp2q {

using Check = RelationCheck;

/// A pair (v+, v-) of elements of A(SU_q(3)).
struct FormPair {
  PolyX plus, minus;
  bool is_zero() const { return plus.is_zero() && minus.is_zero(); }
  friend bool operator==(const FormPair&, const FormPair&) = default;
  FormPair& operator+=(const FormPair& o);
  FormPair& operator*=(const RatV& s);
  friend FormPair operator+(FormPair a, const FormPair& b) { return a += b; }
  friend FormPair operator-(FormPair a, const FormPair& b);
  friend FormPair operator*(FormPair a, const RatV& s) { return a *= s; }
  /// (v+ x, v- x) and (x v+, x v-), reduced
  FormPair times_right(const PolyX& x) const;
  FormPair times_left(const PolyX& x) const;
  std::string str() const;
};

/// dbar a = (a <| F2 F1, a <| F2), del a = (a <| E2, a <| F2 E1). The argument
/// is in A(SU_q(3)) coordinates and must lie in A(CP^2_q)
/// (std::invalid_argument otherwise).
FormPair dbar(const PolyX& a);
FormPair del(const PolyX& a);

/// The four conditions: weight q^(3/2) under K1 K2^2, (q^(1/2), q^(-1/2)) under
/// K1, (v+, v-) <| F1 = (0, v+) and (v+, v-) <| E1 = (v-, 0).
bool is_antiholomorphic_form(const FormPair& p);

/// Frame Psi_N in A(SU_q(3)) coordinates. For N >= 0 the components are
/// sqrt([j,k,l]!) (z1^j z2^k z3^l)^*; for N < 0 they are
/// q^(2j+k) sqrt([j,k,l]!) z1^j z2^k z3^l, the weights that make Psi^dag Psi = 1.
struct Frame {
  int N = 0;
  std::vector<std::array<int, 3>> index;  // (j, k, l), j + k + l = |N|
  std::vector<Radical> coeff;
  std::vector<PolyX> psi;      // components of Psi
  std::vector<PolyX> psi_dag;  // their stars
};

/// Built once per N; throws std::logic_error unless Psi^dag Psi = 1 exactly.
const Frame& frame(int N);

/// Psi^dag <| F2 = 0, Psi^dag (Psi <| F2) = 0, Psi^dag (Psi <| F2 F1) = 0,
/// Psi <| F1 = 0, Psi <| K1 = Psi, Psi <| K2 = q^(-N/2) Psi and Psi^dag Psi = 1.
/// For N < 0 the first identity is replaced by Psi <| F2 = 0.
std::vector<Check> verify_frame_identities(int N);

/// Psi^dag (P_N <| F2) = 0 and Psi^dag (P_N <| F2 F1) = 0 with P_N = Psi Psi^dag.
std::vector<Check> flatness_check(int N);

struct ConnectionResult {
  FormPair via_frame;    // q^-N Psi^dag ((Psi xi) <| F2 F1, (Psi xi) <| F2)
  FormPair closed_form;  // q^(-N/2) (xi <| F2 F1, xi <| F2)
  bool agree = false;
};
/// xi in L_N, A(SU_q(3)) coordinates.
ConnectionResult connection_dbar(int N, const PolyX& xi);

/// gamma_n = sqrt([n][n+N+2]/[2]) for N >= 0 and sqrt([n-N][n+2]/[2]) for N < 0.
Radical gamma_coefficient(int n, int N);

/// Holomorphic sections: kernel of xi -> (xi <| F2 F1, xi <| F2) on the span
/// of S^5_q normal words with #z - #z^* = N and length <= D.
struct SectionSpace {
  int N = 0, D = 0;
  std::vector<Word> words;  // S^5_q coordinates
  Subspace kernel;
  /// The stacked (<| F2; <| F2 F1) matrix of each left-weight block; the
  /// kernel dimension is the sum of their nullities.
  std::vector<SparseMatrix> blocks;
  std::size_t dimension() const { return kernel.dim(); }
  /// Kernel basis as S^5_q elements.
  std::vector<PolyR> sections() const;
};
SectionSpace h0_solve(int N, int D);

/// Candidate slice of L_N: S^5_q normal words of line degree N, length <= D.
std::vector<Word> line_bundle_words(int N, int D);

/// phi1(omega (x) xi) = q^(N/2) (v+ xi, v- xi), phi2(xi (x) omega) = q^(-N/2) (xi v+, xi v-).
/// Both check their arguments (form conditions, xi in L_N).
FormPair twist_phi1(int N, const FormPair& omega, const PolyX& xi);
FormPair twist_phi2(int N, const PolyX& xi, const FormPair& omega);

struct ImageComparison {
  std::size_t dim_phi1 = 0, dim_phi2 = 0, generators = 0;
  bool equal = false;
  std::vector<DenseVec> phi1_images, phi2_images;  // generator coordinates
};
/// Spans of phi1(a dbar(b) (x) xi) and phi2(xi (x) a dbar(b)) over the slice
/// where a, b run over A(CP^2_q) normal words and xi over L_N words with
/// len(a) + len(b) + len(xi) <= D; compared with subspace_equal.
ImageComparison compare_twist_images(int N, int D);

/// phi1 of both sides of the twisted Leibniz rule:
/// q^(N/2) nabla(xi a) = q^(N/2) (nabla xi) a + phi2(xi (x) dbar a).
Check twisted_leibniz_check(int N, const PolyX& xi, const PolyX& a);

/// nabla_{N+M}(xi1 xi2) = (nabla_N xi1) xi2 + q^-N xi1 nabla_M(xi2), the
/// tensor connection after applying the twist to its second summand.
Check tensor_connection_check(int N, int M, const PolyX& xi1, const PolyX& xi2);

/// [j2+1]! sqrt([N]!/([j2/2-m]! [j2/2+m]! [N-j2]!)) q^alpha z1^(j2/2-m) z2^(j2/2+m) z3^(N-j2)
/// with alpha = -j2 N/2 - (j2/2-m) j2/2 + j2^2/2 + (j2/2-m)^2/2; m passed doubled.
/// S^5_q coordinates.
PolyX closed_form_section(int N, int j2, int m2);

/// Twisted commutation of the degree-one sections, the span of products of
/// closed-form sections against H^0(L_N), and dim H^0(L_N) against the
/// monomial count, for N = 1..max_n.
std::vector<Check> ring_relations_check(int max_n, int slack = 6);

}  // namespace cp2q
