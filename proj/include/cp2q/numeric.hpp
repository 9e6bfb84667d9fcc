// Double-precision recomputation at a numeric q, used to cross-check exact
// results. Closed-form coefficients are evaluated from their formulas in
// floating point; ranks, nullities and the Haar functional are recomputed
// with dense SVD / LU factorizations of matrices evaluated at q0.
#pragma once

#include <map>
#include <vector>

#include "cp2q/exactla.hpp"
#include "cp2q/ncpoly.hpp"

namespace cp2q::numeric {

double qint(int n, double q);
double qfact(int n, double q);
/// q^-(jk+kl+lj) [j+k+l]! / ([j]! [k]! [l]!)
double qtrinom(int j, int k, int l, double q);

/// Component coefficient of the frame Psi_N at index (j, k, l).
double frame_coefficient(int N, int j, int k, int l, double q);
double gamma_coefficient(int n, int N, double q);
/// Coefficient of the closed-form section t(0,N)^0_{j2, m}; m passed doubled.
double closed_form_coefficient(int N, int j2, int m2, double q);

/// Rank of a matrix (or of the span of rows) evaluated at q0, after row and
/// column equilibration; singular values below rel_tol times the largest
/// count as zero.
std::size_t rank(const SparseMatrix& m, double q0, double rel_tol = 1e-9);
std::size_t rank(const std::vector<DenseVec>& rows, double q0, double rel_tol = 1e-9);
std::size_t nullity(const SparseMatrix& m, double q0, double rel_tol = 1e-9);

/// Haar functional on the bidegree-<=(D,D) slice of A(S^5_q) at q0, solved in
/// double precision from the same invariance conditions.
class Haar {
 public:
  Haar(int D, double q0);
  std::size_t kernel_dimension() const { return kernel_dim_; }
  double operator()(const PolyR& s5_element) const;  // reduced in S^5_q first
  const std::map<Word, double>& values() const { return values_; }

 private:
  int D_;
  double q0_;
  std::size_t kernel_dim_ = 0;
  std::map<Word, double> values_;
};

}  // namespace cp2q::numeric
