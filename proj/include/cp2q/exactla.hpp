// Exact sparse linear algebra over Q(v).
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cp2q/qcoeff.hpp"

namespace cp2q {

using SparseRow = std::map<std::size_t, RatV>;  // column -> nonzero entry
using DenseVec = std::vector<RatV>;

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  RatV get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const RatV& x);
  void add(std::size_t r, std::size_t c, const RatV& x);
  const SparseRow& row(std::size_t r) const { return data_.at(r); }
  std::size_t append_row(SparseRow row);

  /// Rows of `below` appended under this matrix (same column count).
  void stack(const SparseMatrix& below);
  DenseVec apply(const DenseVec& x) const;
  bool is_zero() const { return nnz() == 0; }

 private:
  void check(std::size_t r, std::size_t c) const;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Reduced row echelon form: rows[i] has a leading 1 in column pivots[i]
/// and zeros in every other pivot column; pivots strictly increase.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseRow> rows;
};

Echelon rref(const SparseMatrix& m);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) { echelon_.cols = ambient; }
  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(std::size_t ambient, const std::vector<DenseVec>& vectors);
  static Subspace from_echelon(Echelon e);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<DenseVec>& basis() const { return basis_; }
  const Echelon& echelon() const { return echelon_; }
  bool contains(const DenseVec& v) const;
  bool contains(const Subspace& other) const;

 private:
  friend Subspace kernel(const SparseMatrix& m);
  std::size_t ambient_ = 0;
  std::vector<DenseVec> basis_;
  Echelon echelon_;  // echelon form of basis_ (the certificate)
};

Subspace kernel(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);
/// A solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<DenseVec> solve(const SparseMatrix& m, const DenseVec& rhs);
bool subspace_equal(const Subspace& a, const Subspace& b);

}  // namespace cp2q
