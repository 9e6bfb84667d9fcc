#include "cp2q/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cp2q {

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, RatV(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

void SparseMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= data_.size() || c >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
}

RatV SparseMatrix::get(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? RatV() : it->second;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const RatV& x) {
  check(r, c);
  if (x.is_zero())
    data_[r].erase(c);
  else
    data_[r][c] = x;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const RatV& x) {
  check(r, c);
  if (x.is_zero()) return;
  auto [it, fresh] = data_[r].try_emplace(c, x);
  if (!fresh) {
    it->second += x;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

std::size_t SparseMatrix::append_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->first >= cols_) throw std::out_of_range("row entry beyond column count");
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  data_.push_back(std::move(row));
  return data_.size() - 1;
}

void SparseMatrix::stack(const SparseMatrix& below) {
  if (below.cols_ != cols_) throw std::invalid_argument("stack: column count mismatch");
  data_.insert(data_.end(), below.data_.begin(), below.data_.end());
}

DenseVec SparseMatrix::apply(const DenseVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  DenseVec y(data_.size());
  for (std::size_t r = 0; r < data_.size(); ++r)
    for (const auto& [c, a] : data_[r])
      if (!x[c].is_zero()) y[r] += a * x[c];
  return y;
}

namespace {

// row -= f * pivot
void axpy(SparseRow& row, const RatV& f, const SparseRow& pivot) {
  for (const auto& [c, a] : pivot) {
    auto [it, fresh] = row.try_emplace(c, RatV());
    it->second -= f * a;
    if (it->second.is_zero()) row.erase(it);
  }
}

}  // namespace

Echelon rref(const SparseMatrix& m) {
  std::vector<SparseRow> active;
  active.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) active.push_back(m.row(r));

  Echelon e;
  e.cols = m.cols();
  for (std::size_t c = 0; c < m.cols() && !active.empty(); ++c) {
    // Pivot: the simplest nonzero entry in this column.
    std::size_t best = active.size();
    int best_cx = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      auto it = active[i].find(c);
      if (it == active[i].end()) continue;
      int cx = it->second.complexity();
      if (best == active.size() || cx < best_cx || (cx == best_cx && active[i].size() < active[best].size())) {
        best = i;
        best_cx = cx;
      }
    }
    if (best == active.size()) continue;
    SparseRow pivot = std::move(active[best]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    RatV inv = pivot.at(c).inverse();
    if (!inv.is_one())
      for (auto& [k, a] : pivot) a *= inv;
    for (auto& row : active) {
      auto it = row.find(c);
      if (it != row.end()) axpy(row, RatV(it->second), pivot);
    }
    for (auto& row : e.rows) {
      auto it = row.find(c);
      if (it != row.end()) axpy(row, RatV(it->second), pivot);
    }
    active.erase(std::remove_if(active.begin(), active.end(), [](const SparseRow& r) { return r.empty(); }), active.end());
    e.pivots.push_back(c);
    e.rows.push_back(std::move(pivot));
  }
  return e;
}

std::size_t rank(const SparseMatrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::from_echelon(Echelon e) {
  Subspace s(e.cols);
  for (const auto& row : e.rows) {
    DenseVec v(e.cols);
    for (const auto& [c, a] : row) v[c] = a;
    s.basis_.push_back(std::move(v));
  }
  s.echelon_ = std::move(e);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<DenseVec>& vectors) {
  SparseMatrix m(0, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("span: vector dimension mismatch");
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) row.emplace(i, v[i]);
    m.append_row(std::move(row));
  }
  return from_echelon(rref(m));
}

bool Subspace::contains(const DenseVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: dimension mismatch");
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace(i, v[i]);
  for (std::size_t k = 0; k < echelon_.pivots.size(); ++k) {
    auto it = r.find(echelon_.pivots[k]);
    if (it != r.end()) axpy(r, RatV(it->second), echelon_.rows[k]);
  }
  return r.empty();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const DenseVec& v) { return contains(v); });
}

Subspace kernel(const SparseMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<DenseVec> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    DenseVec v(m.cols());
    v[f] = RatV(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      auto it = e.rows[k].find(f);
      if (it != e.rows[k].end()) v[e.pivots[k]] = -it->second;
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vecs);
}

std::optional<DenseVec> solve(const SparseMatrix& m, const DenseVec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  // Augment with the right-hand side as the last column.
  SparseMatrix aug(0, m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    if (!rhs[r].is_zero()) row.emplace(m.cols(), rhs[r]);
    aug.append_row(std::move(row));
  }
  Echelon e = rref(aug);
  DenseVec x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    auto it = e.rows[k].find(m.cols());
    if (it != e.rows[k].end()) x[e.pivots[k]] = it->second;
  }
  return x;
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  const Echelon& ea = a.echelon();
  const Echelon& eb = b.echelon();
  return ea.pivots == eb.pivots && ea.rows == eb.rows;
}

}  // namespace cp2q
