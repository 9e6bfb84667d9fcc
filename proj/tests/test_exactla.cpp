#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cp2q/exactla.hpp"

using namespace cp2q;

namespace {

RatV random_entry(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, 5), small(-2, 2), idx(1, 4);
  switch (pick(rng)) {
    case 0:
    case 1:
      return RatV();
    case 2:
      return RatV(small(rng));
    case 3:
      return q_int(idx(rng)) * qpow(small(rng));
    case 4:
      return q_int(idx(rng)) / q_int(idx(rng) + 1);
    default:
      return RatV(small(rng)) + RatV::vpow(2 * small(rng));
  }
}

// Sparse random rows; a few extra rows are combinations of earlier ones so
// that kernels and rank deficiencies actually occur.
SparseMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> small(-2, 2);
  SparseMatrix m(0, c);
  std::size_t independent = std::max<std::size_t>(1, r - r / 3);
  for (std::size_t i = 0; i < independent; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 3 == 0)
        if (RatV x = random_entry(rng); !x.is_zero()) row.emplace(j, x);
    m.append_row(std::move(row));
  }
  while (m.rows() < r) {
    std::size_t a = rng() % independent, b = rng() % independent;
    SparseRow row = m.row(a);
    RatV f = qpow(small(rng));
    for (const auto& [j, x] : m.row(b)) {
      auto [it, fresh] = row.try_emplace(j, RatV());
      it->second += f * x;
      if (it->second.is_zero()) row.erase(it);
    }
    m.append_row(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("kernel basics") {
  CHECK(kernel(SparseMatrix::identity(3)).dim() == 0);
  CHECK(kernel(SparseMatrix(2, 3)).dim() == 3);
  SparseMatrix m(1, 2);
  m.set(0, 0, q_int(1));
  m.set(0, 1, -q_int(1));
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(DenseVec{RatV(1), RatV(1)}));
}

TEST_CASE("rank, solve and subspace equality") {
  CHECK(rank(SparseMatrix::identity(5)) == 5);
  SparseMatrix m(1, 1);
  m.set(0, 0, q_int(2));
  auto x = solve(m, {q_int(2)});
  REQUIRE(x);
  CHECK((*x)[0] == RatV(1));
  SparseMatrix z(1, 1);
  CHECK_FALSE(solve(z, {RatV(1)}));

  Subspace a = Subspace::span(2, {{RatV(1), RatV()}, {RatV(), RatV(1)}});
  Subspace b = Subspace::span(2, {{RatV(1), RatV(1)}, {RatV(1), RatV(-1)}});
  CHECK(subspace_equal(a, b));
  Subspace c = Subspace::span(2, {{RatV(1), RatV(1)}});
  CHECK_FALSE(subspace_equal(a, c));
  CHECK(a.contains(c));
  CHECK_FALSE(c.contains(a));
}

TEST_CASE("randomized rank-nullity and exact annihilation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 20);
  for (int t = 0; t < 12; ++t) {
    std::size_t r = dim(rng), c = dim(rng);
    SparseMatrix m = random_matrix(rng, r, c);
    Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis())
      for (const auto& y : m.apply(v)) CHECK(y.is_zero());
  }
}

TEST_CASE("randomized subspace comparisons") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 6;
    std::vector<DenseVec> gens;
    for (int i = 0; i < 3; ++i) {
      DenseVec v(n);
      for (auto& x : v) x = random_entry(rng);
      gens.push_back(v);
    }
    Subspace a = Subspace::span(n, gens);
    // b: random combinations of the same generators, plus maybe one extra.
    std::vector<DenseVec> mixed;
    for (int i = 0; i < 3; ++i) {
      DenseVec v(n);
      for (const auto& g : gens) {
        RatV f = random_entry(rng);
        for (std::size_t j = 0; j < n; ++j) v[j] += f * g[j];
      }
      mixed.push_back(v);
    }
    if (t % 2 == 1) {
      DenseVec extra(n);
      for (auto& x : extra) x = random_entry(rng);
      mixed.push_back(extra);
    }
    Subspace b = Subspace::span(n, mixed);
    CHECK(subspace_equal(a, a));
    CHECK(subspace_equal(a, b) == subspace_equal(b, a));
    CHECK(subspace_equal(a, b) == (a.contains(b) && b.contains(a)));
  }
}
