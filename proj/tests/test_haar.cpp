#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cp2q/haar.hpp"

using namespace cp2q;

namespace {

std::vector<Word> slice_words(int D) {
  return s5q().sys.normal_words(static_cast<std::size_t>(2 * D), [D](const Word& w) {
    auto [a, b] = bidegree(w);
    return a <= D && b <= D;
  });
}

PolyR random_element(std::mt19937& rng, const std::vector<Word>& words) {
  PolyR p;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t)
    p.add_term(words[rng() % words.size()], qpow(static_cast<int>(rng() % 3) - 1) * RatV(static_cast<long>(rng() % 5) - 2));
  return p;
}

}  // namespace

TEST_CASE("modular automorphism") {
  const auto& s = s5q();
  CHECK(sigma(PolyR(RatV(1))) == PolyR(RatV(1)));
  CHECK(sigma(z_gen(3)) == z_gen(3) * qpow(-4));
  std::mt19937 rng(1);
  auto words = slice_words(1);
  for (int t = 0; t < 100; ++t) {
    PolyR x = random_element(rng, words), y = random_element(rng, words);
    CHECK(sigma(s.mul(x, y)) == s.mul(sigma(x), sigma(y)));
  }
  // sigma is diagonal with invertible eigenvalues
  for (const auto& w : words) CHECK(sigma(PolyR::word(w)) == PolyR::word(w, RatV::vpow(sigma_exponent(w))));
}

TEST_CASE("Haar state") {
  const HaarTable& h = haar_table(2);
  CHECK(h(PolyR(RatV(1))) == RatV(1));
  RatV sum;
  for (int i = 1; i <= 3; ++i) {
    CHECK(h(z_gen(i)).is_zero());
    CHECK(h(zs_gen(i)).is_zero());
    sum += h(z_gen(i) * zs_gen(i));
  }
  CHECK(sum == RatV(1));
  CHECK(h(z_gen(1) * zs_gen(2)).is_zero());
  CHECK_THROWS_AS(h(z_gen(1) * z_gen(1) * z_gen(1) * zs_gen(1) * zs_gen(1) * zs_gen(1)), std::domain_error);
  // every stored value sits on a weight-zero word of line degree zero
  for (const auto& [w, v] : h.values()) {
    CHECK(line_degree(w) == 0);
    CHECK(k_weight(Side::Left, s5q(), w) == std::pair<int, int>{0, 0});
  }
  // smaller slices agree with larger ones
  for (const auto& [w, v] : haar_table(1).values()) CHECK(h(PolyR::word(w)) == v);
  // left invariance on a larger slice
  const HaarTable& h3 = haar_table(3);
  for (const auto& w : slice_words(2))
    for (UqGen g : {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) CHECK(h3(act_left_s5(g, PolyR::word(w))).is_zero());
}

TEST_CASE("twisted trace") {
  CHECK(twisted_trace_check(PolyR(RatV(1)), PolyR(RatV(1)), 2));
  CHECK(twisted_trace_check(z_gen(1) * zs_gen(1), z_gen(2) * zs_gen(2), 2));
  auto words = slice_words(2);
  int pairs = 0;
  for (const auto& x : words)
    for (const auto& y : words) {
      auto [a1, b1] = bidegree(x);
      auto [a2, b2] = bidegree(y);
      if (a1 + a2 > 2 || b1 + b2 > 2) continue;
      ++pairs;
      CHECK(twisted_trace_check(PolyR::word(x), PolyR::word(y), 2));
    }
  CHECK(pairs > 500);
  // the plain trace property fails
  CHECK(haar_state(z_gen(3) * zs_gen(3), 2) != haar_state(zs_gen(3) * z_gen(3), 2));
}

TEST_CASE("positivity") {
  const Rational q0(1, 2);
  CHECK(positivity_probe(PolyR(), q0) == 0.0);
  CHECK(positivity_probe(z_gen(1), q0) > 0.0);
  std::mt19937 rng(5);
  auto words = s5q().sys.normal_words(2, [](const Word&) { return true; });
  for (int t = 0; t < 100; ++t) CHECK(positivity_probe(random_element(rng, words), q0) >= -1e-12);
}

TEST_CASE("twisted cochains") {
  auto words = slice_words(1);
  std::mt19937 rng(3);
  auto pick = [&](std::size_t n) {
    std::vector<PolyR> a;
    for (std::size_t k = 0; k < n; ++k) a.push_back(PolyR::word(words[rng() % words.size()]));
    return a;
  };
  // n = 0 instance of the coboundary formula
  Cochain h(1, 3, [](const std::vector<Word>& w) { return haar_state(PolyR::word(w[0]), 3); });
  Cochain bh = b_sigma(h);
  for (int t = 0; t < 20; ++t) {
    auto a = pick(2);
    const auto& s = s5q();
    CHECK(bh(a) == h({s.mul(a[0], a[1])}) - h({s.mul(sigma(a[1]), a[0])}));
    // h is a twisted trace, so b_sigma h = 0
    CHECK(bh(a).is_zero());
    CHECK(lambda_sigma(h)({a[0]}) == h({sigma(a[0])}));
  }
  for (std::size_t n1 = 1; n1 <= 3; ++n1) {
    Cochain phi = random_twisted_cochain(n1, 3, static_cast<unsigned>(n1));
    Cochain lam = phi;
    for (std::size_t k = 0; k < n1; ++k) lam = lambda_sigma(lam);
    Cochain b1 = b_sigma(phi), bb = b_sigma(b1);
    int nonzero = 0;
    for (int t = 0; t < 30; ++t) {
      auto a = pick(n1 + 2);
      CHECK(bb(a).is_zero());
      std::vector<PolyR> head(a.begin(), a.begin() + static_cast<long>(n1));
      CHECK(lam(head) == phi(head));
      std::vector<PolyR> mid(a.begin(), a.begin() + static_cast<long>(n1 + 1));
      nonzero += !b1(mid).is_zero();
    }
    CHECK(nonzero > 0);
  }
  Cochain tight = random_twisted_cochain(1, 1, 9);
  CHECK_THROWS_AS(b_sigma(tight)({z_gen(1), z_gen(2)}), std::domain_error);
}
