#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cp2q/uqsu3.hpp"

using namespace cp2q;

TEST_CASE("basis labels and dimensions") {
  CHECK(rep_basis(0, 0).size() == 1);
  CHECK(rep_basis(1, 0).size() == 3);
  CHECK(rep_basis(0, 1).size() == 3);
  CHECK(rep_basis(1, 1).size() == 8);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto basis = rep_basis(a, b);
      CHECK(static_cast<int>(basis.size()) == (a + 1) * (b + 1) * (a + b + 2) / 2);
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& l : basis) CHECK(l.valid());
    }
}

TEST_CASE("generator action on labels") {
  WeightLabel l{1, 1, 1, 0, 1};
  auto k1 = act_generator(UqGen::K1, l);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].second == Radical(RatV::vpow(2)));  // q^(1/2)
  // E1 kills the top of each m-string.
  for (const auto& x : rep_basis(2, 1))
    if (x.m2 == x.j1 + x.j2) CHECK(act_generator(UqGen::E1, x).empty());
  // E2 |n,n,0,0,0> = A_00 |n,n,1,0,-1/2>, A_00 = sqrt([n][n+2]/[2])
  for (int n = 1; n <= 3; ++n) {
    auto img = act_generator(UqGen::E2, {n, n, 0, 0, 0});
    REQUIRE(img.size() == 1);
    CHECK(img[0].first == WeightLabel{n, n, 1, 0, -1});
    Radical want = Radical::sqrt_factored({SqrtFactor::qint(n), SqrtFactor::qint(n + 2), SqrtFactor::qint(2, -1)});
    CHECK(img[0].second == want);
  }
  CHECK(act_generator(UqGen::E2, {0, 0, 0, 0, 0}).empty());
  CHECK_THROWS(act_generator(UqGen::E1, {1, 0, 1, 0, 2}));
}

TEST_CASE("defining relations hold on small representations") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 3}}) {
    for (const auto& c : verify_relations(a, b)) {
      INFO(a, ",", b, ": ", c.name, " ", c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("theta and star") {
  UqElement e1 = UqElement::gen(UqGen::E1);
  CHECK(theta(e1) == UqElement::gen(UqGen::F1));
  CHECK(theta(parse_uq_word("F2 F1")) == parse_uq_word("E1 E2"));
  CHECK(star_uq(parse_uq_word("E1 E2")) == parse_uq_word("F2 F1"));
  CHECK(star_uq(UqElement::gen(UqGen::K2i)) == UqElement::gen(UqGen::K2i));
  CHECK(parse_uq_word("K1 K1i E2") == UqElement::gen(UqGen::E2));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    UqWord w;
    int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) w += static_cast<char8_t>(rng() % 8);
    UqElement h = UqElement::word(w, Radical(q_int(1 + static_cast<int>(rng() % 3))));
    CHECK(theta(theta(h)) == h);
    CHECK(star_uq(star_uq(h)) == h);
  }
}

TEST_CASE("adjointness of E and F") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b + a <= 3; ++b)
      for (UqGen e : {UqGen::E1, UqGen::E2}) {
        RepMatrix E = RepMatrix::of(e, a, b);
        RepMatrix F = RepMatrix::of(e == UqGen::E1 ? UqGen::F1 : UqGen::F2, a, b);
        CHECK((F - E.transpose()).is_zero());
      }
}
