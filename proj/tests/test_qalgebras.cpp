#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cp2q/qalgebras.hpp"

using namespace cp2q;

namespace {

PolyR random_poly(std::mt19937& rng, std::size_t letters, int max_len) {
  PolyR p;
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) w += static_cast<Letter>(rng() % letters);
    p.add_term(w, qpow(static_cast<int>(rng() % 3) - 1) * RatV(1 + static_cast<long>(rng() % 2)));
  }
  return p;
}

UqElement g(UqGen x) { return UqElement::gen(x); }

PolyX act_r(const PolyR& s5, UqGen x) { return act_right(to_radical(embed_s5(s5)), g(x)); }

const UqGen kEF[] = {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2};

UqGen k_of(UqGen x) { return (x == UqGen::E1 || x == UqGen::F1) ? UqGen::K1 : UqGen::K2; }
UqGen kinv_of(UqGen x) { return (x == UqGen::E1 || x == UqGen::F1) ? UqGen::K1i : UqGen::K2i; }

}  // namespace

TEST_CASE("the sphere sits inside SUq3") {
  const Presentation& su = suq3();
  for (const auto& [name, rel] : s5q_relations()) {
    INFO(name);
    CHECK(embed_s5(rel).is_zero());
  }
  CHECK(su.str(star_u(3, 3)) == "-q u12 u21 + u11 u22");
  CHECK(star_u(1, 1) == su.reduce(u_gen(2, 2) * u_gen(3, 3) - u_gen(2, 3) * u_gen(3, 2) * qpow(1)));
  // unitarity: sum_k u^i_k (u^j_k)^* = delta_ij
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      PolyR s;
      for (int k = 1; k <= 3; ++k) s += u_gen(i, k) * star_u(j, k);
      CHECK(su.reduce(s) == (i == j ? PolyR(RatV(1)) : PolyR()));
    }
  for (Letter l = 0; l < 9; ++l) CHECK(su.star_of(su.star[l]) == PolyR::letter(l));
  // the embedding respects *
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    PolyR a = random_poly(rng, 6, 3);
    CHECK(embed_s5(s5q().star_of(a)) == su.star_of(embed_s5(a)));
  }
}

TEST_CASE("generator actions on the sphere coordinates") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(act_r(z_gen(k), UqGen::E2) == to_radical(u_gen(2, k)));
    CHECK(act_r(z_gen(k), UqGen::F2).is_zero());
    CHECK(act_r(z_gen(k), UqGen::E1).is_zero());
    PolyX k12 = act_right(to_radical(embed_s5(z_gen(k))), parse_uq_word("K1 K2 K2"));
    CHECK(k12 == to_radical(embed_s5(z_gen(k)) * qpow(1)));
    CHECK(line_degree(Word{z_letter(k)}) == 1);
    CHECK(line_degree(Word{zs_letter(k)}) == -1);
  }
  CHECK(act_right(to_radical(u_gen(1, 1)), g(UqGen::F1)) == to_radical(u_gen(2, 1)));
  CHECK(act_left(g(UqGen::E1), to_radical(u_gen(2, 1))) == to_radical(u_gen(2, 2)));
  CHECK(act_left(g(UqGen::F2), to_radical(u_gen(2, 3))) == to_radical(u_gen(2, 2)));
}

TEST_CASE("membership predicates") {
  auto x = [](const PolyR& p) { return to_radical(embed_s5(p)); };
  CHECK(is_in_S5(x(z_gen(1))));
  CHECK(is_in_LN(x(z_gen(2)), 1));
  CHECK_FALSE(is_in_LN(x(z_gen(2)), 0));
  CHECK(is_in_LN(x(zs_gen(3)), -1));
  CHECK(is_in_CP2(x(z_gen(1) * zs_gen(2))));
  CHECK(is_in_LN(x(z_gen(1) * z_gen(3)), 2));
  CHECK_FALSE(is_in_S5(to_radical(u_gen(1, 1))));
  CHECK_FALSE(is_in_S5(to_radical(u_gen(2, 3))));
}

TEST_CASE("module algebra law and commuting actions") {
  const Presentation& su = suq3();
  std::mt19937 rng(7);
  for (int t = 0; t < 12; ++t) {
    PolyR a = su.reduce(random_poly(rng, 9, 2)), b = su.reduce(random_poly(rng, 9, 2));
    PolyX ab = to_radical(su.mul(a, b));
    PolyX xa = to_radical(a), xb = to_radical(b);
    for (UqGen e : kEF) {
      for (Side side : {Side::Right, Side::Left}) {
        auto act = [&](const PolyX& p, UqGen h) { return act_suq3(side, g(h), p); };
        PolyX lhs = act(ab, e);
        PolyX rhs = su.mul(act(xa, e), act(xb, k_of(e))) + su.mul(act(xa, kinv_of(e)), act(xb, e));
        CHECK(lhs == rhs);
      }
      for (UqGen f : kEF) CHECK(act_right(act_left(g(f), xa), g(e)) == act_left(g(f), act_right(xa, g(e))));
    }
  }
}

TEST_CASE("actions respect the algebra relations") {
  // [E1, F1] = (K1^2 - K1^-2)/(q - q^-1) on a sample of elements, both sides
  const Presentation& su = suq3();
  std::mt19937 rng(9);
  const RatV qq = qpow(1) - qpow(-1);
  for (int t = 0; t < 8; ++t) {
    PolyX a = to_radical(su.reduce(random_poly(rng, 9, 3)));
    for (int i = 1; i <= 2; ++i) {
      UqGen e = i == 1 ? UqGen::E1 : UqGen::E2, f = i == 1 ? UqGen::F1 : UqGen::F2;
      UqGen k = i == 1 ? UqGen::K1 : UqGen::K2, ki = i == 1 ? UqGen::K1i : UqGen::K2i;
      UqElement comm = g(e) * g(f) - g(f) * g(e);
      UqElement rhs = (g(k) * g(k) - g(ki) * g(ki)) * Radical(qq.inverse());
      for (Side side : {Side::Right, Side::Left}) CHECK(act_suq3(side, comm, a) == act_suq3(side, rhs, a));
    }
  }
}

TEST_CASE("left action inside the sphere") {
  std::mt19937 rng(4);
  for (int t = 0; t < 12; ++t) {
    PolyR a = s5q().reduce(random_poly(rng, 6, 3));
    for (UqGen e : {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2, UqGen::K1, UqGen::K2i}) {
      PolyR in_s5 = act_left_s5(e, a);
      CHECK(to_radical(embed_s5(in_s5)) == act_left(g(e), to_radical(embed_s5(a))));
    }
  }
}

TEST_CASE("Peter-Weyl elements") {
  const Presentation& su = suq3();
  CHECK(pw_element({0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}) == PolyX(Radical(1)));
  const WeightLabel top{0, 1, 0, 0, 0};
  CHECK(pw_element(top, top) == to_radical(embed_s5(z_gen(3))));
  CHECK(pw_element({0, 1, 0, 1, -1}, top) == to_radical(embed_s5(z_gen(1))));
  CHECK(pw_element({0, 1, 0, 1, 1}, top) == to_radical(embed_s5(z_gen(2))));
  CHECK(pw_element({1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}) == to_radical(su.star[u_letter(3, 3)]));
  for (int n1 = 0; n1 <= 1; ++n1)
    for (int n2 = 0; n2 <= 1; ++n2) {
      const auto basis = rep_basis(n1, n2);
      for (const auto& lo : basis)
        for (const auto& up : basis)
          for (const char* h : {"E1", "E2", "F1", "F2", "K1", "K2"}) {
            auto r = q_equivariance_check(lo, up, parse_uq_word(h));
            INFO(lo.str(), up.str(), h, r.detail);
            CHECK(r.pass);
          }
    }
  CHECK_THROWS(pw_element({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}));
}

TEST_CASE("operator matrices") {
  const auto& s5 = s5q().sys;
  auto domain = s5.graded_basis({1, 0}, 1);
  OperatorMatrix m = right_action_matrix(g(UqGen::E2), domain);
  CHECK(m.matrix.cols() == 3);
  CHECK(m.rows.size() == 3);
  CHECK(rank(m.matrix) == 3);
  OperatorMatrix f = right_action_matrix(g(UqGen::F2), domain);
  CHECK(f.matrix.nnz() == 0);
  std::vector<Word> tiny{Word{u_letter(1, 1)}};
  CHECK_THROWS_AS(right_action_matrix(g(UqGen::E2), domain, &tiny), std::domain_error);
}
