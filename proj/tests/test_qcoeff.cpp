#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cp2q/qcoeff.hpp"

using namespace cp2q;

namespace {

// Plain double evaluation of [z] straight from its definition.
double qint_d(double q, double z) { return (std::pow(q, z) - std::pow(q, -z)) / (q - 1.0 / q); }

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1).is_one());
  CHECK(q_int(2) == RatV(LaurentV::monomial(4) + LaurentV::monomial(-4)));
  CHECK(to_string(q_int(2)) == "q + q^-1");
  for (int n = -6; n <= 6; ++n) CHECK(q_int(-n) == -q_int(n));
  for (int n = 0; n <= 7; ++n) CHECK(eval_numeric(q_int(n), Rational(1, 3)) == doctest::Approx(qint_d(1.0 / 3, n)).epsilon(1e-12));
  CHECK(eval_numeric(q_int(2), Rational(1, 2)) == doctest::Approx(2.5));
}

TEST_CASE("quarter-integer q-numbers") {
  for (int fz = -9; fz <= 9; ++fz)
    CHECK(eval_numeric(q_int_quarter(fz), Rational(1, 2)) == doctest::Approx(qint_d(0.5, fz / 4.0)).epsilon(1e-12));
  CHECK(q_int_quarter(8) == q_int(2));
}

TEST_CASE("q-factorials and binomials") {
  CHECK(q_factorial(0).is_one());
  CHECK(q_factorial(2) == q_int(2));
  CHECK(q_factorial(3) == q_int(2) * (qpow(2) + RatV(1) + qpow(-2)));
  CHECK_THROWS_AS(q_factorial(-1), std::invalid_argument);
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m) {
      RatV b = q_binomial(n, m);
      CHECK(b.is_laurent());
      CHECK(b == q_binomial(n, n - m));
    }
  CHECK(q_binomial(2, 1) == q_int(2));
  CHECK_THROWS(q_binomial(2, 3));
  // Pascal rule [n,m] = q^-m [n-1,m] + q^(n-m) [n-1,m-1]
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m < n; ++m)
      CHECK(q_binomial(n, m) == qpow(-m) * q_binomial(n - 1, m) + qpow(n - m) * q_binomial(n - 1, m - 1));
}

TEST_CASE("q-trinomial") {
  CHECK(q_trinomial(0, 0, 0).is_one());
  CHECK(q_trinomial(1, 0, 0).is_one());
  CHECK(q_trinomial(1, 1, 0) == qpow(-1) * q_int(2));
  CHECK_THROWS(q_trinomial(-1, 0, 0));
  // q^-(jk+kl+lj) [j+k+l]!/([j]![k]![l]!) in doubles
  auto fact_d = [](double q, int n) {
    double r = 1;
    for (int k = 1; k <= n; ++k) r *= qint_d(q, k);
    return r;
  };
  for (int j = 0; j <= 3; ++j)
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l) {
        double want = std::pow(0.5, -(j * k + k * l + l * j)) * fact_d(0.5, j + k + l) / (fact_d(0.5, j) * fact_d(0.5, k) * fact_d(0.5, l));
        CHECK(eval_numeric(q_trinomial(j, k, l), Rational(1, 2)) == doctest::Approx(want).epsilon(1e-12));
      }
}

TEST_CASE("rational functions") {
  RatV a = q_int(3) / q_int(2);
  CHECK_FALSE(a.is_laurent());
  CHECK(a * q_int(2) == q_int(3));
  CHECK((a - a).is_zero());
  CHECK(a.inverse() * a == RatV(1));
  RatV b = RatV(LaurentV::monomial(1) + LaurentV(3), LaurentV::monomial(2) - LaurentV(9));
  CHECK(b == RatV(LaurentV(1), LaurentV::monomial(1) - LaurentV(3)));
  CHECK(RatV::decode(a.encode()) == a);
  CHECK(RatV::decode(RatV(Rational(-3, 7)).encode()) == RatV(Rational(-3, 7)));
  RatV c = RatV(LaurentV::monomial(-3, Rational(2, 5)) + LaurentV(1), LaurentV::monomial(3) + LaurentV(Rational(1, 2)));
  CHECK(RatV::decode(c.encode()) == c);
}

TEST_CASE("polynomial gcd and square-free parts") {
  LaurentV x = LaurentV::monomial(1);
  LaurentV f = (x - LaurentV(1)) * (x + LaurentV(2));
  LaurentV g = (x - LaurentV(1)) * (x - LaurentV(5));
  CHECK(poly_gcd(f, g) == x - LaurentV(1));
  LaurentV p = (x + LaurentV(1)) * (x + LaurentV(1)) * (x - LaurentV(3));
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 2);
  CHECK(poly_div_exact(p, sf[0] * sf[1] * sf[1]).is_constant());
}

TEST_CASE("radicals") {
  Radical r2 = Radical::sqrt_factored({SqrtFactor::qint(2, 2)});
  CHECK(r2.is_rational());
  CHECK(r2.as_rational() == q_int(2));

  Radical r13 = Radical::sqrt_factored({SqrtFactor::qint(1), SqrtFactor::qint(3)});
  REQUIRE(r13.term_count() == 1);
  CHECK(r13.terms().begin()->second.is_one());
  CHECK(RatV(r13.terms().begin()->first) == q_int(3));

  Radical s2 = Radical::sqrt_factored({SqrtFactor::qint(2)});
  CHECK(s2 * s2 == Radical(q_int(2)));
  CHECK(eval_numeric(s2, Rational(1, 2)) == doctest::Approx(std::sqrt(2.5)));
  CHECK(Radical::sqrt_factored({SqrtFactor::qint(0)}).is_zero());
  CHECK_THROWS(Radical::sqrt_factored({SqrtFactor::rational(-1)}));
  CHECK_THROWS(Radical::sqrt_factored({SqrtFactor::qint(-2)}));

  // sqrt([4]) = sqrt([2]) sqrt(q^2 + q^-2)
  Radical r4 = Radical::sqrt_factored({SqrtFactor::qint(4)});
  Radical r22 = Radical::sqrt_factored({SqrtFactor::qint(4), SqrtFactor::qint(2, -1)});
  CHECK(r4 == s2 * r22);
  CHECK(r4 / s2 == r22);
  CHECK_THROWS(r4 / (s2 + Radical(1)));

  // sqrt(q) is v^2, a rational element
  Radical sq = Radical::sqrt_factored({SqrtFactor::vpower(4)});
  CHECK(sq == Radical(RatV::vpow(2)));
}

TEST_CASE("radical arithmetic laws and numeric zero test") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> idx(1, 6), coef(-3, 3), pick(0, 3);
  auto random_radical = [&] {
    Radical r;
    int terms = 1 + pick(rng);
    for (int t = 0; t < terms; ++t) {
      std::vector<SqrtFactor> f;
      int nf = pick(rng);
      for (int i = 0; i < nf; ++i) f.push_back(SqrtFactor::qint(idx(rng), pick(rng) == 0 ? -1 : 1));
      r += Radical::sqrt_factored(f) * RatV(coef(rng)) * RatV::vpow(coef(rng));
    }
    return r;
  };
  for (int i = 0; i < 60; ++i) {
    Radical a = random_radical(), b = random_radical(), c = random_radical();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a * (b + c) == a * b + a * c);
  }
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    Radical a = random_radical(), b = random_radical();
    // Half the samples are exact zeros in disguise.
    Radical x = (i % 2 == 0) ? a * b - b * a + (a - a) : a * b - b;
    bool exact_zero = x.is_zero();
    bool numeric_zero = true;
    for (Rational q0 : {Rational(1, 3), Rational(1, 2), Rational(2, 3)})
      if (std::abs(eval_numeric(x, q0)) > 1e-9) numeric_zero = false;
    if (exact_zero == numeric_zero) ++agree;
  }
  CHECK(agree == 200);
}

TEST_CASE("formatting") {
  CHECK(to_string(RatV(1)) == "1");
  CHECK(to_string(RatV()) == "0");
  CHECK(to_string(RatV(LaurentV(1) - LaurentV::monomial(8))) == "-q^2 + 1");
  CHECK(to_string(RatV::vpow(2)) == "q^(1/2)");
  CHECK(to_string(RatV::vpow(-3)) == "q^(-3/4)");
  CHECK(to_string(qpow(-1)) == "q^-1");
}
