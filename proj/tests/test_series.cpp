#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mdt/errors.hpp"
#include "mdt/series.hpp"

using namespace mdt;

namespace {

Grading g1(long long bound) { return Grading({"x"}, {1}, bound); }
Grading g2(long long bound) { return Grading({"x", "y"}, {1, 1}, bound); }

// random series with integral coefficients and no constant term
MSeries random_positive(std::mt19937& rng, const Grading& g) {
  std::uniform_int_distribution<int> ed(0, 3), cd(-3, 3), kd(-2, 2);
  MSeries f(g);
  for (int t = 0; t < 6; ++t) {
    std::vector<int> e(g.arity());
    long long d = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      e[i] = ed(rng);
      d += e[i];
    }
    if (d == 0) continue;
    f.add_term(e, MotiveScalar::v_power(kd(rng), cd(rng)));
  }
  return f;
}

} // namespace

TEST_CASE("grading validation") {
  CHECK_THROWS_AS(Grading({"x"}, {1, 2}, 5), MdtError);
  CHECK_THROWS_AS(Grading({"x", "y"}, {0, 0}, 5), MdtError);
  CHECK_THROWS_AS(Grading({"x"}, {-1}, 5), MdtError);
  CHECK_THROWS_AS(Grading({}, {}, 5), MdtError);
  Grading g({"x", "y"}, {2, 0}, 10);
  CHECK(g.wdeg({3, 7}) == 6);
}

TEST_CASE("term storage drops zeros and out-of-region exponents") {
  Grading g = g1(3);
  MSeries f(g);
  f.add_term({2}, MotiveScalar::one());
  f.add_term({2}, -MotiveScalar::one());
  CHECK(f.is_zero());
  f.add_term({4}, MotiveScalar::one()); // beyond bound
  CHECK(f.is_zero());
  f.add_term({1}, MotiveScalar::L_power(1));
  CHECK(f.coefficient({1}) == MotiveScalar::L_power(1));
  CHECK(f.coefficient({0}).is_zero());
  CHECK_THROWS_AS(f.add_term({1, 2}, MotiveScalar::one()), MdtError);
}

TEST_CASE("multiplication truncates consistently") {
  Grading g = g1(5);
  // 1/(1-x) squared = sum (k+1) x^k
  MSeries geo = geometric_factor(g, MotiveScalar::one(), {1}, 1);
  MSeries sq = geo * geo;
  for (int k = 0; k <= 5; ++k)
    CHECK(sq.coefficient({k}) == MotiveScalar::integer(k + 1));
  CHECK(sq == geometric_factor(g, MotiveScalar::one(), {1}, 2));
  // grading mismatch is an error
  MSeries other(g1(6));
  CHECK_THROWS_AS(geo * other, MdtError);
}

TEST_CASE("geometric factors") {
  Grading g = g2(6);
  // polynomial case: (1 - x y)^2
  MSeries p = geometric_factor(g, MotiveScalar::one(), {1, 1}, -2);
  CHECK(p.coefficient({0, 0}) == MotiveScalar::one());
  CHECK(p.coefficient({1, 1}) == MotiveScalar::integer(-2));
  CHECK(p.coefficient({2, 2}) == MotiveScalar::one());
  CHECK(p.terms().size() == 3);
  // inverse pair multiplies to 1
  MSeries q = geometric_factor(g, MotiveScalar::L_power(1), {1, 0}, 1);
  MSeries qi = geometric_factor(g, MotiveScalar::L_power(1), {1, 0}, -1);
  CHECK(q * qi == ms_one(g));
  CHECK_THROWS_AS(geometric_factor(g, MotiveScalar::one(), {0, 0}, 1), MdtError);
}

TEST_CASE("series inverse") {
  std::mt19937 rng(5);
  Grading g = g2(6);
  for (int i = 0; i < 10; ++i) {
    MSeries f = ms_one(g) + random_positive(rng, g);
    CHECK(f * ms_inverse_unit(f) == ms_one(g));
  }
  CHECK_THROWS_AS(ms_inverse_unit(ms_zero(g)), MdtError);
}

TEST_CASE("Exp of a single variable is geometric") {
  Grading g = g1(7);
  MSeries f(g);
  f.add_term({1}, MotiveScalar::v_power(1));
  CHECK(exp_lambda(f) == geometric_factor(g, MotiveScalar::v_power(1), {1}, 1));
}

TEST_CASE("Exp turns sums into products, Log undoes Exp") {
  std::mt19937 rng(17);
  Grading g = g2(5);
  for (int i = 0; i < 6; ++i) {
    MSeries a = random_positive(rng, g);
    MSeries b = random_positive(rng, g);
    MSeries ea = exp_lambda(a), eb = exp_lambda(b);
    CHECK(exp_lambda(a + b) == ea * eb);
    CHECK(log_lambda(ea) == a);
    CHECK(log_lambda(ea * eb) == a + b);
  }
}

TEST_CASE("Exp and Log argument validation") {
  Grading g = g1(4);
  CHECK_THROWS_AS(exp_lambda(ms_one(g)), MdtError);
  MSeries f(g);
  f.add_term({1}, MotiveScalar::one());
  CHECK_THROWS_AS(log_lambda(f), MdtError); // constant term 0, not 1
  try {
    exp_lambda(ms_one(g));
    CHECK(false);
  } catch (const MdtError& e) {
    CHECK(e.kind() == Err::NonzeroConstantTerm);
  }
  // non-integral output is rejected loudly
  MSeries h(g);
  h.add_term({1}, MotiveScalar::rational(1, 2));
  try {
    exp_lambda(h);
    CHECK(false);
  } catch (const MdtError& e) {
    CHECK(e.kind() == Err::NonIntegralCoefficient);
  }
}

TEST_CASE("weight-zero variables are rejected by Exp even at exponent zero only") {
  Grading g({"s", "y"}, {1, 0}, 4);
  MSeries f(g);
  f.add_term({0, 2}, MotiveScalar::one()); // weighted degree 0 but not constant
  CHECK_THROWS_AS(exp_lambda(f), MdtError);
  MSeries ok(g);
  ok.add_term({1, 3}, MotiveScalar::one());
  CHECK(exp_lambda(ok).coefficient({1, 3}) == MotiveScalar::one());
}

TEST_CASE("sum over n of x^n / (q)_n equals Exp(x/(1-q))") {
  // q-exponential summation, checked as truncated series in x to order 8
  Grading g = g1(8);
  MSeries arg(g);
  arg.add_term({1}, MotiveScalar::inv_one_minus_v(2)); // 1/(1-L)
  MSeries e = exp_lambda(arg);
  MotiveScalar L = MotiveScalar::L_power(1);
  for (int n = 0; n <= 8; ++n)
    CHECK(e.coefficient({n}) == pochhammer(L, n).inverse());
}

TEST_CASE("Pow interpolates integer powers") {
  Grading g = g2(5);
  std::mt19937 rng(23);
  MSeries f = ms_one(g) + random_positive(rng, g);
  CHECK(pow_structure(f, MotiveScalar::one()) == f);
  CHECK(pow_structure(f, MotiveScalar::integer(2)) == f * f);
  CHECK(pow_structure(f, MotiveScalar::integer(-1)) == ms_inverse_unit(f));
  CHECK(pow_structure(f, MotiveScalar::zero()) == ms_one(g));
}

TEST_CASE("Pow with motive exponent") {
  // Pow(1/(1-x), L) = Exp(L x/(1-x)·...) sanity: coefficient of x is L
  Grading g = g1(4);
  MSeries geo = geometric_factor(g, MotiveScalar::one(), {1}, 1);
  MSeries p = pow_structure(geo, MotiveScalar::L_power(1));
  CHECK(p.coefficient({0}) == MotiveScalar::one());
  CHECK(p.coefficient({1}) == MotiveScalar::L_power(1));
  // all coefficients integral by construction (Exp asserts this internally)
}

TEST_CASE("Pow is a homomorphism in the exponent") {
  Grading g = g2(4);
  std::mt19937 rng(71);
  MSeries f = ms_one(g) + random_positive(rng, g);
  MotiveScalar a = MotiveScalar::L_power(1);
  MotiveScalar b = MotiveScalar::L_power(-1) + MotiveScalar::integer(1);
  CHECK(pow_structure(f, a + b) == pow_structure(f, a) * pow_structure(f, b));
  // and Pow(Exp g, s) = Exp(s g)
  MSeries h = random_positive(rng, g);
  CHECK(pow_structure(exp_lambda(h), a) == exp_lambda(scalar_mul(a, h)));
}

TEST_CASE("Adams operations on series") {
  Grading g = g2(6);
  MSeries f(g);
  f.add_term({1, 0}, MotiveScalar::v_power(1));
  f.add_term({1, 1}, MotiveScalar::integer(3));
  MSeries f2 = adams_series(f, 2);
  CHECK(f2.coefficient({2, 0}) == MotiveScalar::v_power(2));
  CHECK(f2.coefficient({2, 2}) == MotiveScalar::integer(3));
  CHECK(adams_series(f, 1) == f);
  CHECK_THROWS_AS(adams_series(f, 0), MdtError);
}

TEST_CASE("quantum torus product") {
  Grading g = g2(4);
  std::vector<std::vector<long>> skew = {{0, 1}, {-1, 0}};
  MSeries y1 = ms_monomial(g, {1, 0}, MotiveScalar::one());
  MSeries y2 = ms_monomial(g, {0, 1}, MotiveScalar::one());
  // y1 y2 = (-L^{1/2}) y^{(1,1)}, y2 y1 = (-L^{-1/2}) y^{(1,1)}
  CHECK(quantum_mul(y1, y2, skew).coefficient({1, 1}) == MotiveScalar::v_power(1, -1));
  CHECK(quantum_mul(y2, y1, skew).coefficient({1, 1}) == MotiveScalar::v_power(-1, -1));
  // associativity on random series
  std::mt19937 rng(31);
  for (int i = 0; i < 5; ++i) {
    MSeries a = random_positive(rng, g);
    MSeries b = random_positive(rng, g);
    MSeries c = random_positive(rng, g);
    CHECK(quantum_mul(quantum_mul(a, b, skew), c, skew) ==
          quantum_mul(a, quantum_mul(b, c, skew), skew));
  }
  std::vector<std::vector<long>> bad = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(quantum_mul(y1, y2, bad), MdtError);
}

TEST_CASE("twist and sign flip") {
  Grading g = g2(4);
  MSeries f(g);
  f.add_term({2, 1}, MotiveScalar::one());
  MSeries t = twist_Sv(f, {1, 1}); // multiplies by (-L^{1/2})^3
  CHECK(t.coefficient({2, 1}) == MotiveScalar::v_power(3, -1));
  MSeries s = sign_flip(f, 1);
  CHECK(s.coefficient({2, 1}) == -MotiveScalar::one());
  CHECK(sign_flip(s, 1) == f);
}

TEST_CASE("reindex performs monomial substitution") {
  // x^n -> y^{(n, 2n)} and keep coefficients
  Grading ga = g1(3);
  Grading gb({"u", "w"}, {1, 1}, 9);
  MSeries f(ga);
  f.add_term({1}, MotiveScalar::L_power(1));
  f.add_term({3}, MotiveScalar::integer(-2));
  MSeries r = ms_reindex(f, gb, [](const std::vector<int>& e) {
    return std::vector<int>{e[0], 2 * e[0]};
  });
  CHECK(r.coefficient({1, 2}) == MotiveScalar::L_power(1));
  CHECK(r.coefficient({3, 6}) == MotiveScalar::integer(-2));
  CHECK(r.terms().size() == 2);
}
