#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdt/laurent.hpp"

namespace mdt {

// Element of the coefficient ring: a rational function of the single
// formal variable v = L^{1/2}, so L^n is v^{2n} and (-L^{1/2})^k is
// (-1)^k v^k.
//
// Internally the denominator is kept factored as
//     cden * prod_k (1 - v^k)^{e_k} * dother
// with cden a positive integer, the middle part the Pochhammer-type
// atoms every formula here produces, and dother a primitive polynomial
// (usually 1, only user-supplied fractions populate it). Numerator and
// denominator are not cross-reduced on every operation; the canonical
// reduced pair demanded by the external interface is materialized by
// reduced() and backs equality, serialization and evaluation.
//
// Eager invariants after every operation:
//   gcd(content(num), cden) == 1, dother primitive with positive
//   leading coefficient, atoms sorted by k with multiplicities >= 1,
//   zero is stored as 0/1.
// By Gauss's lemma the fully reduced denominator then has integer
// content exactly cden, so is_integral() == (cden == 1).
class MotiveScalar {
public:
  MotiveScalar() = default;

  static MotiveScalar zero() { return MotiveScalar(); }
  static MotiveScalar one() { return from_laurent(LaurentZ::one()); }
  static MotiveScalar integer(long n) { return from_laurent(LaurentZ(mpz_class(n))); }
  static MotiveScalar rational(const mpq_class& r);
  static MotiveScalar rational(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return rational(r);
  }
  static MotiveScalar from_laurent(const LaurentZ& p);
  // c * v^k
  static MotiveScalar v_power(int k, long c = 1) { return from_laurent(LaurentZ::monomial(c, k)); }
  // L^n = v^{2n}
  static MotiveScalar L_power(int n) { return v_power(2 * n); }
  // (-L^{1/2})^k = (-1)^k v^k
  static MotiveScalar neg_half_pow(int k) { return v_power(k, k % 2 == 0 ? 1 : -1); }
  // 1 - v^k (k >= 1)
  static MotiveScalar one_minus_v(int k);
  // 1 / (1 - v^k)^e
  static MotiveScalar inv_one_minus_v(int k, int e = 1);
  // general fraction, fully reduced at construction
  static MotiveScalar fraction(const LaurentZ& num, const LaurentZ& den);

  bool is_zero() const { return num_.is_zero(); }
  bool trivial_den() const { return cden_ == 1 && atoms_.empty() && dother_.is_one(); }
  bool is_integral() const { return cden_ == 1; }

  MotiveScalar operator-() const;
  MotiveScalar operator+(const MotiveScalar& o) const;
  MotiveScalar operator-(const MotiveScalar& o) const;
  MotiveScalar operator*(const MotiveScalar& o) const;
  MotiveScalar& operator+=(const MotiveScalar& o) { return *this = *this + o; }
  MotiveScalar& operator*=(const MotiveScalar& o) { return *this = *this * o; }
  bool operator==(const MotiveScalar& o) const;
  bool operator!=(const MotiveScalar& o) const { return !(*this == o); }

  MotiveScalar inverse() const;
  MotiveScalar pow(int e) const;

  // Adams operation psi_n: v -> v^n
  MotiveScalar adams(int n) const;

  struct Reduced {
    LaurentZ num;
    LaurentZ den;  // plain polynomial, nonzero constant term, positive leading coefficient
  };
  Reduced reduced() const;

  // evaluation at v = 1 (Euler characteristic specialization)
  mpq_class euler_value() const;
  // evaluation at L = q, i.e. v^2 = q
  mpq_class evaluate_at_prime_power(long q) const;

  std::string text() const;  // rendered in L with half powers L^(k/2)

private:
  void normalize_content();
  LaurentZ expand_den() const;

  LaurentZ num_;
  mpz_class cden_ = 1;
  std::vector<std::pair<int, int>> atoms_;
  LaurentZ dother_ = LaurentZ::one();
};

// (x)_n = prod_{k=1..n} (1 - x^k); (x)_0 = 1
MotiveScalar pochhammer(const MotiveScalar& x, int n);

// [GL_n] = L^{n^2} (L^{-1})_n = prod_{k=0..n-1} (L^n - L^k)
MotiveScalar gl_motive(int n);

MotiveScalar adams_scalar(const MotiveScalar& x, int n);

std::string laurent_text_L(const LaurentZ& p);  // polynomial rendering used by text()

} // namespace mdt
