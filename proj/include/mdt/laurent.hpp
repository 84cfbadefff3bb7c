#pragma once

#include <gmpxx.h>

#include <vector>

#include "mdt/errors.hpp"

namespace mdt {

// Dense Laurent polynomial in one variable with arbitrary-precision
// integer coefficients. Normal form: coeffs empty for zero, otherwise
// first and last entries nonzero. coeffs[i] is the coefficient of
// v^(low + i).
class LaurentZ {
public:
  LaurentZ() = default;
  explicit LaurentZ(const mpz_class& constant) {
    if (constant != 0) coeffs_ = {constant};
  }
  static LaurentZ monomial(const mpz_class& c, int exp);
  static LaurentZ one() { return LaurentZ(mpz_class(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }
  bool is_monomial() const { return coeffs_.size() == 1; }
  // zero has no degrees; callers check is_zero() first
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }
  mpz_class coeff_at(int exp) const;

  LaurentZ operator-() const;
  LaurentZ operator+(const LaurentZ& o) const;
  LaurentZ operator-(const LaurentZ& o) const;
  LaurentZ operator*(const LaurentZ& o) const;
  bool operator==(const LaurentZ& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentZ& o) const { return !(*this == o); }

  LaurentZ shifted(int k) const;        // multiply by v^k
  LaurentZ stride(int n) const;         // v -> v^n, n >= 1
  LaurentZ mul_int(const mpz_class& c) const;
  void div_int_exact(const mpz_class& c);  // divides every coefficient, asserts exact

  mpz_class eval_one() const;           // value at v = 1
  bool even_only() const;               // all exponents even
  mpq_class eval_L(const mpq_class& q) const;  // value at v^2 = q; requires even_only
  mpz_class content() const;            // gcd of coefficients, >= 0; 0 for zero

  // Construct from ascending coefficient list starting at exponent `low`.
  static LaurentZ from_coeffs(int low, std::vector<mpz_class> cs);

private:
  void trim();
  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

// gcd of two Laurent polynomials up to units (v^k and sign): result is a
// plain polynomial with nonzero constant term, positive leading
// coefficient, and content = gcd of the contents.
LaurentZ laurent_gcd(const LaurentZ& a, const LaurentZ& b);

// exact division, asserts divisibility
LaurentZ laurent_div_exact(const LaurentZ& a, const LaurentZ& b);

} // namespace mdt
