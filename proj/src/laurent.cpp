#include "mdt/laurent.hpp"

#include <algorithm>
#include <cassert>

namespace mdt {

LaurentZ LaurentZ::monomial(const mpz_class& c, int exp) {
  LaurentZ r;
  if (c != 0) {
    r.low_ = exp;
    r.coeffs_ = {c};
  }
  return r;
}

LaurentZ LaurentZ::from_coeffs(int low, std::vector<mpz_class> cs) {
  LaurentZ r;
  r.low_ = low;
  r.coeffs_ = std::move(cs);
  r.trim();
  return r;
}

void LaurentZ::trim() {
  size_t hi = coeffs_.size();
  while (hi > 0 && coeffs_[hi - 1] == 0) --hi;
  coeffs_.resize(hi);
  size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
    low_ += static_cast<int>(lo);
  }
  if (coeffs_.empty()) low_ = 0;
}

mpz_class LaurentZ::coeff_at(int exp) const {
  if (is_zero() || exp < low_ || exp > high()) return 0;
  return coeffs_[static_cast<size_t>(exp - low_)];
}

LaurentZ LaurentZ::operator-() const {
  LaurentZ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  std::vector<mpz_class> cs(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) cs[static_cast<size_t>(low_ - lo) + i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) cs[static_cast<size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  return from_coeffs(lo, std::move(cs));
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const { return *this + (-o); }

LaurentZ LaurentZ::operator*(const LaurentZ& o) const {
  if (is_zero() || o.is_zero()) return LaurentZ();
  std::vector<mpz_class> cs(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) cs[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coeffs(low_ + o.low_, std::move(cs));
}

LaurentZ LaurentZ::shifted(int k) const {
  LaurentZ r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentZ LaurentZ::stride(int n) const {
  assert(n >= 1);
  if (is_zero() || n == 1) return *this;
  std::vector<mpz_class> cs(static_cast<size_t>(coeffs_.size() - 1) * static_cast<size_t>(n) + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) cs[i * static_cast<size_t>(n)] = coeffs_[i];
  return from_coeffs(low_ * n, std::move(cs));
}

LaurentZ LaurentZ::mul_int(const mpz_class& c) const {
  if (c == 0) return LaurentZ();
  LaurentZ r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

void LaurentZ::div_int_exact(const mpz_class& c) {
  assert(c != 0);
  for (auto& x : coeffs_) {
    assert(x % c == 0);
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
}

mpz_class LaurentZ::eval_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool LaurentZ::even_only() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return false;
  return true;
}

mpq_class LaurentZ::eval_L(const mpq_class& q) const {
  mpq_class s = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    int e = (low_ + static_cast<int>(i)) / 2;
    mpq_class p = 1;
    if (e >= 0) {
      for (int k = 0; k < e; ++k) p *= q;
    } else {
      if (q == 0) fail(Err::DenominatorZero, "negative power of zero");
      for (int k = 0; k < -e; ++k) p /= q;
    }
    s += mpq_class(coeffs_[i]) * p;
  }
  return s;
}

mpz_class LaurentZ::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

namespace {

// primitive part: content and v-shift removed, leading coefficient positive
LaurentZ primitive_poly(const LaurentZ& a) {
  if (a.is_zero()) return a;
  LaurentZ r = a.shifted(-a.low());
  mpz_class c = r.content();
  if (r.leading() < 0) c = -c;
  r.div_int_exact(c);
  return r;
}

// pseudo-remainder of a by b (both plain polynomials, b nonzero, deg a >= deg b)
LaurentZ pseudo_rem(LaurentZ a, const LaurentZ& b) {
  int db = b.high();
  const mpz_class& lb = b.leading();
  while (!a.is_zero() && a.high() >= db) {
    int k = a.high() - db;
    LaurentZ t = b.shifted(k).mul_int(a.leading());
    a = a.mul_int(lb) - t;
  }
  return a;
}

} // namespace

LaurentZ laurent_gcd(const LaurentZ& a0, const LaurentZ& b0) {
  if (a0.is_zero() && b0.is_zero()) return LaurentZ();
  if (a0.is_zero()) return primitive_poly(b0).mul_int(b0.content());
  if (b0.is_zero()) return primitive_poly(a0).mul_int(a0.content());
  mpz_class c = gcd(a0.content(), b0.content());
  LaurentZ a = primitive_poly(a0);
  LaurentZ b = primitive_poly(b0);
  if (a.high() < b.high()) std::swap(a, b);
  while (!b.is_zero()) {
    LaurentZ r = pseudo_rem(a, b);
    a = b;
    b = primitive_poly(r);
  }
  return a.mul_int(c);
}

LaurentZ laurent_div_exact(const LaurentZ& a, const LaurentZ& b) {
  assert(!b.is_zero());
  if (a.is_zero()) return a;
  // reduce to plain polynomial division; the v-shift difference rides along
  LaurentZ num = a.shifted(-a.low());
  LaurentZ den = b.shifted(-b.low());
  int shift = a.low() - b.low();
  std::vector<mpz_class> q(static_cast<size_t>(num.high() - den.high() + 1));
  LaurentZ rem = num;
  const mpz_class& lb = den.leading();
  while (!rem.is_zero() && rem.high() >= den.high()) {
    int k = rem.high() - den.high();
    mpz_class qc;
    assert(rem.leading() % lb == 0);
    mpz_divexact(qc.get_mpz_t(), rem.leading().get_mpz_t(), lb.get_mpz_t());
    q[static_cast<size_t>(k)] = qc;
    rem = rem - den.shifted(k).mul_int(qc);
  }
  assert(rem.is_zero());
  return LaurentZ::from_coeffs(shift, std::move(q));
}

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::PoleAtOne: return "PoleAtOne";
    case Err::HalfPowerPresent: return "HalfPowerPresent";
    case Err::DenominatorZero: return "DenominatorZero";
    case Err::GradingMismatch: return "GradingMismatch";
    case Err::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Err::ConstantTermNotOne: return "ConstantTermNotOne";
    case Err::ZeroExponentVector: return "ZeroExponentVector";
    case Err::NotAntisymmetric: return "NotAntisymmetric";
    case Err::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Err::UnknownType: return "UnknownType";
    case Err::UnknownGroup: return "UnknownGroup";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NotPrimePower: return "NotPrimePower";
    case Err::TooLarge: return "TooLarge";
    case Err::InsufficientSamples: return "InsufficientSamples";
    case Err::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case Err::MissingKacEntry: return "MissingKacEntry";
    case Err::NotGeneric: return "NotGeneric";
    case Err::NotPolynomialInT: return "NotPolynomialInT";
    case Err::SerializationOverflow: return "SerializationOverflow";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

} // namespace mdt
