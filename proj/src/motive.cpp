#include "mdt/motive.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mdt {

MotiveScalar MotiveScalar::from_laurent(const LaurentZ& p) {
  MotiveScalar r;
  r.num_ = p;
  return r;
}

MotiveScalar MotiveScalar::rational(const mpq_class& r0) {
  mpq_class r = r0;
  r.canonicalize();
  MotiveScalar m;
  m.num_ = LaurentZ(r.get_num());
  m.cden_ = r.get_den();
  return m;
}

MotiveScalar MotiveScalar::one_minus_v(int k) {
  assert(k >= 1);
  std::vector<mpz_class> cs(static_cast<size_t>(k) + 1);
  cs[0] = 1;
  cs[static_cast<size_t>(k)] = -1;
  return from_laurent(LaurentZ::from_coeffs(0, std::move(cs)));
}

MotiveScalar MotiveScalar::inv_one_minus_v(int k, int e) {
  assert(k >= 1 && e >= 1);
  MotiveScalar r = one();
  r.atoms_ = {{k, e}};
  return r;
}

void MotiveScalar::normalize_content() {
  if (num_.is_zero()) {
    cden_ = 1;
    atoms_.clear();
    dother_ = LaurentZ::one();
    return;
  }
  if (cden_ != 1) {
    mpz_class g = gcd(num_.content(), cden_);
    if (g > 1) {
      num_.div_int_exact(g);
      mpz_divexact(cden_.get_mpz_t(), cden_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

MotiveScalar MotiveScalar::operator-() const {
  MotiveScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

MotiveScalar MotiveScalar::operator*(const MotiveScalar& o) const {
  if (is_zero() || o.is_zero()) return MotiveScalar();
  MotiveScalar r;
  r.num_ = num_ * o.num_;
  r.cden_ = cden_ * o.cden_;
  if (atoms_.empty()) {
    r.atoms_ = o.atoms_;
  } else if (o.atoms_.empty()) {
    r.atoms_ = atoms_;
  } else {
    size_t i = 0, j = 0;
    while (i < atoms_.size() || j < o.atoms_.size()) {
      if (j == o.atoms_.size() || (i < atoms_.size() && atoms_[i].first < o.atoms_[j].first))
        r.atoms_.push_back(atoms_[i++]);
      else if (i == atoms_.size() || o.atoms_[j].first < atoms_[i].first)
        r.atoms_.push_back(o.atoms_[j++]);
      else {
        r.atoms_.emplace_back(atoms_[i].first, atoms_[i].second + o.atoms_[j].second);
        ++i, ++j;
      }
    }
  }
  if (dother_.is_one())
    r.dother_ = o.dother_;
  else if (o.dother_.is_one())
    r.dother_ = dother_;
  else
    r.dother_ = dother_ * o.dother_;
  r.normalize_content();
  return r;
}

namespace {
LaurentZ atom_poly(int k) {
  std::vector<mpz_class> cs(static_cast<size_t>(k) + 1);
  cs[0] = 1;
  cs[static_cast<size_t>(k)] = -1;
  return LaurentZ::from_coeffs(0, std::move(cs));
}
} // namespace

MotiveScalar MotiveScalar::operator+(const MotiveScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  MotiveScalar r;
  // common denominator: lcm of integer parts, atom-wise max, product of
  // distinct residual polynomials
  r.cden_ = cden_ / gcd(cden_, o.cden_) * o.cden_;
  LaurentZ na = num_.mul_int(r.cden_ / cden_);
  LaurentZ nb = o.num_.mul_int(r.cden_ / o.cden_);
  size_t i = 0, j = 0;
  while (i < atoms_.size() || j < o.atoms_.size()) {
    int k, ea = 0, eb = 0;
    if (j == o.atoms_.size() || (i < atoms_.size() && atoms_[i].first < o.atoms_[j].first)) {
      k = atoms_[i].first, ea = atoms_[i].second;
      ++i;
    } else if (i == atoms_.size() || o.atoms_[j].first < atoms_[i].first) {
      k = o.atoms_[j].first, eb = o.atoms_[j].second;
      ++j;
    } else {
      k = atoms_[i].first, ea = atoms_[i].second, eb = o.atoms_[j].second;
      ++i, ++j;
    }
    int e = std::max(ea, eb);
    r.atoms_.emplace_back(k, e);
    LaurentZ p = atom_poly(k);
    for (int t = 0; t < e - ea; ++t) na = na * p;
    for (int t = 0; t < e - eb; ++t) nb = nb * p;
  }
  if (dother_ == o.dother_) {
    r.dother_ = dother_;
  } else {
    r.dother_ = dother_ * o.dother_;
    na = na * o.dother_;
    nb = nb * dother_;
    if (r.dother_.leading() < 0) {
      r.dother_ = -r.dother_;
      na = -na;
      nb = -nb;
    }
  }
  r.num_ = na + nb;
  if (r.num_.is_zero()) return MotiveScalar();
  r.normalize_content();
  return r;
}

MotiveScalar MotiveScalar::operator-(const MotiveScalar& o) const { return *this + (-o); }

LaurentZ MotiveScalar::expand_den() const {
  LaurentZ d{mpz_class(cden_)};
  for (const auto& [k, e] : atoms_) {
    LaurentZ p = atom_poly(k);
    for (int t = 0; t < e; ++t) d = d * p;
  }
  if (!dother_.is_one()) d = d * dother_;
  return d;
}

MotiveScalar::Reduced MotiveScalar::reduced() const {
  if (is_zero()) return {LaurentZ(), LaurentZ::one()};
  LaurentZ den = expand_den();
  if (trivial_den()) return {num_, den};
  LaurentZ g = laurent_gcd(num_, den);
  LaurentZ n = laurent_div_exact(num_, g);
  LaurentZ d = laurent_div_exact(den, g);
  // common factor cannot contain v^k (den has nonzero constant term), but
  // keep the numerator's shift where it was
  assert(d.low() == 0);
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

bool MotiveScalar::operator==(const MotiveScalar& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  if (trivial_den() && o.trivial_den()) return num_ == o.num_;
  if (num_ == o.num_ && cden_ == o.cden_ && atoms_ == o.atoms_ && dother_ == o.dother_) return true;
  Reduced a = reduced(), b = o.reduced();
  return a.num == b.num && a.den == b.den;
}

MotiveScalar MotiveScalar::fraction(const LaurentZ& num, const LaurentZ& den) {
  if (den.is_zero()) fail(Err::DivisionByZero, "fraction with zero denominator");
  if (num.is_zero()) return MotiveScalar();
  LaurentZ g = laurent_gcd(num, den);
  LaurentZ n = laurent_div_exact(num, g);
  LaurentZ d = laurent_div_exact(den, g);
  n = n.shifted(-d.low());
  d = d.shifted(-d.low());
  MotiveScalar r;
  mpz_class c = d.content();
  if (d.leading() < 0) c = -c;
  d.div_int_exact(c);
  if (c < 0) {
    n = -n;
    c = -c;
  }
  r.cden_ = c;
  // peel off Pochhammer atoms so later arithmetic stays factored
  for (int k = 1; !d.is_one() && k <= d.high(); ++k) {
    LaurentZ p = atom_poly(k);
    while (!d.is_one() && d.high() >= k) {
      LaurentZ q;
      bool divides = true;
      {
        // try exact division; fall through if it is not exact
        LaurentZ rem = d;
        std::vector<mpz_class> qc(static_cast<size_t>(d.high() - k + 1));
        while (!rem.is_zero() && rem.high() >= k) {
          if (rem.leading() % p.leading() != 0) {
            divides = false;
            break;
          }
          mpz_class qq;
          mpz_divexact(qq.get_mpz_t(), rem.leading().get_mpz_t(), p.leading().get_mpz_t());
          qc[static_cast<size_t>(rem.high() - k)] = qq;
          rem = rem - p.shifted(rem.high() - k).mul_int(qq);
        }
        if (divides && rem.is_zero())
          q = LaurentZ::from_coeffs(0, std::move(qc));
        else
          divides = false;
      }
      if (!divides) break;
      d = q;
      if (d.leading() < 0) {
        d = -d;
        n = -n;
      }
      if (r.atoms_.empty() || r.atoms_.back().first != k)
        r.atoms_.emplace_back(k, 1);
      else
        r.atoms_.back().second += 1;
    }
  }
  if (d.leading() < 0) {
    d = -d;
    n = -n;
  }
  r.dother_ = d;
  r.num_ = n;
  r.normalize_content();
  return r;
}

MotiveScalar MotiveScalar::inverse() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  Reduced f = reduced();
  return fraction(f.den, f.num);
}

MotiveScalar MotiveScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  MotiveScalar r = one();
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

MotiveScalar MotiveScalar::adams(int n) const {
  assert(n >= 1);
  if (n == 1 || is_zero()) return *this;
  MotiveScalar r;
  r.num_ = num_.stride(n);
  r.cden_ = cden_;
  r.atoms_.reserve(atoms_.size());
  for (const auto& [k, e] : atoms_) r.atoms_.emplace_back(k * n, e);
  r.dother_ = dother_.stride(n);
  return r;
}

mpq_class MotiveScalar::euler_value() const {
  Reduced f = reduced();
  mpz_class d = f.den.eval_one();
  if (d == 0) fail(Err::PoleAtOne, "denominator vanishes at v = 1: " + laurent_text_L(f.den));
  mpq_class r(f.num.eval_one(), d);
  r.canonicalize();
  return r;
}

mpq_class MotiveScalar::evaluate_at_prime_power(long q) const {
  Reduced f = reduced();
  if (!f.num.even_only() || !f.den.even_only())
    fail(Err::HalfPowerPresent, "odd power of v survives reduction; no value at L = " + std::to_string(q));
  mpq_class dv = f.den.eval_L(mpq_class(q));
  if (dv == 0) fail(Err::DenominatorZero, "denominator vanishes at L = " + std::to_string(q));
  mpq_class r = f.num.eval_L(mpq_class(q)) / dv;
  r.canonicalize();
  return r;
}

MotiveScalar pochhammer(const MotiveScalar& x, int n) {
  assert(n >= 0);
  MotiveScalar r = MotiveScalar::one();
  MotiveScalar xk = MotiveScalar::one();
  for (int k = 1; k <= n; ++k) {
    xk = xk * x;
    r = r * (MotiveScalar::one() - xk);
  }
  return r;
}

MotiveScalar gl_motive(int n) {
  assert(n >= 0);
  MotiveScalar r = MotiveScalar::v_power(2 * n * n);
  return r * pochhammer(MotiveScalar::v_power(-2), n);
}

MotiveScalar adams_scalar(const MotiveScalar& x, int n) { return x.adams(n); }

namespace {
std::string exp_text_L(int k) {
  // v^k in L notation
  if (k == 0) return "1";
  if (k == 2) return "L";
  if (k % 2 == 0) return "L^" + std::to_string(k / 2);
  return "L^(" + std::to_string(k) + "/2)";
}
} // namespace

std::string laurent_text_L(const LaurentZ& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.high(); e >= p.low(); --e) {
    mpz_class c = p.coeff_at(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    mpz_class a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << exp_text_L(e);
    }
    first = false;
  }
  return os.str();
}

std::string MotiveScalar::text() const {
  Reduced f = reduced();
  if (f.den.is_one()) return laurent_text_L(f.num);
  std::string n = laurent_text_L(f.num);
  if (f.num.coeffs().size() > 1) n = "(" + n + ")";
  std::string d = laurent_text_L(f.den);
  if (f.den.coeffs().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

} // namespace mdt
