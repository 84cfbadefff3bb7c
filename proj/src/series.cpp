#include "mdt/series.hpp"

#include <algorithm>

#include "mdt/errors.hpp"

namespace mdt {

namespace {

std::string exp_text(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

void require_same_grading(const Grading& a, const Grading& b) {
  if (a != b) fail(Err::GradingMismatch, "series live in different gradings");
}

std::vector<int> exp_sum(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// mu(n) for the Adams sums; n stays small (bounded by the grading bound)
int moebius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

// terms grouped by weighted degree, plain lex inside a level
using Level = std::map<std::vector<int>, MotiveScalar>;
using Levels = std::map<long long, Level>;

Levels to_levels(const MSeries& f) {
  Levels lv;
  for (const auto& [e, c] : f.terms()) lv[f.grading().wdeg(e)][e] = c;
  return lv;
}

MSeries from_levels(const Grading& g, const Levels& lv) {
  MSeries r(g);
  for (const auto& [d, level] : lv)
    for (const auto& [e, c] : level) r.add_term(e, c);
  return r;
}

void assert_integral(const MSeries& f, const char* op) {
  for (const auto& [e, c] : f.terms())
    if (!c.is_integral())
      fail(Err::NonIntegralCoefficient,
           std::string(op) + ": coefficient at " + exp_text(e) +
               " is not integral: " + c.text());
}

} // namespace

Grading::Grading(std::vector<std::string> v, std::vector<int> w, long long b)
    : vars(std::move(v)), weights(std::move(w)), bound(b) {
  if (vars.empty() || vars.size() != weights.size())
    fail(Err::BadInput, "grading needs matching variable and weight lists");
  bool allzero = true;
  for (int x : weights) {
    if (x < 0) fail(Err::BadInput, "grading weights must be >= 0");
    if (x != 0) allzero = false;
  }
  if (allzero) fail(Err::BadInput, "grading weights must not all be zero");
  if (bound < 0) fail(Err::BadInput, "grading bound must be >= 0");
}

long long Grading::wdeg(const std::vector<int>& e) const {
  long long d = 0;
  for (size_t i = 0; i < weights.size(); ++i) d += (long long)weights[i] * e[i];
  return d;
}

bool TermOrder::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long long da = 0, db = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    da += (long long)w[i] * a[i];
    db += (long long)w[i] * b[i];
  }
  if (da != db) return da < db;
  return a < b;
}

MSeries::MSeries(Grading g) : g_(std::move(g)), t_(TermOrder{g_.weights}) {}

MotiveScalar MSeries::coefficient(const std::vector<int>& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? MotiveScalar::zero() : it->second;
}

void MSeries::add_term(const std::vector<int>& e, const MotiveScalar& c) {
  if (e.size() != g_.arity()) fail(Err::BadInput, "exponent arity mismatch");
  // negative exponents are Laurent directions, legal only where the weight
  // is zero so the truncation stays meaningful
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 && g_.weights[i] != 0)
      fail(Err::BadInput, "negative exponent " + exp_text(e));
  if (c.is_zero() || g_.wdeg(e) > g_.bound) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void MSeries::set_term(const std::vector<int>& e, const MotiveScalar& c) {
  t_.erase(e);
  add_term(e, c);
}

bool MSeries::operator==(const MSeries& o) const {
  if (g_ != o.g_ || t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [e, c] : t_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

MSeries ms_zero(const Grading& g) { return MSeries(g); }

MSeries ms_one(const Grading& g) { return ms_const(g, MotiveScalar::one()); }

MSeries ms_const(const Grading& g, const MotiveScalar& c) {
  MSeries r(g);
  r.add_term(std::vector<int>(g.arity(), 0), c);
  return r;
}

MSeries ms_monomial(const Grading& g, const std::vector<int>& e, const MotiveScalar& c) {
  MSeries r(g);
  r.add_term(e, c);
  return r;
}

MSeries operator+(const MSeries& a, const MSeries& b) {
  require_same_grading(a.grading(), b.grading());
  MSeries r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

MSeries operator-(const MSeries& a, const MSeries& b) {
  require_same_grading(a.grading(), b.grading());
  MSeries r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
  require_same_grading(a.grading(), b.grading());
  const Grading& g = a.grading();
  MSeries r(g);
  for (const auto& [ea, ca] : a.terms()) {
    long long room = g.bound - g.wdeg(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (g.wdeg(eb) > room) break; // terms sorted by weighted degree
      r.add_term(exp_sum(ea, eb), ca * cb);
    }
  }
  return r;
}

MSeries scalar_mul(const MotiveScalar& c, const MSeries& f) {
  MSeries r(f.grading());
  if (c.is_zero()) return r;
  for (const auto& [e, x] : f.terms()) r.add_term(e, c * x);
  return r;
}

MSeries quantum_mul(const MSeries& a, const MSeries& b,
                    const std::vector<std::vector<long>>& skew) {
  require_same_grading(a.grading(), b.grading());
  const Grading& g = a.grading();
  size_t m = g.arity();
  if (skew.size() != m) fail(Err::BadInput, "skew form size mismatch");
  for (size_t i = 0; i < m; ++i) {
    if (skew[i].size() != m) fail(Err::BadInput, "skew form size mismatch");
    for (size_t j = 0; j < m; ++j)
      if (skew[i][j] != -skew[j][i])
        fail(Err::NotAntisymmetric, "quantum product needs an antisymmetric form");
  }
  MSeries r(g);
  for (const auto& [ea, ca] : a.terms()) {
    long long room = g.bound - g.wdeg(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (g.wdeg(eb) > room) break;
      long long pairing = 0;
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) pairing += skew[i][j] * (long long)ea[i] * eb[j];
      r.add_term(exp_sum(ea, eb),
                 ca * cb * MotiveScalar::neg_half_pow((long)pairing));
    }
  }
  return r;
}

MSeries adams_series(const MSeries& f, int n) {
  if (n < 1) fail(Err::BadInput, "Adams index must be >= 1");
  const Grading& g = f.grading();
  MSeries r(g);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> en(e.size());
    for (size_t i = 0; i < e.size(); ++i) en[i] = e[i] * n;
    if (g.wdeg(en) > g.bound) break; // larger terms scale out of region too
    r.add_term(en, c.adams(n));
  }
  return r;
}

namespace {

// classical exp of a series whose terms all have weighted degree >= 1,
// via the Euler-operator recursion d*exp_d = sum (wdeg of g-part)*g*exp_rest
Levels exp_levels(const Grading& g, const Levels& arg) {
  Levels r;
  r[0][std::vector<int>(g.arity(), 0)] = MotiveScalar::one();
  for (long long d = 1; d <= g.bound; ++d) {
    Level acc;
    for (const auto& [d1, gl] : arg) {
      if (d1 > d) break;
      auto it = r.find(d - d1);
      if (it == r.end()) continue;
      MotiveScalar w1 = MotiveScalar::integer(d1);
      for (const auto& [e1, c1] : gl) {
        MotiveScalar wc = w1 * c1;
        for (const auto& [e2, c2] : it->second) {
          auto e = exp_sum(e1, e2);
          auto [jt, fresh] = acc.emplace(e, wc * c2);
          if (!fresh) jt->second += wc * c2;
        }
      }
    }
    if (acc.empty()) continue;
    Level& lvl = r[d];
    MotiveScalar inv_d = MotiveScalar::rational(1, d);
    for (auto& [e, c] : acc) {
      c *= inv_d;
      if (!c.is_zero()) lvl.emplace(e, std::move(c));
    }
    if (lvl.empty()) r.erase(d);
  }
  return r;
}

} // namespace

MSeries exp_lambda(const MSeries& f) {
  const Grading& g = f.grading();
  for (const auto& [e, c] : f.terms()) {
    if (g.wdeg(e) == 0)
      fail(Err::NonzeroConstantTerm,
           "Exp argument has a weight-zero term at " + exp_text(e));
    break; // terms sorted by weighted degree, first one suffices
  }
  // sum of Adams pieces psi_n(f)/n
  MSeries arg(g);
  for (int n = 1; n <= g.bound; ++n) {
    MSeries fn = adams_series(f, n);
    if (fn.is_zero()) break;
    arg = arg + scalar_mul(MotiveScalar::rational(1, n), fn);
  }
  MSeries r = from_levels(g, exp_levels(g, to_levels(arg)));
  assert_integral(r, "Exp");
  return r;
}

MSeries ms_inverse_unit(const MSeries& f) {
  const Grading& g = f.grading();
  std::vector<int> zero(g.arity(), 0);
  if (f.coefficient(zero) != MotiveScalar::one())
    fail(Err::ConstantTermNotOne, "series inverse needs constant term 1");
  for (const auto& [e, c] : f.terms())
    if (e != zero && g.wdeg(e) == 0)
      fail(Err::ConstantTermNotOne,
           "series inverse: weight-zero term at " + exp_text(e));
  Levels fl = to_levels(f);
  fl[0].erase(zero);
  if (fl[0].empty()) fl.erase(0);
  Levels u;
  u[0][zero] = MotiveScalar::one();
  for (long long d = 1; d <= g.bound; ++d) {
    Level acc;
    for (const auto& [d1, fl1] : fl) {
      if (d1 > d) break;
      auto it = u.find(d - d1);
      if (it == u.end()) continue;
      for (const auto& [e1, c1] : fl1)
        for (const auto& [e2, c2] : it->second) {
          auto e = exp_sum(e1, e2);
          MotiveScalar t = -(c1 * c2);
          auto [jt, fresh] = acc.emplace(e, t);
          if (!fresh) jt->second += t;
        }
    }
    if (acc.empty()) continue;
    Level& lvl = u[d];
    for (auto& [e, c] : acc)
      if (!c.is_zero()) lvl.emplace(e, std::move(c));
    if (lvl.empty()) u.erase(d);
  }
  return from_levels(g, u);
}

MSeries log_lambda(const MSeries& f) {
  const Grading& g = f.grading();
  std::vector<int> zero(g.arity(), 0);
  if (f.coefficient(zero) != MotiveScalar::one())
    fail(Err::ConstantTermNotOne, "Log needs constant term 1");
  for (const auto& [e, c] : f.terms())
    if (e != zero && g.wdeg(e) == 0)
      fail(Err::ConstantTermNotOne, "Log argument has a weight-zero term at " + exp_text(e));
  // classical log via W(e)*log_e = (E(f) * f^{-1})_e with E the Euler operator
  MSeries u = ms_inverse_unit(f);
  MSeries ef(g);
  for (const auto& [e, c] : f.terms()) {
    long long d = g.wdeg(e);
    if (d > 0) ef.add_term(e, MotiveScalar::integer(d) * c);
  }
  MSeries h = ef * u;
  MSeries lg(g);
  for (const auto& [e, c] : h.terms())
    lg.add_term(e, MotiveScalar::rational(1, g.wdeg(e)) * c);
  // Moebius inversion of the Adams sum
  MSeries r(g);
  for (int n = 1; n <= g.bound; ++n) {
    int mu = moebius(n);
    if (mu == 0) continue;
    MSeries ln = adams_series(lg, n);
    if (ln.is_zero()) break; // all terms of lg scaled out of region
    r = r + scalar_mul(MotiveScalar::rational(mu, n), ln);
  }
  return r;
}

MSeries pow_structure(const MSeries& f, const MotiveScalar& s) {
  return exp_lambda(scalar_mul(s, log_lambda(f)));
}

MSeries twist_Sv(const MSeries& f, const std::vector<int>& w) {
  const Grading& g = f.grading();
  if (w.size() != g.arity()) fail(Err::BadInput, "twist vector arity mismatch");
  MSeries r(g);
  for (const auto& [e, c] : f.terms()) {
    long k = 0;
    for (size_t i = 0; i < w.size(); ++i) k += (long)w[i] * e[i];
    r.add_term(e, c * MotiveScalar::neg_half_pow(k));
  }
  return r;
}

MSeries sign_flip(const MSeries& f, size_t var) {
  const Grading& g = f.grading();
  if (var >= g.arity()) fail(Err::BadInput, "sign flip variable out of range");
  MSeries r(g);
  for (const auto& [e, c] : f.terms())
    r.add_term(e, e[var] % 2 ? -c : c);
  return r;
}

MSeries geometric_factor(const Grading& g, const MotiveScalar& c,
                         const std::vector<int>& alpha, int e) {
  if (alpha.size() != g.arity()) fail(Err::BadInput, "exponent arity mismatch");
  bool allzero = true;
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 && g.weights[i] != 0)
      fail(Err::BadInput, "negative exponent in geometric factor");
    if (alpha[i] != 0) allzero = false;
  }
  if (allzero || g.wdeg(alpha) == 0)
    fail(Err::ZeroExponentVector, "geometric factor needs weighted degree >= 1");
  long long step = g.wdeg(alpha);
  MSeries r(g);
  if (e >= 0) {
    // (1 - c y^a)^{-e}: coefficient of y^{ka} is C(k+e-1, e-1) c^k
    mpz_class binom = 1;
    MotiveScalar ck = MotiveScalar::one();
    std::vector<int> ka(alpha.size(), 0);
    for (long long k = 0; k * step <= g.bound; ++k) {
      if (k > 0) {
        if (e == 0) break;
        binom = binom * (long)(k + e - 1) / (long)k;
        ck *= c;
        for (size_t i = 0; i < alpha.size(); ++i) ka[i] += alpha[i];
      }
      r.add_term(ka, MotiveScalar::from_laurent(LaurentZ(binom)) * ck);
    }
  } else {
    long long m = -(long long)e;
    mpz_class binom = 1;
    MotiveScalar ck = MotiveScalar::one();
    std::vector<int> ka(alpha.size(), 0);
    for (long long k = 0; k <= m && k * step <= g.bound; ++k) {
      if (k > 0) {
        binom = binom * (long)(m - k + 1) / (long)k;
        ck *= -c;
        for (size_t i = 0; i < alpha.size(); ++i) ka[i] += alpha[i];
      }
      r.add_term(ka, MotiveScalar::from_laurent(LaurentZ(binom)) * ck);
    }
  }
  return r;
}

MSeries ms_reindex(const MSeries& f, const Grading& g2,
                   const std::function<std::vector<int>(const std::vector<int>&)>& fn) {
  MSeries r(g2);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> e2 = fn(e);
    if (e2.size() != g2.arity()) fail(Err::BadInput, "reindex image arity mismatch");
    bool neg = false;
    for (size_t i = 0; i < e2.size(); ++i)
      if (e2[i] < 0 && g2.weights[i] != 0) neg = true;
    if (neg || g2.wdeg(e2) > g2.bound) continue;
    r.add_term(e2, c);
  }
  return r;
}

} // namespace mdt
