#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mdt/motive.hpp"

namespace mdt {

// Truncation data for multivariate series: named variables, a weight per
// variable (>= 0, not all zero) and the weighted-degree bound. Exponents
// with weighted degree > bound are dropped by every operation.
struct Grading {
  std::vector<std::string> vars;
  std::vector<int> weights;
  long long bound = 0;

  Grading() = default;
  Grading(std::vector<std::string> v, std::vector<int> w, long long b);

  size_t arity() const { return vars.size(); }
  long long wdeg(const std::vector<int>& e) const;
  bool operator==(const Grading& o) const {
    return vars == o.vars && weights == o.weights && bound == o.bound;
  }
  bool operator!=(const Grading& o) const { return !(*this == o); }
};

// term order: weighted degree first, then lexicographic
struct TermOrder {
  std::vector<int> w;
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Truncated power series over MotiveScalar with exponents in N^m. Zero
// coefficients are never stored.
class MSeries {
public:
  using TermMap = std::map<std::vector<int>, MotiveScalar, TermOrder>;

  explicit MSeries(Grading g);

  const Grading& grading() const { return g_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  MotiveScalar coefficient(const std::vector<int>& e) const;
  // accumulate c into the coefficient at e; drops the term out of region
  // or when the sum cancels
  void add_term(const std::vector<int>& e, const MotiveScalar& c);
  void set_term(const std::vector<int>& e, const MotiveScalar& c);

  bool operator==(const MSeries& o) const;
  bool operator!=(const MSeries& o) const { return !(*this == o); }

private:
  Grading g_;
  TermMap t_;
};

MSeries ms_zero(const Grading& g);
MSeries ms_one(const Grading& g);
MSeries ms_const(const Grading& g, const MotiveScalar& c);
MSeries ms_monomial(const Grading& g, const std::vector<int>& e, const MotiveScalar& c);

MSeries operator+(const MSeries& a, const MSeries& b);
MSeries operator-(const MSeries& a, const MSeries& b);
MSeries operator*(const MSeries& a, const MSeries& b);
MSeries scalar_mul(const MotiveScalar& c, const MSeries& f);

// product in the quantum torus: y^a y^b = (-L^{1/2})^{<a,b>} y^{a+b} for an
// antisymmetric integer form <.,.>
MSeries quantum_mul(const MSeries& a, const MSeries& b,
                    const std::vector<std::vector<long>>& skew);

// Adams operation: psi_n on coefficients, exponents scaled by n
MSeries adams_series(const MSeries& f, int n);

// lambda-ring exponential Exp(f) = exp(sum_n psi_n(f)/n); every term of f
// must have weighted degree >= 1
MSeries exp_lambda(const MSeries& f);

// inverse of Exp: Log(f) = sum_n mu(n)/n psi_n(log f); f must have constant
// term 1 and all other terms of weighted degree >= 1
MSeries log_lambda(const MSeries& f);

// Pow(f, s) = Exp(s * Log(f))
MSeries pow_structure(const MSeries& f, const MotiveScalar& s);

// S_v twist: y^a -> (-L^{1/2})^{w.a} y^a
MSeries twist_Sv(const MSeries& f, const std::vector<int>& w);

// y_i -> -y_i
MSeries sign_flip(const MSeries& f, size_t var);

// (1 - c y^alpha)^{-e}; for e < 0 this is the polynomial (1 - c y^alpha)^{|e|}
MSeries geometric_factor(const Grading& g, const MotiveScalar& c,
                         const std::vector<int>& alpha, int e);

// multiplicative inverse of a series with constant term 1
MSeries ms_inverse_unit(const MSeries& f);

// pushforward along an exponent map (monomial substitution); images
// falling outside the target region are dropped
MSeries ms_reindex(const MSeries& f, const Grading& g2,
                   const std::function<std::vector<int>(const std::vector<int>&)>& fn);

} // namespace mdt
