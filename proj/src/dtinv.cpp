#include "mdt/dtinv.hpp"

#include <algorithm>

#include "mdt/errors.hpp"

namespace mdt {

namespace {

// 1 / (1 - L^{-1}) = -L / (1 - L)
MotiveScalar inv_one_minus_Linv() {
  return (MotiveScalar::one() - MotiveScalar::L_power(-1)).inverse();
}

std::vector<int> scaled(const std::vector<int>& a, int n) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = n * a[i];
  return out;
}

void check_cover(const Grading& cover, const Grading& g, const char* who) {
  if (cover.vars != g.vars || cover.weights != g.weights || cover.bound < g.bound)
    fail(Err::MissingKacEntry,
         std::string(who) + " table does not cover the requested region");
}

// (s, Q_1..Q_l), s of weight 1, Q's of weight 0, truncated at s^N
Grading sq_grading(int l, int N) {
  std::vector<std::string> vars{"s"};
  std::vector<int> w{1};
  for (int i = 1; i <= l; ++i) {
    vars.push_back("Q" + std::to_string(i));
    w.push_back(0);
  }
  return Grading(std::move(vars), std::move(w), N);
}

} // namespace

KacTable affine_kac_table(const AffineRootSystem& rs, const Grading& cover,
                          int min_level, int max_level) {
  if ((int)cover.arity() != rs.l + 1)
    fail(Err::BadInput, "cover arity does not match the diagram");
  int cap = max_level;
  if (cap < 0) {
    if (cover.weights[0] < 1)
      fail(Err::BadInput,
           "need a level cap when the extending vertex has weight zero");
    cap = (int)std::min<long long>(cover.bound, 1 << 20);
  }
  KacTable k{cover, {}, "closed-form"};
  for (const auto& r : positive_roots_up_to(rs, cap)) {
    if (r.level < min_level) continue;
    if (cover.wdeg(r.alpha) > cover.bound) continue;
    if (r.tag == RootTag::Imaginary)
      k.entries[r.alpha] = LaurentZ::from_coeffs(0, {mpz_class(rs.l), mpz_class(1)});
    else
      k.entries[r.alpha] = LaurentZ::one();
  }
  return k;
}

MSeries universal_series(const KacTable& k, const Grading& g) {
  check_cover(k.cover, g, "Kac");
  MotiveScalar fac = inv_one_minus_Linv();
  MSeries s = ms_zero(g);
  for (const auto& [alpha, aq] : k.entries) {
    if (g.wdeg(alpha) > g.bound) continue;
    s.add_term(alpha, MotiveScalar::from_laurent(aq.stride(2)) * fac);
  }
  return exp_lambda(s);
}

MSeries universal_series_via_pow(const KacTable& k, const Grading& g) {
  check_cover(k.cover, g, "Kac");
  MotiveScalar fac = inv_one_minus_Linv();
  MSeries p = ms_one(g);
  for (const auto& [alpha, aq] : k.entries) {
    if (g.wdeg(alpha) > g.bound) continue;
    MSeries e = exp_lambda(ms_monomial(g, alpha, fac));
    p = p * pow_structure(e, MotiveScalar::from_laurent(aq.stride(2)));
  }
  return p;
}

OmegaTable omega_extract(const MSeries& au) {
  MSeries lg = log_lambda(au);
  MotiveScalar fac = MotiveScalar::one() - MotiveScalar::L_power(-1);
  OmegaTable t{au.grading(), {}};
  for (const auto& [e, c] : lg.terms()) {
    MotiveScalar om = c * fac;
    if (!om.is_zero()) t.entries[e] = om;
  }
  return t;
}

MSeries local_factor(const Grading& g, const PosRoot& r, int l) {
  if (g.arity() != r.alpha.size()) fail(Err::BadInput, "root arity mismatch");
  int a0 = r.alpha[0];
  MSeries out = ms_one(g);
  if (a0 == 0 || g.wdeg(r.alpha) > g.bound) return out;
  for (int j = 1; j <= a0; ++j) {
    if (r.tag == RootTag::Imaginary) {
      out = out * geometric_factor(g, MotiveScalar::v_power(2 * j + 2 - a0), r.alpha, 1);
      if (l > 0)
        out = out * geometric_factor(g, MotiveScalar::v_power(2 * j - a0), r.alpha, l);
    } else {
      out = out * geometric_factor(g, MotiveScalar::v_power(2 * j - a0), r.alpha, 1);
    }
  }
  return out;
}

const char* convention_name(SignConvention c) {
  return c == SignConvention::MinusS ? "minus_s" : "plus_s";
}

SQSeries mckay_series(const AffineRootSystem& rs, SeriesMode mode, int N) {
  if (N < 0) fail(Err::BadInput, "order must be >= 0");
  // assemble in the root basis, where every exponent is a sum of positive
  // roots and stays nonnegative
  std::vector<std::string> yv;
  std::vector<int> yw;
  for (int i = 0; i <= rs.l; ++i) {
    yv.push_back("y" + std::to_string(i));
    yw.push_back(i == 0 ? 1 : 0);
  }
  Grading gy(std::move(yv), std::move(yw), N);
  auto keep = stability_select(rs, mode);
  MSeries prod = ms_one(gy);
  for (const auto& r : positive_roots_up_to(rs, N))
    if (keep(r)) prod = prod * local_factor(gy, r, rs.l);
  // s = y^delta, Q^beta = y^{-beta}: y^e = s^{e0} Q^{e0 delta' - e'}
  Grading gsq = sq_grading(rs.l, N);
  const auto& delta = rs.delta;
  MSeries z = ms_reindex(prod, gsq, [&delta](const std::vector<int>& e) {
    std::vector<int> out(e.size());
    out[0] = e[0];
    for (size_t i = 1; i < e.size(); ++i) out[i] = e[0] * delta[i] - e[i];
    return out;
  });
  return {std::move(z), SignConvention::MinusS, rs.type};
}

SQSeries flip_convention(const SQSeries& z) {
  return {sign_flip(z.series, 0),
          z.convention == SignConvention::MinusS ? SignConvention::PlusS
                                                 : SignConvention::MinusS,
          z.roots_type};
}

std::vector<mpq_class> mode_stability(const AffineRootSystem& rs, SeriesMode mode,
                                      int maxlevel) {
  if (maxlevel < 1) fail(Err::BadInput, "level bound must be >= 1");
  std::vector<mpq_class> zeta(rs.l + 1, 1);
  if (mode == SeriesMode::NCDT) {
    for (auto& z : zeta) z = -1;
    return zeta;
  }
  long h1 = 0;
  for (int i = 1; i <= rs.l; ++i) h1 += rs.delta[i];
  // zeta . delta = -eps for DT (imaginary roots destabilized), +eps for PT,
  // with eps small enough that no root of level <= maxlevel lands on a wall
  mpq_class eps(1, 2 * maxlevel);
  zeta[0] = mpq_class(-h1) + (mode == SeriesMode::DT ? -eps : eps);
  return zeta;
}

MSeries framed_series(const OmegaTable& om, const std::vector<mpq_class>& zeta,
                      const std::vector<int>& w, const Grading& g) {
  if (zeta.size() != g.arity() || w.size() != g.arity())
    fail(Err::BadInput, "stability and framing must match the grading arity");
  if (om.cover.vars != g.vars || om.cover.weights != g.weights ||
      om.cover.bound < g.bound)
    fail(Err::BadInput, "omega table does not cover the requested region");
  MotiveScalar fac = inv_one_minus_Linv();
  MSeries s = ms_zero(g);
  for (const auto& [alpha, omv] : om.entries) {
    if (g.wdeg(alpha) > g.bound) continue;
    mpq_class z = 0;
    long wa = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
      z += zeta[i] * alpha[i];
      wa += (long)w[i] * alpha[i];
    }
    if (z == 0) fail(Err::NotGeneric, "stability vanishes on a support vector");
    if (z > 0) continue;
    MotiveScalar c =
        (MotiveScalar::L_power((int)wa) - MotiveScalar::one()) * fac * omv;
    s.add_term(alpha, c);
  }
  MSeries f = exp_lambda(s);
  std::vector<int> negw(w.size());
  for (size_t i = 0; i < w.size(); ++i) negw[i] = -w[i];
  return twist_Sv(f, negw);
}

MSeries c3_series(const Grading& g, const std::vector<int>& step) {
  long long d = g.wdeg(step);
  if (d < 1) fail(Err::BadInput, "step must have positive weighted degree");
  MSeries out = ms_one(g);
  for (int n = 1; n * d <= g.bound; ++n) {
    auto e = scaled(step, n);
    for (int j = 1; j <= n; ++j)
      out = out * geometric_factor(g, MotiveScalar::v_power(2 * j + 2 - n), e, 1);
  }
  return out;
}

MSeries resolution_series(const Grading& g, const std::vector<int>& step, int l) {
  long long d = g.wdeg(step);
  if (d < 1) fail(Err::BadInput, "step must have positive weighted degree");
  MSeries out = ms_one(g);
  for (int n = 1; n * d <= g.bound; ++n) {
    auto e = scaled(step, n);
    for (int j = 1; j <= n; ++j) {
      out = out * geometric_factor(g, MotiveScalar::v_power(2 * j + 2 - n), e, 1);
      if (l > 0)
        out = out * geometric_factor(g, MotiveScalar::v_power(2 * j - n), e, l);
    }
  }
  return out;
}

SQSeries hilbert_series_ZY(int l, int N) {
  if (l < 0 || N < 0) fail(Err::BadInput, "need l >= 0 and order >= 0");
  Grading g = sq_grading(l, N);
  std::vector<int> step(g.arity(), 0);
  step[0] = 1;
  return {resolution_series(g, step, l), SignConvention::MinusS, ""};
}

MSeries euler_limit(const MSeries& f) {
  MSeries out = ms_zero(f.grading());
  for (const auto& [e, c] : f.terms())
    out.add_term(e, MotiveScalar::rational(c.euler_value()));
  return out;
}

MSeries euler_limit(const SQSeries& z) { return euler_limit(z.series); }

MSeries macmahon_factor(const Grading& g, const std::vector<int>& step,
                        const std::vector<int>& off, int e) {
  if (step.size() != g.arity() || off.size() != g.arity())
    fail(Err::BadInput, "step and offset must match the grading arity");
  long long d = g.wdeg(step);
  if (d < 1) fail(Err::BadInput, "step must have positive weighted degree");
  MSeries out = ms_one(g);
  for (int n = 1;; ++n) {
    std::vector<int> expo(step.size());
    for (size_t i = 0; i < step.size(); ++i) {
      expo[i] = n * step[i] + off[i];
      if (expo[i] < 0 && g.weights[i] != 0)
        fail(Err::BadInput, "offset makes a graded exponent negative");
    }
    if (g.wdeg(expo) > g.bound) break;
    out = out * geometric_factor(g, MotiveScalar::one(), expo, n * e);
  }
  return out;
}

MSeries macmahon(const Grading& g, const std::vector<int>& off) {
  std::vector<int> step(g.arity(), 0);
  step[0] = 1;
  return macmahon_factor(g, step, off, 1);
}

std::map<std::vector<int>, std::vector<mpz_class>> gv_extract(const MSeries& zbar) {
  MSeries f = log_lambda(zbar);
  MotiveScalar t = MotiveScalar::integer(2) - MotiveScalar::L_power(1) -
                   MotiveScalar::L_power(-1);
  MotiveScalar tinv = t.inverse();
  std::map<std::vector<int>, std::vector<mpz_class>> out;
  for (const auto& [beta, coeff] : f.terms()) {
    std::vector<mpz_class> ns;
    MotiveScalar h = t * coeff;
    for (int it = 0; it <= 200; ++it) {
      if (h.is_zero()) break;
      if (it == 200)
        fail(Err::NotPolynomialInT, "genus expansion does not terminate");
      mpq_class val;
      try {
        val = h.euler_value();
      } catch (const MdtError& ex) {
        if (ex.kind() == Err::PoleAtOne)
          fail(Err::NotPolynomialInT, "genus expansion has a pole at L = 1");
        throw;
      }
      if (val.get_den() != 1)
        fail(Err::NotPolynomialInT, "genus expansion is not integral");
      ns.push_back(val.get_num());
      h = (h - MotiveScalar::from_laurent(LaurentZ(val.get_num()))) * tinv;
    }
    out[beta] = std::move(ns);
  }
  return out;
}

} // namespace mdt
