#include "mdt/verify.hpp"

#include <random>
#include <sstream>

#include "mdt/dtinv.hpp"
#include "mdt/errors.hpp"
#include "mdt/repcount.hpp"

namespace mdt {

namespace {

MotiveScalar Lp(int n) { return MotiveScalar::L_power(n); }
MotiveScalar msone() { return MotiveScalar::one(); }

std::string fmt_vec(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

mpq_class q_pow(long q, long long e) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(q).get_mpz_t(), (unsigned long)(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1) / mpq_class(p) : mpq_class(p);
}

Grading y_grading(const AffineRootSystem& rs, int N) {
  std::vector<std::string> vars;
  std::vector<int> w;
  for (int i = 0; i <= rs.l; ++i) {
    vars.push_back("y" + std::to_string(i));
    w.push_back(i == 0 ? 1 : 0);
  }
  return Grading(vars, w, N);
}

Grading total_grading(const AffineRootSystem& rs, int N) {
  std::vector<std::string> vars;
  for (int i = 0; i <= rs.l; ++i) vars.push_back("y" + std::to_string(i));
  return Grading(vars, std::vector<int>(rs.l + 1, 1), N);
}

Grading sq_grading(int l, int N) {
  std::vector<std::string> vars{"s"};
  std::vector<int> w{1};
  for (int i = 1; i <= l; ++i) {
    vars.push_back("Q" + std::to_string(i));
    w.push_back(0);
  }
  return Grading(vars, w, N);
}

// ----- lambda-ring calculus -----

std::string chk_explog(const VerifyOptions&) {
  std::mt19937 rng(961748941u);
  auto ri = [&](int lo, int hi) { return lo + (int)(rng() % (unsigned)(hi - lo + 1)); };
  for (int iter = 0; iter < 50; ++iter) {
    int nv = ri(1, 3);
    std::vector<std::string> vars;
    for (int i = 0; i < nv; ++i) vars.push_back("x" + std::to_string(i));
    Grading g(vars, std::vector<int>(nv, 1), 6);
    MSeries f = ms_zero(g);
    int nt = ri(1, 6);
    for (int t = 0; t < nt; ++t) {
      std::vector<int> e(nv);
      long long wd = 0;
      for (int i = 0; i < nv; ++i) {
        e[i] = ri(0, 3);
        wd += e[i];
      }
      if (wd < 1 || wd > 6) continue;
      f.add_term(e, MotiveScalar::v_power(ri(-4, 4), ri(-3, 3)));
    }
    if (log_lambda(exp_lambda(f)) != f)
      return "Log(Exp(f)) != f at iteration " + std::to_string(iter);
    MSeries onef = ms_one(g) + f;
    if (exp_lambda(log_lambda(onef)) != onef)
      return "Exp(Log(1+f)) != 1+f at iteration " + std::to_string(iter);
  }
  return {};
}

std::string chk_heine(const VerifyOptions&) {
  Grading g({"x"}, {1}, 8);
  MSeries e = exp_lambda(ms_monomial(g, {1}, (msone() - Lp(1)).inverse()));
  for (int n = 0; n <= 8; ++n)
    if (e.coefficient({n}) != pochhammer(Lp(1), n).inverse())
      return "x^" + std::to_string(n) + " coefficient is not 1/(q)_n";
  return {};
}

// ----- universal series vs point counts -----

std::string oracle_compare(const MSeries& au, const Quiver& qv,
                           const std::vector<int>& alpha, long q) {
  MotiveScalar glm = msone();
  for (int a : alpha) glm = glm * gl_motive(a);
  mpq_class lhs = au.coefficient(alpha).evaluate_at_prime_power(q) *
                  glm.evaluate_at_prime_power(q);
  mpq_class rhs = q_pow(q, euler_form(qv, alpha, alpha)) *
                  mpq_class(count_preprojective(qv, alpha, q).count);
  if (lhs != rhs) {
    std::ostringstream os;
    os << "alpha=" << fmt_vec(alpha) << " q=" << q << ": series gives " << lhs
       << ", oracle gives " << rhs;
    return os.str();
  }
  return {};
}

std::string chk_umotive_jordan(const VerifyOptions& opts) {
  Quiver jordan = builtin_quiver("jordan");
  Grading g({"y"}, {1}, 3);
  KacTable k{g, {}, "closed-form"};
  for (int n = 1; n <= 3; ++n) k.entries[{n}] = LaurentZ::monomial(1, 1);
  MSeries au = universal_series(k, g);
  for (int n = 1; n <= 3; ++n) {
    std::vector<long> qs = opts.qs;
    if (qs.empty()) qs = n <= 2 ? std::vector<long>{2, 3, 5, 7} : std::vector<long>{2, 3};
    for (long q : qs)
      if (auto err = oracle_compare(au, jordan, {n}, q); !err.empty()) return err;
  }
  return {};
}

std::string chk_umotive_kronecker(const VerifyOptions& opts) {
  Quiver kron = builtin_quiver("kronecker");
  AffineRootSystem rs = from_type("A1~");
  Grading g({"y0", "y1"}, {1, 1}, 2);
  MSeries au = universal_series(affine_kac_table(rs, g), g);
  std::vector<long> qs = opts.qs.empty() ? std::vector<long>{2, 3, 5} : opts.qs;
  for (long q : qs)
    if (auto err = oracle_compare(au, kron, {1, 1}, q); !err.empty()) return err;
  return {};
}

// ----- dimensional reduction -----

std::string chk_reduction(const VerifyOptions& opts) {
  std::vector<long> qs = opts.qs.empty() ? std::vector<long>{2, 3} : opts.qs;
  std::vector<std::pair<Quiver, std::vector<int>>> cases = {
      {builtin_quiver("jordan"), {1}},
      {builtin_quiver("jordan"), {2}},
      {builtin_quiver("kronecker"), {1, 1}},
  };
  for (const auto& [qv, alpha] : cases) {
    DoubledQuiver dq = loop_double(qv);
    for (long q : qs) {
      auto hist = potential_fiber_histogram(dq, alpha, q);
      mpz_class diff = hist[0] - hist[1];
      mpz_class rhs = count_preprojective(qv, alpha, q).count;
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), mpz_class(q).get_mpz_t(),
                 (unsigned long)cut_degree(alpha));
      if (diff != scale * rhs) {
        std::ostringstream os;
        os << "alpha=" << fmt_vec(alpha) << " q=" << q << ": fiber difference " << diff
           << " != q^cut * preprojective = " << scale * rhs;
        return os.str();
      }
    }
  }
  return {};
}

std::string chk_fiber_uniform(const VerifyOptions& opts) {
  std::vector<long> qs = opts.qs.empty() ? std::vector<long>{3} : opts.qs;
  std::vector<std::pair<Quiver, std::vector<int>>> cases = {
      {builtin_quiver("jordan"), {1}},
      {builtin_quiver("jordan"), {2}},
      {builtin_quiver("kronecker"), {1, 1}},
  };
  for (const auto& [qv, alpha] : cases) {
    DoubledQuiver dq = loop_double(qv);
    for (long q : qs) {
      auto hist = potential_fiber_histogram(dq, alpha, q);
      for (size_t c = 2; c < hist.size(); ++c)
        if (hist[c] != hist[1]) {
          std::ostringstream os;
          os << "alpha=" << fmt_vec(alpha) << " q=" << q << ": fiber at " << c
             << " has " << hist[c] << " points, fiber at 1 has " << hist[1];
          return os.str();
        }
    }
  }
  return {};
}

// ----- Kac oracle -----

std::string chk_kac_jordan(const VerifyOptions& opts) {
  Quiver jordan = builtin_quiver("jordan");
  std::vector<long> qs = opts.qs.empty() ? std::vector<long>{2, 3} : opts.qs;
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::pair<long, mpz_class>> samples;
    for (long q : qs) {
      mpz_class c = kac_bruteforce(jordan, {n}, q).count;
      if (c != q)
        return "a_" + std::to_string(n) + "(" + std::to_string(q) +
               ") = " + c.get_str() + ", expected q";
      samples.emplace_back(q, c);
    }
    if (samples.size() >= 2 && interpolate_kac(samples, 1) != LaurentZ::monomial(1, 1))
      return "interpolation at n = " + std::to_string(n) + " missed the polynomial q";
  }
  return {};
}

std::string chk_kac_kronecker(const VerifyOptions& opts) {
  Quiver kron = builtin_quiver("kronecker");
  std::vector<long> qs = opts.qs.empty() ? std::vector<long>{2, 3, 4, 5} : opts.qs;
  std::vector<std::pair<long, mpz_class>> samples;
  for (long q : qs) {
    mpz_class c = kac_bruteforce(kron, {1, 1}, q).count;
    if (c != q + 1)
      return "a_(1,1)(" + std::to_string(q) + ") = " + c.get_str() + ", expected q + 1";
    samples.emplace_back(q, c);
  }
  if (samples.size() >= 2 &&
      interpolate_kac(samples, 1) != LaurentZ::from_coeffs(0, {1, 1}))
    return "interpolation missed the polynomial q + 1";
  return {};
}

// ----- BPS extraction -----

std::string omega_against_closed_form(const AffineRootSystem& rs, const Grading& g,
                                      int min_level) {
  KacTable k = affine_kac_table(rs, g, min_level);
  OmegaTable om = omega_extract(universal_series(k, g));
  size_t nroots = 0;
  int cap = (int)g.bound; // level <= weighted degree in both gradings used here
  for (const auto& r : positive_roots_up_to(rs, cap)) {
    if (r.level < min_level || g.wdeg(r.alpha) > g.bound) continue;
    ++nroots;
    auto it = om.entries.find(r.alpha);
    if (it == om.entries.end()) return "missing BPS entry at root " + fmt_vec(r.alpha);
    MotiveScalar expect =
        r.tag == RootTag::Imaginary ? Lp(1) + MotiveScalar::integer(rs.l) : msone();
    if (it->second != expect) return "wrong BPS value at root " + fmt_vec(r.alpha);
  }
  if (om.entries.size() != nroots) {
    for (const auto& [e, c] : om.entries) {
      bool is_root = false;
      for (const auto& r : positive_roots_up_to(rs, cap))
        if (r.alpha == e) is_root = true;
      if (!is_root) return "nonzero BPS value off the root system at " + fmt_vec(e);
    }
  }
  // positivity: a polynomial in L with nonnegative integer coefficients
  for (const auto& [e, c] : om.entries) {
    auto red = c.reduced();
    if (red.den != LaurentZ::one() || !red.num.even_only())
      return "BPS value at " + fmt_vec(e) + " is not a polynomial in L";
    for (const auto& cf : red.num.coeffs())
      if (cf < 0) return "negative BPS coefficient at " + fmt_vec(e);
  }
  return {};
}

std::string chk_omega(const std::string& type) {
  AffineRootSystem rs = from_type(type);
  // levels 1..3 in the s-grading
  if (auto err = omega_against_closed_form(rs, y_grading(rs, 3), 1); !err.empty())
    return err;
  // a window that also sees the finite roots: total degree, kept small because
  // the coefficients are dense rational functions at higher rank
  int b = 0;
  for (int d : rs.delta) b += d;
  return omega_against_closed_form(rs, total_grading(rs, std::min(b, 3)), 0);
}

// ----- wall-crossing factorization -----

std::string chk_factorization(const std::string& type) {
  AffineRootSystem rs = from_type(type);
  int N = 4;
  Grading g = y_grading(rs, N);
  OmegaTable om = omega_extract(universal_series(affine_kac_table(rs, g, 1), g));
  std::vector<int> w(rs.l + 1, 0);
  w[0] = 1;
  for (SeriesMode mode : {SeriesMode::PT, SeriesMode::DT}) {
    MSeries f = framed_series(om, mode_stability(rs, mode, N), w, g);
    auto keep = stability_select(rs, mode);
    MSeries prod = ms_one(g);
    for (const auto& r : positive_roots_up_to(rs, N))
      if (keep(r)) prod = prod * local_factor(g, r, rs.l);
    if (f != sign_flip(prod, 0))
      return std::string("framed series and wall product differ in mode ") +
             mode_name(mode);
  }
  return {};
}

// ----- DT/PT correspondence -----

std::string chk_dtpt(const std::string& type) {
  AffineRootSystem rs = from_type(type);
  int N = 5;
  SQSeries zdt = mckay_series(rs, SeriesMode::DT, N);
  SQSeries zpt = mckay_series(rs, SeriesMode::PT, N);
  SQSeries zy = hilbert_series_ZY(rs.l, N);
  if (zdt.series != zpt.series * zy.series)
    return "DT series differs from PT x Hilbert at order " + std::to_string(N);
  return {};
}

// ----- classical limits -----

std::string chk_euler(const std::string& type) {
  AffineRootSystem rs = from_type(type);
  int N = 5;
  Grading g = sq_grading(rs.l, N);
  std::vector<int> step(g.arity(), 0);
  step[0] = 1;

  MSeries ept = euler_limit(mckay_series(rs, SeriesMode::PT, N));
  MSeries prod = ms_one(g);
  for (const auto& beta : rs.finite_pos) prod = prod * macmahon(g, beta);
  if (ept != prod) return "PT Euler limit is not the MacMahon product";

  MSeries encdt = euler_limit(mckay_series(rs, SeriesMode::NCDT, N));
  MSeries prod2 = macmahon_factor(g, step, std::vector<int>(g.arity(), 0), rs.l + 1);
  for (const auto& beta : rs.finite_pos) {
    std::vector<int> neg = beta;
    for (auto& x : neg) x = -x;
    prod2 = prod2 * macmahon(g, beta) * macmahon(g, neg);
  }
  if (encdt != prod2) return "NCDT Euler limit is not the MacMahon product";
  return {};
}

std::string chk_macmahon(const VerifyOptions&) {
  Grading g({"q"}, {1}, 5);
  MSeries m = macmahon(g, {0});
  long expect[] = {1, 1, 3, 6, 13, 24};
  for (int n = 0; n <= 5; ++n)
    if (m.coefficient({n}) != MotiveScalar::integer(expect[n]))
      return "M(q) coefficient " + std::to_string(n) + " is wrong";
  Grading gx({"q", "x"}, {1, 0}, 5);
  MSeries s = ms_zero(gx);
  for (int n = 1; n <= 5; ++n) s.add_term({n, 1}, MotiveScalar::integer(n));
  if (macmahon(gx, {0, 1}) != exp_lambda(s))
    return "M(x,q) does not match Exp(xq/(1-q)^2)";
  return {};
}

// ----- Gopakumar-Vafa -----

std::string chk_gv(const std::string& type) {
  AffineRootSystem rs = from_type(type);
  std::vector<std::vector<int>> roots;
  int bound = 0;
  for (const auto& full : rs.finite_pos) {
    std::vector<int> beta(full.begin() + 1, full.end());
    int ht = 0;
    for (int x : beta) ht += x;
    bound = std::max(bound, ht);
    roots.push_back(std::move(beta));
  }
  std::vector<std::string> vars;
  for (int i = 1; i <= rs.l; ++i) vars.push_back("Q" + std::to_string(i));
  Grading g(vars, std::vector<int>(rs.l, 1), bound);
  MotiveScalar fb = Lp(1) * MotiveScalar::inv_one_minus_v(2, 2);
  MSeries s = ms_zero(g);
  for (const auto& beta : roots) s.add_term(beta, fb);
  auto gv = gv_extract(exp_lambda(s));
  if (gv.size() != roots.size()) return "GV support differs from the finite positive roots";
  for (const auto& beta : roots) {
    auto it = gv.find(beta);
    if (it == gv.end()) return "no GV entry at " + fmt_vec(beta);
    if (it->second != std::vector<mpz_class>{mpz_class(-1)})
      return "GV numbers at " + fmt_vec(beta) + " are not {-1}";
  }
  return {};
}

// ----- group motives -----

std::string chk_aut(const VerifyOptions&) {
  // direct orbit census of 2x2 matrices over F_2
  auto orbits = rep_orbits(builtin_quiver("jordan"), {2}, 2);
  mpq_class sq = aut_motive({2}, 4).evaluate_at_prime_power(2);
  mpq_class st = aut_motive({1, 1}, 2).evaluate_at_prime_power(2);
  if (sq != 6) return "[Aut] of a squared simple should evaluate to 6 at q = 2";
  if (st != 1) return "[Aut] of a sum of distinct simples should evaluate to 1 at q = 2";
  int nscalar = 0, nsplit = 0;
  for (const auto& o : orbits) {
    if (o.orbit_size == 1) {
      ++nscalar;
      if (o.aut_size != 6 || o.end_dim != 4)
        return "a scalar representation has the wrong automorphism count";
    }
    if (o.aut_size == 1) {
      ++nsplit;
      if (o.end_dim != 2 || o.abs_indec)
        return "a trivial-automorphism orbit is not a sum of two distinct simples";
    }
  }
  if (nscalar != 2) return "expected exactly the two scalar orbits over F_2";
  if (nsplit != 1) return "expected exactly one split semisimple orbit over F_2";
  return {};
}

std::string chk_gl_poch(const VerifyOptions&) {
  for (int n = 0; n <= 8; ++n)
    if (gl_motive(n) != Lp(n * n) * pochhammer(Lp(-1), n))
      return "gl_motive(" + std::to_string(n) + ") != L^{n^2} (L^{-1})_n";
  for (int n = 1; n <= 4; ++n)
    for (long q : {2L, 3L, 5L}) {
      mpz_class expect = 1, qn, qk;
      mpz_pow_ui(qn.get_mpz_t(), mpz_class(q).get_mpz_t(), (unsigned long)n);
      for (int k = 0; k < n; ++k) {
        mpz_pow_ui(qk.get_mpz_t(), mpz_class(q).get_mpz_t(), (unsigned long)k);
        expect *= qn - qk;
      }
      if (gl_motive(n).evaluate_at_prime_power(q) != mpq_class(expect))
        return "|GL_" + std::to_string(n) + "(F_" + std::to_string(q) + ")| mismatch";
    }
  return {};
}

// ----- structural sanity -----

std::string chk_roots(const VerifyOptions&) {
  std::vector<std::pair<std::string, size_t>> counts = {
      {"A1~", 1}, {"A2~", 3}, {"A4~", 10}, {"D4~", 12},
      {"D5~", 20}, {"E6~", 36}, {"E7~", 63}, {"E8~", 120}};
  for (const auto& [type, n] : counts) {
    AffineRootSystem rs = from_type(type);
    if (rs.finite_pos.size() != n)
      return type + " has the wrong number of finite positive roots";
    auto all = positive_roots_up_to(rs, 2);
    size_t npt = 0, ndt = 0, nim = 0;
    auto pt = stability_select(rs, SeriesMode::PT);
    auto dt = stability_select(rs, SeriesMode::DT);
    auto nc = stability_select(rs, SeriesMode::NCDT);
    for (const auto& r : all) {
      if (pt(r)) ++npt;
      if (dt(r)) ++ndt;
      if (r.tag == RootTag::Imaginary) ++nim;
      if (!nc(r)) return type + ": NCDT must keep every root";
      if (pt(r) && r.tag != RootTag::Minus) return type + ": PT kept a non-minus root";
    }
    if (npt + nim != ndt) return type + ": DT is not PT plus the imaginary roots";
  }
  std::vector<std::pair<std::string, long>> groups = {
      {"cyclic:6", 6}, {"bindihedral:3", 12}, {"bintet", 24},
      {"binoct", 48}, {"binico", 120}};
  for (const auto& [gname, order] : groups) {
    AffineRootSystem rs = from_mckay_group(gname);
    long s = 0;
    for (int d : rs.delta) s += (long)d * d;
    if (s != order) return gname + ": sum of squared marks is not the group order";
  }
  return {};
}

std::string chk_quantum(const VerifyOptions&) {
  std::mt19937 rng(271828u);
  auto ri = [&](int lo, int hi) { return lo + (int)(rng() % (unsigned)(hi - lo + 1)); };
  Grading g({"a", "b", "c"}, {1, 1, 1}, 4);
  for (int iter = 0; iter < 20; ++iter) {
    std::vector<std::vector<long>> skew(3, std::vector<long>(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        skew[i][j] = ri(-3, 3);
        skew[j][i] = -skew[i][j];
      }
    std::vector<int> ea{ri(0, 1), ri(0, 1), ri(0, 1)};
    std::vector<int> eb{ri(0, 1), ri(0, 1), ri(0, 1)};
    std::vector<int> ec{ri(0, 1), ri(0, 1), ri(0, 1)};
    MSeries A = ms_monomial(g, ea, MotiveScalar::v_power(ri(-2, 2)));
    MSeries B = ms_monomial(g, eb, MotiveScalar::v_power(ri(-2, 2)));
    MSeries C = ms_monomial(g, ec, msone());
    MSeries ab = quantum_mul(A, B, skew);
    if (quantum_mul(ab, C, skew) != quantum_mul(A, quantum_mul(B, C, skew), skew))
      return "quantum product is not associative at iteration " + std::to_string(iter);
    long pair = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) pair += skew[i][j] * ea[i] * eb[j];
    std::vector<int> sum{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
    if (g.wdeg(sum) <= g.bound) {
      MotiveScalar expect = A.coefficient(ea) * B.coefficient(eb) *
                            MotiveScalar::neg_half_pow((int)pair);
      if (ab.coefficient(sum) != expect)
        return "quantum twist exponent is off at iteration " + std::to_string(iter);
    }
  }
  std::vector<std::vector<long>> bad(2, std::vector<long>(2, 1));
  try {
    Grading g2({"a", "b"}, {1, 1}, 2);
    quantum_mul(ms_one(g2), ms_one(g2), bad);
    return "a non-antisymmetric form was accepted";
  } catch (const MdtError& e) {
    if (e.kind() != Err::NotAntisymmetric) return "wrong error for a bad form";
  }
  return {};
}

} // namespace

const std::vector<Check>& verify_registry() {
  auto fixed = [](std::string (*fn)(const std::string&), const char* arg) {
    return [fn, arg](const VerifyOptions&) { return fn(arg); };
  };
  static const std::vector<Check> reg = {
      {"explog", "Log and Exp are mutually inverse", chk_explog},
      {"heine", "Exp(x/(1-q)) = sum_n x^n/(q)_n", chk_heine},
      {"u-motive:jordan", "universal series matches preprojective counts (Jordan)",
       chk_umotive_jordan},
      {"u-motive:kronecker", "universal series matches preprojective counts (Kronecker)",
       chk_umotive_kronecker},
      {"reduction", "First dimensional reduction", chk_reduction},
      {"fiber-uniform", "nonzero potential fibers all have the same size",
       chk_fiber_uniform},
      {"kac:jordan", "Kac polynomial a_n = q for the Jordan quiver", chk_kac_jordan},
      {"kac:kronecker", "Kac polynomial a_(1,1) = q + 1 for the Kronecker quiver",
       chk_kac_kronecker},
      {"omega:A1~", "BPS values are 1 real / L + l imaginary (A1~)",
       fixed(chk_omega, "A1~")},
      {"omega:A2~", "BPS values are 1 real / L + l imaginary (A2~)",
       fixed(chk_omega, "A2~")},
      {"omega:D4~", "BPS values are 1 real / L + l imaginary (D4~)",
       fixed(chk_omega, "D4~")},
      {"factorization:A1~", "framed series factors into local wall products (A1~)",
       fixed(chk_factorization, "A1~")},
      {"factorization:A2~", "framed series factors into local wall products (A2~)",
       fixed(chk_factorization, "A2~")},
      {"dtpt:A1~", "DT = PT x Hilbert series (A1~)", fixed(chk_dtpt, "A1~")},
      {"dtpt:A2~", "DT = PT x Hilbert series (A2~)", fixed(chk_dtpt, "A2~")},
      {"dtpt:D4~", "DT = PT x Hilbert series (D4~)", fixed(chk_dtpt, "D4~")},
      {"euler:A1~", "Euler limits are MacMahon products (A1~)", fixed(chk_euler, "A1~")},
      {"euler:A2~", "Euler limits are MacMahon products (A2~)", fixed(chk_euler, "A2~")},
      {"macmahon", "MacMahon expansion 1, 1, 3, 6, 13, 24 and its Exp form",
       chk_macmahon},
      {"gv:A2~", "GV numbers are -1 at genus 0 on finite positive roots (A2~)",
       fixed(chk_gv, "A2~")},
      {"gv:D4~", "GV numbers are -1 at genus 0 on finite positive roots (D4~)",
       fixed(chk_gv, "D4~")},
      {"aut", "automorphism motives match direct orbit counts", chk_aut},
      {"gl-poch", "GL motive equals the Pochhammer closed form", chk_gl_poch},
      {"roots", "root counts, mode selections and McKay marks", chk_roots},
      {"quantum", "quantum torus product: twist and associativity", chk_quantum},
  };
  return reg;
}

std::vector<const Check*> select_checks(const std::string& suite) {
  std::vector<const Check*> out;
  for (const auto& c : verify_registry())
    if (suite.empty() || c.name == suite ||
        (c.name.size() > suite.size() && c.name.compare(0, suite.size(), suite) == 0 &&
         c.name[suite.size()] == ':'))
      out.push_back(&c);
  if (out.empty()) fail(Err::BadInput, "no checks match suite " + suite);
  return out;
}

} // namespace mdt
