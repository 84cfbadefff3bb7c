#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "mdt/roots.hpp"
#include "mdt/series.hpp"

namespace mdt {

// Kac polynomials a_alpha(q) tabulated on a finite region. A missing entry
// means a_alpha = 0, and the cover records where that reading is complete.
struct KacTable {
  Grading cover;
  std::map<std::vector<int>, LaurentZ> entries;
  std::string source; // closed-form | oracle-interpolated
};

// Closed form on the affine ADE diagrams: 1 on real roots, q + l on n delta.
// Only roots with min_level <= level (<= max_level if set) are kept, which
// is how the level-0 and level->=1 slices are produced.
KacTable affine_kac_table(const AffineRootSystem& rs, const Grading& cover,
                          int min_level = 0, int max_level = -1);

// A_U = Exp( sum_alpha a_alpha(L) / (1 - L^{-1}) y^alpha ). The table must
// cover the requested region. Entries of weighted degree zero make Exp
// meaningless and are rejected downstream; slice the table first.
MSeries universal_series(const KacTable& k, const Grading& g);

// the same series assembled as prod_alpha Pow(Exp(y^alpha / (1 - L^{-1})),
// a_alpha(L)), exercising an independent code path
MSeries universal_series_via_pow(const KacTable& k, const Grading& g);

// BPS-type coefficients: Omega = (1 - L^{-1}) Log A_U, tabulated
struct OmegaTable {
  Grading cover;
  std::map<std::vector<int>, MotiveScalar> entries;
};

OmegaTable omega_extract(const MSeries& au);

// One factor of the wall-crossing product, written in the -y0 convention:
//   real alpha:  prod_{j=1..a0} (1 - L^{j - a0/2} y^alpha)^{-1}
//   n delta:     prod_{j=1..a0} (1 - L^{j+1 - a0/2} y^alpha)^{-1}
//                               (1 - L^{j - a0/2} y^alpha)^{-l}
// with a0 the coordinate at the extending vertex; level 0 gives 1.
MSeries local_factor(const Grading& g, const PosRoot& r, int l);

enum class SignConvention { MinusS, PlusS };
const char* convention_name(SignConvention c);

// A series in (s, Q_1..Q_l) where s carries weight 1 and the Q's weight 0.
// On a root basis the dictionary is s = y^delta, Q^beta = y^{-beta}, so a
// root n delta - beta lands on s^n Q^beta; the roots n delta + beta give
// negative Q exponents, which weight zero makes legal.
struct SQSeries {
  MSeries series;
  SignConvention convention = SignConvention::MinusS;
  std::string roots_type;
};

// Product of local factors over the roots the mode selects, up to level N,
// re-expressed in (s, Q). Minus-s convention.
SQSeries mckay_series(const AffineRootSystem& rs, SeriesMode mode, int N);

// substitute s -> -s, toggling the convention tag
SQSeries flip_convention(const SQSeries& z);

// a stability vector whose negative half-space cuts out exactly the roots
// the mode selects, for every root of level <= maxlevel
std::vector<mpq_class> mode_stability(const AffineRootSystem& rs, SeriesMode mode,
                                      int maxlevel);

// Exp( sum_{zeta.alpha < 0} (L^{w.alpha} - 1)/(1 - L^{-1}) Omega_alpha
// y^alpha ), twisted by -w. Roots on the wall zeta.alpha = 0 with nonzero
// Omega are rejected as non-generic.
MSeries framed_series(const OmegaTable& om, const std::vector<mpq_class>& zeta,
                      const std::vector<int>& w, const Grading& g);

// refined series of affine 3-space in the -s convention, supported on
// multiples of step: prod_n prod_{j=1..n} (1 - L^{j+1-n/2} y^{n step})^{-1}
MSeries c3_series(const Grading& g, const std::vector<int>& step);

// same for the small resolution with l exceptional curves: each level n
// picks up the extra factors (1 - L^{j-n/2} y^{n step})^{-l}
MSeries resolution_series(const Grading& g, const std::vector<int>& step, int l);

// the resolution series in the (s, Q) variables of a rank-l type, where only
// powers of s appear; minus-s convention, no root-system tag
SQSeries hilbert_series_ZY(int l, int N);

// coefficientwise specialization v -> 1
MSeries euler_limit(const MSeries& f);
MSeries euler_limit(const SQSeries& z);

// prod_{n>=1} (1 - y^{n step + off})^{-n e}
MSeries macmahon_factor(const Grading& g, const std::vector<int>& step,
                        const std::vector<int>& off, int e);

// MacMahon series M(x, q) = prod_{n>=1} (1 - x q^n)^{-n} = Exp(x q/(1-q)^2),
// with q the first variable and x = y^off; off = 0 gives the plain M(q)
MSeries macmahon(const Grading& g, const std::vector<int>& off);

// Genus expansion of a reduced one-variable-in-L series: for each support
// vector beta solve f_beta = sum_g n_g (2 - L - L^{-1})^{g-1} with integer
// n_g, failing if no finite integral expansion exists.
std::map<std::vector<int>, std::vector<mpz_class>> gv_extract(const MSeries& zbar);

} // namespace mdt
