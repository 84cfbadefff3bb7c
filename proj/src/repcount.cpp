#include "mdt/repcount.hpp"

#include <algorithm>
#include <cassert>

#include "mdt/errors.hpp"
#include "mdt/gf.hpp"

namespace mdt {

namespace {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> e; // row-major field elements

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), e((size_t)r * c, 0) {}
  int& at(int r, int c) { return e[(size_t)r * cols + c]; }
  int at(int r, int c) const { return e[(size_t)r * cols + c]; }
};

Mat mat_mul(const SmallField& F, const Mat& a, const Mat& b) {
  assert(a.cols == b.rows);
  Mat out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
    }
  return out;
}

// in-place row reduction; returns rank. Rows are vectors of length ncols.
int rref(const SmallField& F, std::vector<std::vector<int>>& m, int ncols) {
  int rank = 0;
  for (int col = 0; col < ncols && rank < (int)m.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)m.size(); ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    int inv = F.inv(m[rank][col]);
    for (int j = col; j < ncols; ++j) m[rank][j] = F.mul(m[rank][j], inv);
    for (int r = 0; r < (int)m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      int f = m[r][col];
      for (int j = col; j < ncols; ++j)
        m[r][j] = F.sub(m[r][j], F.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

int gf_rank(const SmallField& F, std::vector<std::vector<int>> m, int ncols) {
  return rref(F, m, ncols);
}

// basis of the solution space of m x = 0
std::vector<std::vector<int>> gf_nullspace(const SmallField& F,
                                           std::vector<std::vector<int>> m, int ncols) {
  int rank = rref(F, m, ncols);
  std::vector<int> pivot_col(rank);
  std::vector<bool> is_pivot(ncols, false);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (m[r][c] == 0) ++c;
    pivot_col[r] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(ncols, 0);
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = F.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// entry offsets: arrows in order, each matrix row-major, target rows
struct Layout {
  std::vector<int> off;
  std::vector<int> rows, cols;
  int total = 0;

  Layout(const Quiver& q, const std::vector<int>& a) {
    for (auto [s, t] : q.arrows) {
      off.push_back(total);
      rows.push_back(a[t]);
      cols.push_back(a[s]);
      total += a[t] * a[s];
    }
  }
};

std::vector<Mat> decode(const Layout& lay, const std::vector<int>& digits) {
  std::vector<Mat> m;
  for (size_t a = 0; a < lay.off.size(); ++a) {
    Mat x(lay.rows[a], lay.cols[a]);
    std::copy(digits.begin() + lay.off[a], digits.begin() + lay.off[a] + x.rows * x.cols,
              x.e.begin());
    m.push_back(std::move(x));
  }
  return m;
}

bool next_tuple(std::vector<int>& digits, int q) {
  for (auto& d : digits) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

// q^e as long with a cap, for feasibility guards
void guard_budget(long q, long long e, double cap, const char* what) {
  double b = 1;
  for (long long i = 0; i < e; ++i) {
    b *= (double)q;
    if (b > cap)
      fail(Err::TooLarge, std::string(what) + " needs q^" + std::to_string(e) +
                              " field points, over the enumeration budget");
  }
}

mpz_class mpz_pow(long q, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)q, (unsigned long)e);
  return r;
}

mpz_class gl_size(long q, const std::vector<int>& alpha) {
  mpz_class total = 1;
  for (int n : alpha) {
    mpz_class qn = mpz_pow(q, n);
    for (int k = 0; k < n; ++k) total *= qn - mpz_pow(q, k);
  }
  return total;
}

} // namespace

CountReport count_preprojective(const Quiver& q, const std::vector<int>& alpha, long p) {
  validate_quiver(q);
  validate_dimvec(q, alpha);
  SmallField F((int)p);
  Layout lay(q, alpha);
  guard_budget(p, lay.total, 1e8, "preprojective count");

  // variables: entries of the dual of arrow a, an a_s x a_t matrix
  std::vector<int> voff, vrows, vcols;
  int nvars = 0;
  for (auto [s, t] : q.arrows) {
    voff.push_back(nvars);
    vrows.push_back(alpha[s]);
    vcols.push_back(alpha[t]);
    nvars += alpha[s] * alpha[t];
  }
  std::vector<int> eqoff;
  int neq = 0;
  for (int x : alpha) {
    eqoff.push_back(neq);
    neq += x * x;
  }

  mpz_class total = 0;
  std::vector<int> digits(lay.total, 0);
  do {
    auto m = decode(lay, digits);
    std::vector<std::vector<int>> sys(neq, std::vector<int>(nvars, 0));
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      const Mat& ma = m[a];
      // relation at t picks up + M_a M_a*, entry (r,c): coeff of x_{a,j,c}
      for (int r = 0; r < alpha[t]; ++r)
        for (int c = 0; c < alpha[t]; ++c)
          for (int j = 0; j < alpha[s]; ++j) {
            int& cell = sys[eqoff[t] + r * alpha[t] + c][voff[a] + j * vcols[a] + c];
            cell = F.add(cell, ma.at(r, j));
          }
      // relation at s picks up - M_a* M_a, entry (r,c): coeff of x_{a,r,j}
      for (int r = 0; r < alpha[s]; ++r)
        for (int c = 0; c < alpha[s]; ++c)
          for (int j = 0; j < alpha[t]; ++j) {
            int& cell = sys[eqoff[s] + r * alpha[s] + c][voff[a] + r * vcols[a] + j];
            cell = F.sub(cell, ma.at(j, c));
          }
    }
    int rank = gf_rank(F, std::move(sys), nvars);
    total += mpz_pow(p, nvars - rank);
  } while (next_tuple(digits, (int)p));

  return {q, alpha, p, total, "linear-fiber"};
}

std::vector<mpz_class> potential_fiber_histogram(const DoubledQuiver& dq,
                                                 const std::vector<int>& alpha, long p) {
  validate_quiver(dq.total);
  validate_dimvec(dq.total, alpha);
  SmallField F((int)p);
  Layout lay(dq.total, alpha);
  guard_budget(p, lay.total, 1e8, "potential fiber count");

  int n = dq.total.n;
  size_t no = dq.n_orig;
  std::vector<mpz_class> hist(p, 0);
  std::vector<int> digits(lay.total, 0);
  do {
    auto m = decode(lay, digits);
    // tr W = sum_i tr(loop_i * (sum_{t(a)=i} M_a M_a* - sum_{s(a)=i} M_a* M_a))
    int tr = 0;
    for (int i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      Mat e(alpha[i], alpha[i]);
      for (size_t a = 0; a < no; ++a) {
        auto [s, t] = dq.base.arrows[a];
        if (t == i) {
          Mat prod = mat_mul(F, m[a], m[no + a]);
          for (size_t k = 0; k < e.e.size(); ++k) e.e[k] = F.add(e.e[k], prod.e[k]);
        }
        if (s == i) {
          Mat prod = mat_mul(F, m[no + a], m[a]);
          for (size_t k = 0; k < e.e.size(); ++k) e.e[k] = F.sub(e.e[k], prod.e[k]);
        }
      }
      const Mat& loop = m[2 * no + i];
      Mat prod = mat_mul(F, loop, e);
      for (int r = 0; r < alpha[i]; ++r) tr = F.add(tr, prod.at(r, r));
    }
    hist[tr] += 1;
  } while (next_tuple(digits, (int)p));
  return hist;
}

CountReport count_potential_fiber(const DoubledQuiver& dq, const std::vector<int>& alpha,
                                  long p, long c) {
  auto hist = potential_fiber_histogram(dq, alpha, p);
  long idx = ((c % p) + p) % p;
  return {dq.total, alpha, p, hist[idx], "direct-enumeration"};
}

std::vector<OrbitInfo> rep_orbits(const Quiver& q, const std::vector<int>& alpha, long p) {
  validate_quiver(q);
  validate_dimvec(q, alpha);
  SmallField F((int)p);
  long dimsum = 0, glvars = 0;
  for (int x : alpha) {
    dimsum += x;
    glvars += (long)x * x;
  }
  if (dimsum > 4) fail(Err::TooLarge, "orbit scan only runs for total dimension <= 4");
  Layout lay(q, alpha);
  guard_budget(p, lay.total, 1e7, "orbit scan");
  guard_budget(p, glvars, 1e7, "endomorphism scan");

  long S = 1;
  for (int i = 0; i < lay.total; ++i) S *= p;

  // generators of GL_alpha: one primitive scaling and the transvections,
  // acting at a single vertex
  struct Gen {
    int vertex;
    Mat g, ginv;
  };
  std::vector<Gen> gens;
  int w = F.primitive();
  for (int i = 0; i < q.n; ++i) {
    int d = alpha[i];
    if (d == 0) continue;
    auto ident = [&] {
      Mat m(d, d);
      for (int r = 0; r < d; ++r) m.at(r, r) = 1;
      return m;
    };
    if (w != 1) {
      Mat g = ident(), gi = ident();
      g.at(0, 0) = w;
      gi.at(0, 0) = F.inv(w);
      gens.push_back({i, g, gi});
    }
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        if (r == c) continue;
        for (int x : {1, w}) {
          Mat g = ident(), gi = ident();
          g.at(r, c) = x;
          gi.at(r, c) = F.neg(x);
          gens.push_back({i, g, gi});
          if (w == 1) break;
        }
      }
  }

  auto encode = [&](const std::vector<Mat>& m) {
    long idx = 0;
    for (size_t a = m.size(); a-- > 0;)
      for (size_t k = m[a].e.size(); k-- > 0;) idx = idx * p + m[a].e[k];
    return idx;
  };
  auto decode_idx = [&](long idx) {
    std::vector<int> digits(lay.total);
    for (int k = 0; k < lay.total; ++k) {
      digits[k] = (int)(idx % p);
      idx /= p;
    }
    return decode(lay, digits);
  };

  mpz_class gl = gl_size(p, alpha);
  std::vector<char> visited(S, 0);
  std::vector<OrbitInfo> orbits;
  std::vector<long> stack;
  mpz_class state_total = 0;

  for (long start = 0; start < S; ++start) {
    if (visited[start]) continue;
    visited[start] = 1;
    stack.assign(1, start);
    long orbit_size = 0;
    while (!stack.empty()) {
      long cur = stack.back();
      stack.pop_back();
      ++orbit_size;
      auto m = decode_idx(cur);
      for (const auto& gen : gens) {
        auto mm = m;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
          auto [s, t] = q.arrows[a];
          if (t == gen.vertex) mm[a] = mat_mul(F, gen.g, mm[a]);
          if (s == gen.vertex) mm[a] = mat_mul(F, mm[a], gen.ginv);
        }
        long nxt = encode(mm);
        if (!visited[nxt]) {
          visited[nxt] = 1;
          stack.push_back(nxt);
        }
      }
    }

    // intertwiner system for End of the representative: f_t M_a = M_a f_s
    auto m = decode_idx(start);
    std::vector<int> foff(q.n);
    int nv = 0;
    for (int i = 0; i < q.n; ++i) {
      foff[i] = nv;
      nv += alpha[i] * alpha[i];
    }
    std::vector<std::vector<int>> sys;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      for (int r = 0; r < alpha[t]; ++r)
        for (int c = 0; c < alpha[s]; ++c) {
          std::vector<int> row(nv, 0);
          for (int j = 0; j < alpha[t]; ++j) {
            int& cell = row[foff[t] + r * alpha[t] + j];
            cell = F.add(cell, m[a].at(j, c));
          }
          for (int j = 0; j < alpha[s]; ++j) {
            int& cell = row[foff[s] + j * alpha[s] + c];
            cell = F.sub(cell, m[a].at(r, j));
          }
          sys.push_back(std::move(row));
        }
    }
    auto basis = gf_nullspace(F, std::move(sys), nv);
    int d = (int)basis.size();

    // walk End, count the non-units and row-reduce their span as we go;
    // End is local iff the non-units are exactly a subspace
    long nonunits = 0;
    std::vector<std::vector<int>> span; // mutually reduced rows
    std::vector<int> leads;
    std::vector<int> lam(d, 0);
    bool more = d > 0;
    std::vector<int> f(nv);
    while (true) {
      std::fill(f.begin(), f.end(), 0);
      for (int k = 0; k < d; ++k) {
        if (lam[k] == 0) continue;
        for (int j = 0; j < nv; ++j) f[j] = F.add(f[j], F.mul(lam[k], basis[k][j]));
      }
      bool unit = true;
      for (int i = 0; i < q.n && unit; ++i) {
        if (alpha[i] == 0) continue;
        std::vector<std::vector<int>> block(alpha[i], std::vector<int>(alpha[i]));
        for (int r = 0; r < alpha[i]; ++r)
          for (int c = 0; c < alpha[i]; ++c) block[r][c] = f[foff[i] + r * alpha[i] + c];
        if (gf_rank(F, std::move(block), alpha[i]) < alpha[i]) unit = false;
      }
      if (!unit) {
        ++nonunits;
        std::vector<int> v = f;
        for (size_t r = 0; r < span.size(); ++r) {
          int c = v[leads[r]];
          if (c == 0) continue;
          for (int j = 0; j < nv; ++j) v[j] = F.sub(v[j], F.mul(c, span[r][j]));
        }
        int lead = -1;
        for (int j = 0; j < nv; ++j)
          if (v[j] != 0) {
            lead = j;
            break;
          }
        if (lead >= 0) {
          int inv = F.inv(v[lead]);
          for (int j = 0; j < nv; ++j) v[j] = F.mul(v[j], inv);
          // keep the rows mutually reduced so leads stay distinct
          for (size_t r = 0; r < span.size(); ++r) {
            int c = span[r][lead];
            if (c == 0) continue;
            for (int j = 0; j < nv; ++j) span[r][j] = F.sub(span[r][j], F.mul(c, v[j]));
          }
          span.push_back(std::move(v));
          leads.push_back(lead);
        }
      }
      if (!more || !next_tuple(lam, (int)p)) break;
    }

    int j = (int)span.size();
    mpz_class qd = mpz_pow(p, d);
    bool local = nonunits == mpz_pow(p, j);
    OrbitInfo info;
    info.orbit_size = orbit_size;
    info.aut_size = qd - nonunits;
    info.end_dim = d;
    info.abs_indec = local && (d - j == 1);
    // orbit-stabilizer sanity: |orbit| |Aut| = |GL|
    if (info.orbit_size * info.aut_size != gl)
      fail(Err::BadInput, "orbit-stabilizer mismatch, orbit scan is inconsistent");
    state_total += orbit_size;
    orbits.push_back(std::move(info));
  }
  assert(state_total == S);
  return orbits;
}

CountReport kac_bruteforce(const Quiver& q, const std::vector<int>& alpha, long p) {
  validate_quiver(q);
  validate_dimvec(q, alpha);
  bool zero = std::all_of(alpha.begin(), alpha.end(), [](int x) { return x == 0; });
  mpz_class count = 0;
  if (!zero) {
    for (const auto& orb : rep_orbits(q, alpha, p))
      if (orb.abs_indec) count += 1;
  }
  return {q, alpha, p, count, "centralizer-sum"};
}

LaurentZ interpolate_kac(const std::vector<std::pair<long, mpz_class>>& samples, int d) {
  if ((int)samples.size() < d + 1)
    fail(Err::InsufficientSamples, "need " + std::to_string(d + 1) +
                                       " samples for degree " + std::to_string(d));
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        fail(Err::BadInput, "repeated sample point");

  // Lagrange on the first d+1 points, expanded into coefficients
  std::vector<mpq_class> poly(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    std::vector<mpq_class> term{mpq_class(samples[i].second)};
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      mpq_class scale(samples[i].first - samples[j].first);
      // multiply term by (x - x_j) / (x_i - x_j)
      std::vector<mpq_class> nt(term.size() + 1, 0);
      for (size_t k = 0; k < term.size(); ++k) {
        nt[k + 1] += term[k] / scale;
        nt[k] -= term[k] * samples[j].first / scale;
      }
      term = std::move(nt);
    }
    for (size_t k = 0; k < term.size(); ++k) poly[k] += term[k];
  }

  std::vector<mpz_class> coeffs;
  for (const auto& c : poly) {
    if (c.get_den() != 1)
      fail(Err::NonIntegerCoefficients, "interpolated polynomial is not integral");
    coeffs.push_back(c.get_num());
  }
  LaurentZ out = LaurentZ::from_coeffs(0, coeffs);

  for (size_t i = d + 1; i < samples.size(); ++i) {
    mpq_class val = 0;
    mpq_class x(samples[i].first);
    for (int k = d; k >= 0; --k) val = val * x + poly[k];
    if (val != samples[i].second)
      fail(Err::BadInput, "surplus sample disagrees with the interpolated polynomial");
  }
  return out;
}

MotiveScalar aut_motive(const std::vector<int>& multiplicities, int end_dim) {
  if (end_dim < 0) fail(Err::BadInput, "End dimension must be >= 0");
  MotiveScalar out = MotiveScalar::L_power(end_dim);
  for (int n : multiplicities) {
    if (n < 1) fail(Err::BadInput, "multiplicities must be >= 1");
    out *= pochhammer(MotiveScalar::L_power(-1), n);
  }
  return out;
}

} // namespace mdt
