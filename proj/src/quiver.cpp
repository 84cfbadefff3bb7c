#include "mdt/quiver.hpp"

#include "mdt/errors.hpp"

namespace mdt {

void validate_quiver(const Quiver& q) {
  if (q.n <= 0) fail(Err::BadInput, "quiver needs at least one vertex");
  for (auto [s, t] : q.arrows)
    if (s < 0 || s >= q.n || t < 0 || t >= q.n)
      fail(Err::BadInput, "arrow endpoint out of range");
}

void validate_dimvec(const Quiver& q, const std::vector<int>& a) {
  if ((int)a.size() != q.n)
    fail(Err::DimensionMismatch, "dimension vector has " + std::to_string(a.size()) +
                                      " entries, quiver has " + std::to_string(q.n) +
                                      " vertices");
  for (int x : a)
    if (x < 0) fail(Err::DimensionMismatch, "negative entry in dimension vector");
}

long long euler_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b) {
  validate_dimvec(q, a);
  validate_dimvec(q, b);
  long long r = 0;
  for (int i = 0; i < q.n; ++i) r += (long long)a[i] * b[i];
  for (auto [s, t] : q.arrows) r -= (long long)a[s] * b[t];
  return r;
}

long long skew_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b) {
  return euler_form(q, a, b) - euler_form(q, b, a);
}

std::vector<std::vector<long>> skew_matrix(const Quiver& q) {
  std::vector<std::vector<long>> m(q.n, std::vector<long>(q.n, 0));
  for (auto [s, t] : q.arrows) {
    m[s][t] -= 1;
    m[t][s] += 1;
  }
  return m;
}

long long rep_space_dim(const Quiver& q, const std::vector<int>& a) {
  validate_dimvec(q, a);
  long long d = 0;
  for (auto [s, t] : q.arrows) d += (long long)a[s] * a[t];
  return d;
}

DoubledQuiver loop_double(const Quiver& q) {
  validate_quiver(q);
  DoubledQuiver d;
  d.base = q;
  d.n_orig = q.arrows.size();
  d.total.n = q.n;
  d.total.arrows = q.arrows;
  for (auto [s, t] : q.arrows) d.total.arrows.emplace_back(t, s);
  for (int i = 0; i < q.n; ++i) d.total.arrows.emplace_back(i, i);
  return d;
}

long long cut_degree(const std::vector<int>& a) {
  long long d = 0;
  for (int x : a) d += (long long)x * x;
  return d;
}

Quiver builtin_quiver(const std::string& name) {
  if (name == "jordan") return Quiver{1, {{0, 0}}};
  if (name == "kronecker") return Quiver{2, {{0, 1}, {0, 1}}};
  fail(Err::BadInput, "unknown quiver '" + name + "'");
}

} // namespace mdt
