#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mdt {

// Finite quiver on vertices 0..n-1. Loops and parallel arrows allowed.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows; // (source, target)

  bool operator==(const Quiver& o) const { return n == o.n && arrows == o.arrows; }
};

void validate_quiver(const Quiver& q);
void validate_dimvec(const Quiver& q, const std::vector<int>& a);

// Euler form chi(a,b) = sum_i a_i b_i - sum_{arrows s->t} a_s b_t
long long euler_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b);

// antisymmetrized Euler form <a,b> = chi(a,b) - chi(b,a)
long long skew_form(const Quiver& q, const std::vector<int>& a, const std::vector<int>& b);

// matrix of the antisymmetrized form, for the quantum torus product
std::vector<std::vector<long>> skew_matrix(const Quiver& q);

// dim of the representation space prod Hom(k^{a_s}, k^{a_t})
long long rep_space_dim(const Quiver& q, const std::vector<int>& a);

// Quiver with every arrow doubled and one loop added per vertex. Arrows are
// ordered: originals, then duals (reversed, same order), then loops by vertex.
struct DoubledQuiver {
  Quiver base;
  Quiver total;
  size_t n_orig = 0; // arrows [0, n_orig) original, [n_orig, 2 n_orig) dual
};

DoubledQuiver loop_double(const Quiver& q);

// degree of the cut formed by the added loops: sum_i a_i^2
long long cut_degree(const std::vector<int>& a);

// "jordan" (one vertex, one loop) or "kronecker" (two vertices, two arrows)
Quiver builtin_quiver(const std::string& name);

} // namespace mdt
