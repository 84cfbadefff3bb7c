#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "mdt/motive.hpp"
#include "mdt/quiver.hpp"

namespace mdt {

// Result of one finite-field count. The method tag records how the number
// was obtained so downstream checks can insist on an independent route.
struct CountReport {
  Quiver quiver;
  std::vector<int> dimvec;
  long q = 0;
  mpz_class count;
  std::string method; // direct-enumeration | linear-fiber | centralizer-sum
};

// Points of the zero fiber of the moment map inside the doubled (loop-free)
// representation space: enumerate the original arrows, solve the relations,
// which are linear in the dual arrows. Feasibility guard: q^{dim R(Q,a)} must
// stay small.
CountReport count_preprojective(const Quiver& q, const std::vector<int>& alpha, long p);

// Fiber sizes of the trace-of-potential function on the representation space
// of the loop double, one entry per field element. Plain enumeration of every
// matrix entry, loops included; nothing here knows about the linear structure
// that count_preprojective exploits, which is the point.
std::vector<mpz_class> potential_fiber_histogram(const DoubledQuiver& dq,
                                                 const std::vector<int>& alpha, long p);

CountReport count_potential_fiber(const DoubledQuiver& dq, const std::vector<int>& alpha,
                                  long p, long c);

// One GL-orbit of representations, with the invariants needed to recognize
// indecomposables: |orbit|, |Aut|, dim End, and whether End/rad is the prime
// field itself.
struct OrbitInfo {
  mpz_class orbit_size;
  mpz_class aut_size;
  int end_dim = 0;
  bool abs_indec = false;
};

// All orbits on R(Q,a)(F_q), discovery order; the first orbit is the zero
// representation. Checks |orbit| * |Aut| = |GL_a(F_q)| for every orbit.
std::vector<OrbitInfo> rep_orbits(const Quiver& q, const std::vector<int>& alpha, long p);

// Number of absolutely indecomposable representations of dimension alpha up
// to isomorphism, by exhaustive orbit classification.
CountReport kac_bruteforce(const Quiver& q, const std::vector<int>& alpha, long p);

// Fit (value at q) samples to a polynomial of degree <= d with integer
// coefficients; surplus samples must agree with the fit.
LaurentZ interpolate_kac(const std::vector<std::pair<long, mpz_class>>& samples, int d);

// [Aut M] for a representation whose End has the given total dimension and
// whose semisimplification has the given multiplicities:
//   L^{dim End} * prod_i (L^{-1})_{n_i}
MotiveScalar aut_motive(const std::vector<int>& multiplicities, int end_dim);

} // namespace mdt
