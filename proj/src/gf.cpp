#include "mdt/gf.hpp"

#include <array>

#include "mdt/errors.hpp"

namespace mdt {

namespace {

constexpr std::array<int, 25> small_primes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53, 59, 61,
                                              67, 71, 73, 79, 83, 89, 97};

bool is_small_prime(int q) {
  for (int p : small_primes)
    if (p == q) return true;
  return false;
}

// multiply digit vectors mod the defining polynomial x^d = red(x)
int poly_mul(int a, int b, int p, int d, const std::vector<int>& red) {
  std::vector<int> da(d), db(d), prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i, a /= p) da[i] = a % p;
  for (int i = 0; i < d; ++i, b /= p) db[i] = b % p;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (int k = 2 * d - 2; k >= d; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + c * red[i]) % p;
  }
  int r = 0;
  for (int i = d - 1; i >= 0; --i) r = r * p + prod[i];
  return r;
}

} // namespace

bool SmallField::supported(int q) {
  return is_small_prime(q) || q == 4 || q == 8 || q == 9;
}

SmallField::SmallField(int q) : q_(q), gen_(0) {
  if (!supported(q))
    fail(Err::NotPrimePower, std::to_string(q) + " is not a supported prime power");
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  if (is_small_prime(q)) {
    for (int a = 0; a < q; ++a) {
      neg_[a] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  } else {
    // x^2 = x+1 over F_2; x^3 = x+1 over F_2; x^2 = x+1 over F_3
    int p = q == 9 ? 3 : 2;
    int d = q == 8 ? 3 : 2;
    std::vector<int> red = q == 9 ? std::vector<int>{1, 1} : std::vector<int>{1, 1, 0};
    red.resize(d);
    for (int a = 0; a < q; ++a) {
      // digitwise negation and addition
      int na = 0, mult = 1;
      for (int x = a, i = 0; i < d; ++i, x /= p, mult *= p) na += ((p - x % p) % p) * mult;
      neg_[a] = na;
      for (int b = 0; b < q; ++b) {
        int s = 0;
        mult = 1;
        for (int x = a, y = b, i = 0; i < d; ++i, x /= p, y /= p, mult *= p)
          s += ((x % p + y % p) % p) * mult;
        add_[a * q + b] = s;
        mul_[a * q + b] = poly_mul(a, b, p, d, red);
      }
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  // any element of multiplicative order q-1
  for (int a = 2; a < q; ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = mul_[x * q + a];
      ++ord;
    }
    if (ord == q - 1) {
      gen_ = a;
      break;
    }
  }
  if (q == 2) gen_ = 1;
}

int SmallField::inv(int a) const {
  if (a == 0) fail(Err::DivisionByZero, "inverse of 0 in a finite field");
  return inv_[a];
}

} // namespace mdt
