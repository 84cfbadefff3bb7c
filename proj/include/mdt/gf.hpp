#pragma once

#include <vector>

namespace mdt {

// Arithmetic in a small finite field via precomputed tables. Elements are
// 0..q-1; for prime q this is arithmetic mod q, for q = 4, 8, 9 the index
// encodes the base-p digits of the polynomial representative.
class SmallField {
public:
  explicit SmallField(int q); // primes up to 97 and 4, 8, 9

  int size() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const; // a != 0
  int primitive() const { return gen_; }

  static bool supported(int q);

private:
  int q_;
  int gen_;
  std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace mdt
