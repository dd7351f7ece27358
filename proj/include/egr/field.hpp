#ifndef EGR_FIELD_HPP
#define EGR_FIELD_HPP

#include <string>
#include <vector>

namespace egr {

// Arithmetic context for GF(p^n), q = p^n.
//
// Elements are plain ints in [0, q): the base-p value of the coefficient
// vector of the polynomial representative, constant term least significant.
// So 0 and 1 are the field's zero and one, and for q = 4 the element of
// index 2 is the generator a with a^2 = a + 1.
//
// The reduction modulus is the lexicographically smallest monic irreducible
// polynomial of degree n over GF(p), comparing coefficient sequences from
// the constant term upward. Both conventions are fixed so that vertex
// labelings derived from field elements are identical across runs.
//
// Immutable after construction; safe to share between threads.
class Field {
 public:
  static constexpr int kMaxOrder = 1024;    // desk-scale limit
  static constexpr int kTableLimit = 256;   // full mul/inv tables up to here

  // ParameterError if q is not a prime power, ResourceError if q > kMaxOrder.
  static Field make(int q);

  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }

  // Modulus coefficients, constant term first, length n+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // DomainError on 0
  int pow(int a, long long e) const;

  // Coefficient vector of an element, length n, constant term first.
  std::vector<int> coeffs(int a) const;
  int element(const std::vector<int>& coeffs) const;

  // Order of a in the multiplicative group; DomainError on 0.
  int mult_order(int a) const;
  // Smallest element index of multiplicative order q-1.
  int primitive_element() const;

 private:
  Field() = default;
  int mul_generic(int a, int b) const;

  int p_ = 0, n_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> mul_table_;  // q*q, only when q <= kTableLimit
  std::vector<int> inv_table_;
};

// True iff f is GF(2^{2e+1}) with e >= 1, the field shape the Suzuki
// constructions require.
bool is_suzuki_field(const Field& f);

// 2^{e+1} for a Suzuki field; ParameterError otherwise.
long long suzuki_sigma_exponent(const Field& f);

// The endomorphism x -> x^{2^{e+1}} on GF(2^{2e+1}). Its square is the
// Frobenius square: sigma(sigma(x)) = x^2 for every x.
int suzuki_sigma(const Field& f, int x);

}  // namespace egr

#endif
