#include "egr/field.hpp"

#include <algorithm>

#include "egr/errors.hpp"

namespace egr {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
// Leading zeros are allowed; degree is the last nonzero position.

int poly_degree(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by monic g, in place.
void poly_mod(std::vector<int>& f, const std::vector<int>& g, int p) {
  const int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg; --i) {
    const int c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      int& t = f[i - dg + j];
      t = (t - c * g[j]) % p;
      if (t < 0) t += p;
    }
  }
}

bool divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
  std::vector<int> r = f;
  poly_mod(r, g, p);
  return poly_degree(r) < 0;
}

// Exhaustive trial division; fine at desk scale.
bool is_irreducible(const std::vector<int>& f, int p) {
  const int n = poly_degree(f);
  std::vector<int> g;
  for (int d = 1; 2 * d <= n; ++d) {
    g.assign(d + 1, 0);
    g[d] = 1;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long m = 0; m < total; ++m) {
      long long t = m;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(t % p);
        t /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree n, comparing
// coefficient sequences from the constant term upward.
std::vector<int> smallest_irreducible(int p, int n) {
  std::vector<int> f(n + 1, 0);
  f[n] = 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (long long m = 0; m < total; ++m) {
    long long t = m;
    for (int i = n - 1; i >= 0; --i) {  // constant term is the most significant digit
      f[i] = static_cast<int>(t % p);
      t /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("no irreducible polynomial found");  // cannot happen
}

}  // namespace

Field Field::make(int q) {
  if (q < 2) throw ParameterError("field order must be at least 2");
  if (q > kMaxOrder)
    throw ResourceError("field order " + std::to_string(q) + " exceeds limit " +
                        std::to_string(kMaxOrder));
  int p = 0;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  int n = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1)
    throw ParameterError(std::to_string(q) + " is not a prime power");

  Field f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = q;
  if (n == 1) {
    f.modulus_ = {0, 1};  // the polynomial x; arithmetic is plain mod p
  } else {
    f.modulus_ = smallest_irreducible(p, n);
  }

  if (q <= kTableLimit) {
    f.mul_table_.assign(static_cast<size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
      for (int b = a; b < q; ++b) {
        const int r = f.mul_generic(a, b);
        f.mul_table_[static_cast<size_t>(a) * q + b] = r;
        f.mul_table_[static_cast<size_t>(b) * q + a] = r;
      }
    f.inv_table_.assign(q, 0);
    for (int a = 1; a < q; ++a) {
      for (int b = 1; b < q; ++b) {
        if (f.mul_table_[static_cast<size_t>(a) * q + b] == 1) {
          f.inv_table_[a] = b;
          break;
        }
      }
      if (f.inv_table_[a] == 0) throw InternalError("element without inverse");
    }
  }
  return f;
}

int Field::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, m = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

int Field::sub(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, m = 1;
  for (int i = 0; i < n_; ++i) {
    int d = (a % p_ - b % p_) % p_;
    if (d < 0) d += p_;
    r += d * m;
    a /= p_;
    b /= p_;
    m *= p_;
  }
  return r;
}

int Field::neg(int a) const { return sub(0, a); }

int Field::mul_generic(int a, int b) const {
  // Schoolbook product of the coefficient vectors, then reduce.
  std::vector<int> prod(2 * n_ - 1, 0);
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < n_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < n_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  if (n_ > 1) poly_mod(prod, modulus_, p_);
  int r = 0;
  for (int i = n_ - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

int Field::mul(int a, int b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_generic(a, b);
}

int Field::inv(int a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

int Field::pow(int a, long long e) const {
  if (e < 0) throw ParameterError("negative exponent");
  int r = 1, base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<int> Field::coeffs(int a) const {
  std::vector<int> c(n_);
  for (int i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int Field::element(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != n_)
    throw ParameterError("coefficient vector has wrong length");
  int r = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= p_)
      throw ParameterError("coefficient out of range");
    r = r * p_ + coeffs[i];
  }
  return r;
}

int Field::mult_order(int a) const {
  if (a == 0) throw DomainError("order of zero");
  int ord = 1, acc = a;
  while (acc != 1) {
    acc = mul(acc, a);
    ++ord;
  }
  return ord;
}

int Field::primitive_element() const {
  for (int a = 1; a < q_; ++a)
    if (mult_order(a) == q_ - 1) return a;
  throw InternalError("multiplicative group not cyclic");  // cannot happen
}

bool is_suzuki_field(const Field& f) {
  return f.p() == 2 && f.n() >= 3 && f.n() % 2 == 1;
}

long long suzuki_sigma_exponent(const Field& f) {
  if (!is_suzuki_field(f))
    throw ParameterError("field is not GF(2^{2e+1}) with e >= 1");
  const int e = (f.n() - 1) / 2;
  return 1LL << (e + 1);
}

int suzuki_sigma(const Field& f, int x) {
  return f.pow(x, suzuki_sigma_exponent(f));
}

}  // namespace egr
