#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ecc/field.hpp"

namespace ecc {

/// Univariate polynomial over F_q, coefficients ascending, trailing zeros
/// trimmed. The zero polynomial is the empty vector (degree -1).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(FieldPtr f, std::vector<Fe> coeffs);
  static UniPoly zero(FieldPtr f) { return UniPoly(std::move(f), {}); }
  static UniPoly constant(FieldPtr f, Fe c) { return UniPoly(std::move(f), {c}); }
  static UniPoly from_ints(const FieldPtr& f, const std::vector<uint64_t>& ints);

  const FieldPtr& field() const { return f_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  Fe coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[i] : Fe{0}; }

  /// Horner evaluation.
  Fe eval(Fe a) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(Fe c) const;
  /// p(c*X): multiplies coefficient i by c^i.
  UniPoly with_scaled_arg(Fe c) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

 private:
  FieldPtr f_;
  std::vector<Fe> c_;
};

Fe poly_eval(const UniPoly& p, Fe a);

/// Exact division with remainder: first = quotient, second = remainder,
/// dividend = q*divisor + r with deg r < deg divisor.
std::pair<UniPoly, UniPoly> quotrem(const UniPoly& dividend, const UniPoly& divisor);

/// Bivariate polynomial stored sparsely as (X-exp, Y-exp) -> nonzero coeff.
class BiPoly {
 public:
  explicit BiPoly(FieldPtr f) : f_(std::move(f)) {}

  const FieldPtr& field() const { return f_; }
  const std::map<std::pair<int, int>, Fe>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int deg_x() const;
  int deg_y() const;
  Fe coeff(int i, int j) const;

  /// Adds c*X^i*Y^j, erasing the monomial if the sum cancels.
  void add_term(int i, int j, Fe c);

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  /// Y - p(X), the factor shape consumed by the list decoders.
  static BiPoly y_minus(const UniPoly& p);

 private:
  FieldPtr f_;
  std::map<std::pair<int, int>, Fe> c_;
};

/// Max over stored monomials of i*wx + j*wy; throws ZeroPolynomial.
long long weighted_degree(const BiPoly& q, long long wx, long long wy);

/// Coefficient of X^i Y^j in Q(X+a, Y+b), computed in Hasse form
/// (binomials reduced mod p), so it stays meaningful in small
/// characteristic and is linear in the coefficients of Q.
Fe hasse_coeff(const BiPoly& q, Fe a, Fe b, int i, int j);

/// True iff every shift coefficient of total degree < m vanishes at (a, b).
bool has_multiplicity(const BiPoly& q, Fe a, Fe b, int m);

/// Q(X+a, Y+b) as an explicit polynomial.
BiPoly shift(const BiPoly& q, Fe a, Fe b);

/// Q(X, p(X)): substitute a univariate for Y.
UniPoly compose_y(const BiPoly& q, const UniPoly& p);

/// Division of Q by (Y - p(X)) in the Y variable (synthetic division):
/// Q = (Y - p)*quotient + remainder, remainder univariate in X.
std::pair<BiPoly, UniPoly> quotrem_y_linear(const BiPoly& q, const UniPoly& p);

/// All p with deg(p) < k and Q(X, p(X)) identically zero, each exactly once,
/// ordered by the canonical coefficient encoding. Recursive constant-term
/// lifting: candidate values for p(0) are roots of the lowest nonvanishing
/// X-slice of Q; recursion substitutes Y <- X*Y + gamma with X powers divided
/// out. Candidates are only emitted after a full substitution check.
std::vector<UniPoly> y_roots(const BiPoly& q, int k);

/// C(n, k) mod p by Lucas' theorem.
uint32_t binom_mod_p(long long n, long long k, uint32_t p);

}  // namespace ecc
