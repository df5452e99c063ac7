#pragma once

#include <cstdint>
#include <string>

#include "ecc/errors.hpp"

namespace ecc {

/// Exact rational with 64-bit parts, always normalized (gcd 1, den > 0).
/// Distances, rates and error fractions are computed exactly; there is no
/// floating point anywhere in the library.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  /// "a/b", or just "a" when the denominator is 1.
  std::string str() const;
  static Rational parse(const std::string& text);

  /// Largest integer <= num/den.
  long long floor() const;
  /// Smallest integer >= num/den.
  long long ceil() const;

 private:
  long long num_;
  long long den_;
};

}  // namespace ecc
