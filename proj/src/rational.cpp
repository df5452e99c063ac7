#include "ecc/rational.hpp"

namespace ecc {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

Rational reduce(i128 n, i128 d) {
  i128 g = gcd128(n, d);
  return Rational((long long)(n / g), (long long)(d / g));
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(Err::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  num_ = (long long)(num / g);
  den_ = (long long)(den / g);
}

Rational Rational::operator+(const Rational& o) const {
  return reduce(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return reduce(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(Err::DivisionByZero, "rational division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    long long n = std::stoll(text.substr(0, slash));
    long long d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad rational '" + text + "'");
  }
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

}  // namespace ecc
