#include "ecc/poly.hpp"

#include <algorithm>

namespace ecc {

UniPoly::UniPoly(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == Fe{0}) c_.pop_back();
}

UniPoly UniPoly::from_ints(const FieldPtr& f, const std::vector<uint64_t>& ints) {
  std::vector<Fe> c;
  c.reserve(ints.size());
  for (auto v : ints) c.push_back(f->element(v));
  return UniPoly(f, std::move(c));
}

Fe UniPoly::eval(Fe a) const {
  Fe acc{0};
  for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, a), c_[i]);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  require_same_field(f_, o.f_);
  std::vector<Fe> out(std::max(c_.size(), o.c_.size()), Fe{0});
  for (size_t i = 0; i < out.size(); ++i) out[i] = f_->add(coeff(int(i)), o.coeff(int(i)));
  return UniPoly(f_, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  require_same_field(f_, o.f_);
  std::vector<Fe> out(std::max(c_.size(), o.c_.size()), Fe{0});
  for (size_t i = 0; i < out.size(); ++i) out[i] = f_->sub(coeff(int(i)), o.coeff(int(i)));
  return UniPoly(f_, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  require_same_field(f_, o.f_);
  if (is_zero() || o.is_zero()) return zero(f_);
  std::vector<Fe> out(c_.size() + o.c_.size() - 1, Fe{0});
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == Fe{0}) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = f_->add(out[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return UniPoly(f_, std::move(out));
}

UniPoly UniPoly::scaled(Fe c) const {
  std::vector<Fe> out(c_);
  for (auto& x : out) x = f_->mul(x, c);
  return UniPoly(f_, std::move(out));
}

UniPoly UniPoly::with_scaled_arg(Fe c) const {
  std::vector<Fe> out(c_);
  Fe power{1};
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = f_->mul(out[i], power);
    power = f_->mul(power, c);
  }
  return UniPoly(f_, std::move(out));
}

Fe poly_eval(const UniPoly& p, Fe a) { return p.eval(a); }

std::pair<UniPoly, UniPoly> quotrem(const UniPoly& dividend, const UniPoly& divisor) {
  require_same_field(dividend.field(), divisor.field());
  if (divisor.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  const auto& f = dividend.field();
  std::vector<Fe> rem(dividend.coeffs());
  int dd = divisor.degree();
  Fe lead_inv = f->inv(divisor.coeff(dd));
  std::vector<Fe> quot(rem.size() > size_t(dd) ? rem.size() - dd : 0, Fe{0});
  for (int i = int(rem.size()) - 1; i >= dd; --i) {
    Fe c = f->mul(rem[i], lead_inv);
    if (c == Fe{0}) continue;
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j)
      rem[i - dd + j] = f->sub(rem[i - dd + j], f->mul(c, divisor.coeff(j)));
  }
  return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [ij, c] : c_) d = std::max(d, ij.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [ij, c] : c_) d = std::max(d, ij.second);
  return d;
}

Fe BiPoly::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Fe{0} : it->second;
}

void BiPoly::add_term(int i, int j, Fe c) {
  if (c == Fe{0}) return;
  auto key = std::make_pair(i, j);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, c);
  } else {
    it->second = f_->add(it->second, c);
    if (it->second == Fe{0}) c_.erase(it);
  }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  require_same_field(f_, o.f_);
  BiPoly out(*this);
  for (const auto& [ij, c] : o.c_) out.add_term(ij.first, ij.second, c);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  require_same_field(f_, o.f_);
  BiPoly out(*this);
  for (const auto& [ij, c] : o.c_) out.add_term(ij.first, ij.second, f_->neg(c));
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  require_same_field(f_, o.f_);
  BiPoly out(f_);
  for (const auto& [a, ca] : c_)
    for (const auto& [b, cb] : o.c_)
      out.add_term(a.first + b.first, a.second + b.second, f_->mul(ca, cb));
  return out;
}

BiPoly BiPoly::y_minus(const UniPoly& p) {
  BiPoly out(p.field());
  out.add_term(0, 1, Fe{1});
  for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.field()->neg(p.coeff(i)));
  return out;
}

long long weighted_degree(const BiPoly& q, long long wx, long long wy) {
  if (q.is_zero()) fail(Err::ZeroPolynomial, "weighted degree of zero polynomial");
  long long d = 0;
  for (const auto& [ij, c] : q.terms())
    d = std::max(d, ij.first * wx + ij.second * wy);
  return d;
}

uint32_t binom_mod_p(long long n, long long k, uint32_t p) {
  if (k < 0 || k > n) return 0;
  // Lucas: multiply binomials of base-p digits.
  uint64_t result = 1;
  while (n > 0 || k > 0) {
    uint32_t nd = uint32_t(n % p), kd = uint32_t(k % p);
    if (kd > nd) return 0;
    // C(nd, kd) with nd, kd < p
    uint64_t num = 1, den = 1;
    for (uint32_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible mod p
    uint64_t den_inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) den_inv = den_inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * den_inv % p) % p;
    n /= p;
    k /= p;
  }
  return uint32_t(result);
}

Fe hasse_coeff(const BiPoly& q, Fe a, Fe b, int i, int j) {
  const auto& f = q.field();
  uint32_t p = f->characteristic();
  Fe acc{0};
  for (const auto& [ij, c] : q.terms()) {
    int ii = ij.first, jj = ij.second;
    if (ii < i || jj < j) continue;
    Fe term = c;
    term = f->mul(term, f->from_int_mod_p(binom_mod_p(ii, i, p)));
    term = f->mul(term, f->from_int_mod_p(binom_mod_p(jj, j, p)));
    term = f->mul(term, f->pow(a, uint64_t(ii - i)));
    term = f->mul(term, f->pow(b, uint64_t(jj - j)));
    acc = f->add(acc, term);
  }
  return acc;
}

bool has_multiplicity(const BiPoly& q, Fe a, Fe b, int m) {
  if (m < 1) fail(Err::InvalidArgument, "multiplicity must be >= 1");
  for (int total = 0; total < m; ++total)
    for (int i = 0; i <= total; ++i)
      if (hasse_coeff(q, a, b, i, total - i) != Fe{0}) return false;
  return true;
}

BiPoly shift(const BiPoly& q, Fe a, Fe b) {
  const auto& f = q.field();
  uint32_t p = f->characteristic();
  BiPoly out(f);
  for (const auto& [ij, c] : q.terms()) {
    int ii = ij.first, jj = ij.second;
    for (int di = 0; di <= ii; ++di) {
      Fe xpart = f->mul(f->from_int_mod_p(binom_mod_p(ii, di, p)), f->pow(a, uint64_t(ii - di)));
      if (xpart == Fe{0}) continue;
      for (int dj = 0; dj <= jj; ++dj) {
        Fe ypart =
            f->mul(f->from_int_mod_p(binom_mod_p(jj, dj, p)), f->pow(b, uint64_t(jj - dj)));
        out.add_term(di, dj, f->mul(c, f->mul(xpart, ypart)));
      }
    }
  }
  return out;
}

UniPoly compose_y(const BiPoly& q, const UniPoly& p) {
  require_same_field(q.field(), p.field());
  const auto& f = q.field();
  int dy = q.deg_y();
  if (dy < 0) return UniPoly::zero(f);
  // Horner in Y with univariate coefficients.
  UniPoly acc = UniPoly::zero(f);
  for (int j = dy; j >= 0; --j) {
    std::vector<Fe> slice;
    for (const auto& [ij, c] : q.terms()) {
      if (ij.second != j) continue;
      if (int(slice.size()) <= ij.first) slice.resize(ij.first + 1, Fe{0});
      slice[ij.first] = c;
    }
    acc = acc * p + UniPoly(f, std::move(slice));
  }
  return acc;
}

std::pair<BiPoly, UniPoly> quotrem_y_linear(const BiPoly& q, const UniPoly& p) {
  require_same_field(q.field(), p.field());
  const auto& f = q.field();
  int dy = q.deg_y();
  // Collect Y-slices C_j(X).
  std::vector<UniPoly> slices;
  for (int j = 0; j <= std::max(dy, 0); ++j) {
    std::vector<Fe> s;
    for (const auto& [ij, c] : q.terms()) {
      if (ij.second != j) continue;
      if (int(s.size()) <= ij.first) s.resize(ij.first + 1, Fe{0});
      s[ij.first] = c;
    }
    slices.push_back(UniPoly(f, std::move(s)));
  }
  // Synthetic division by (Y - p): H_{j-1} = C_j + H_j * p, top down.
  BiPoly quot(f);
  UniPoly carry = UniPoly::zero(f);
  for (int j = dy; j >= 1; --j) {
    carry = slices[j] + carry * p;
    for (int i = 0; i <= carry.degree(); ++i) quot.add_term(i, j - 1, carry.coeff(i));
  }
  UniPoly rem = dy >= 0 ? slices[0] + carry * p : UniPoly::zero(f);
  return {quot, rem};
}

namespace {

// Divide out the largest power of X; returns the stripped polynomial.
BiPoly strip_x_valuation(const BiPoly& q) {
  int v = -1;
  for (const auto& [ij, c] : q.terms()) v = (v < 0) ? ij.first : std::min(v, ij.first);
  if (v <= 0) return q;
  BiPoly out(q.field());
  for (const auto& [ij, c] : q.terms()) out.add_term(ij.first - v, ij.second, c);
  return out;
}

// Q(0, Y) after stripping: the lowest nonvanishing univariate slice.
UniPoly x0_slice(const BiPoly& q) {
  std::vector<Fe> s;
  for (const auto& [ij, c] : q.terms()) {
    if (ij.first != 0) continue;
    if (int(s.size()) <= ij.second) s.resize(ij.second + 1, Fe{0});
    s[ij.second] = c;
  }
  return UniPoly(q.field(), std::move(s));
}

// Q(X, X*Y + gamma).
BiPoly subst_xy_plus_gamma(const BiPoly& q, Fe gamma) {
  const auto& f = q.field();
  uint32_t p = f->characteristic();
  BiPoly out(f);
  for (const auto& [ij, c] : q.terms()) {
    int i = ij.first, j = ij.second;
    for (int l = 0; l <= j; ++l) {
      Fe coeff = f->mul(c, f->mul(f->from_int_mod_p(binom_mod_p(j, l, p)),
                                  f->pow(gamma, uint64_t(j - l))));
      out.add_term(i + l, l, coeff);
    }
  }
  return out;
}

void lift_descend(const BiPoly& q, const FieldPtr& f, int depth_left, std::vector<Fe>& cur,
                  std::vector<std::vector<Fe>>& found) {
  BiPoly qs = strip_x_valuation(q);
  UniPoly slice = x0_slice(qs);
  for (uint32_t v = 0; v < f->order(); ++v) {
    Fe gamma{v};
    if (slice.eval(gamma) != Fe{0}) continue;
    cur.push_back(gamma);
    if (depth_left == 1) {
      found.push_back(cur);
    } else {
      lift_descend(subst_xy_plus_gamma(qs, gamma), f, depth_left - 1, cur, found);
    }
    cur.pop_back();
  }
}

}  // namespace

std::vector<UniPoly> y_roots(const BiPoly& q, int k) {
  if (q.is_zero()) fail(Err::ZeroPolynomial, "y_roots of zero polynomial");
  if (k < 1) fail(Err::InvalidArgument, "y_roots requires k >= 1");
  const auto& f = q.field();
  std::vector<Fe> cur;
  std::vector<std::vector<Fe>> raw;
  lift_descend(q, f, k, cur, raw);
  std::vector<UniPoly> out;
  for (auto& coeffs : raw) {
    UniPoly p(f, std::move(coeffs));
    if (compose_y(q, p).is_zero()) out.push_back(std::move(p));
  }
  auto key = [k](const UniPoly& p) {
    std::vector<uint32_t> t(k, 0);
    for (int i = 0; i <= p.degree(); ++i) t[i] = p.coeff(i).v;
    return t;
  };
  std::sort(out.begin(), out.end(),
            [&](const UniPoly& a, const UniPoly& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const UniPoly& a, const UniPoly& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace ecc
