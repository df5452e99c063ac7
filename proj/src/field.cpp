#include "ecc/field.hpp"

#include <algorithm>

namespace ecc {

namespace {

constexpr uint64_t kMaxOrder = 1u << 16;

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Remainder of a mod b over F_p, b monic; coefficients ascending.
std::vector<uint32_t> poly_rem_fp(std::vector<uint32_t> a, const std::vector<uint32_t>& b,
                                  uint32_t p) {
  int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db) {
    uint32_t lead = a.back();
    if (lead != 0) {
      int shift = int(a.size()) - 1 - db;
      for (int i = 0; i <= db; ++i) {
        uint64_t sub = uint64_t(lead) * b[i] % p;
        a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (int(a.size()) - 1 < db) break;
  }
  return a;
}

}  // namespace

// Trial division by every monic polynomial of degree 1..m/2: any nontrivial
// factorization contains such a divisor.
bool Field::modulus_irreducible() const {
  for (uint32_t d = 1; 2 * d <= m_; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p_;
    for (uint64_t v = 0; v < count; ++v) {
      std::vector<uint32_t> divisor(d + 1, 0);
      uint64_t t = v;
      for (uint32_t i = 0; i < d; ++i) {
        divisor[i] = uint32_t(t % p_);
        t /= p_;
      }
      divisor[d] = 1;
      if (poly_rem_fp(mod_, divisor, p_).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree m (low coefficients
// enumerated as base-p digits of an increasing counter). Deterministic, so
// independently constructed fields of the same order share one modulus.
void Field::pick_modulus() {
  uint64_t count = 1;
  for (uint32_t i = 0; i < m_; ++i) count *= p_;
  for (uint64_t v = 0; v < count; ++v) {
    std::vector<uint32_t> cand(m_ + 1, 0);
    uint64_t t = v;
    for (uint32_t i = 0; i < m_; ++i) {
      cand[i] = uint32_t(t % p_);
      t /= p_;
    }
    cand[m_] = 1;
    mod_ = cand;
    if (modulus_irreducible()) return;
  }
  fail(Err::InternalContradiction, "no irreducible modulus of requested degree");
}

Field::Digits Field::decode(uint32_t v) const {
  Digits d(m_, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

uint32_t Field::encode(const Digits& d) const {
  uint32_t v = 0;
  for (uint32_t i = m_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] : 0);
  return v;
}

// Convolution followed by reduction mod the monic modulus; digits mod p.
uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
  Digits da = decode(a), db = decode(b);
  std::vector<uint64_t> prod(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (uint32_t j = 0; j < m_; ++j) prod[i + j] += uint64_t(da[i]) * db[j];
  }
  for (auto& c : prod) c %= p_;
  for (uint32_t deg = 2 * m_ - 2; deg >= m_; --deg) {
    uint64_t lead = prod[deg];
    if (lead != 0) {
      // subtract lead * X^(deg-m) * modulus
      for (uint32_t i = 0; i <= m_; ++i) {
        uint64_t sub = lead * mod_[i] % p_;
        prod[deg - m_ + i] = (prod[deg - m_ + i] + p_ - sub) % p_;
      }
    }
    if (deg == m_) break;
  }
  Digits out(m_);
  for (uint32_t i = 0; i < m_; ++i) out[i] = uint32_t(prod[i]);
  return encode(out);
}

uint32_t Field::pow_slow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (q_ > 2) e %= (q_ - 1);
  uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = (m_ == 1) ? uint32_t(uint64_t(r) * base % p_) : mul_slow(r, base);
    base = (m_ == 1) ? uint32_t(uint64_t(base) * base % p_) : mul_slow(base, base);
    e >>= 1;
  }
  return r;
}

void Field::find_smallest_primitive() {
  if (q_ < 3) return;
  auto factors = prime_factors(q_ - 1);
  for (uint32_t c = 2; c < q_; ++c) {
    bool full_order = true;
    for (uint32_t f : factors) {
      if (pow_slow(c, (q_ - 1) / f) == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      prim_ = c;
      return;
    }
  }
  fail(Err::InternalContradiction, "no primitive element found");
}

void Field::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  uint32_t acc = 1;
  for (uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = acc;
    log_[acc] = i;
    acc = mul_slow(acc, prim_);
  }
  if (acc != 1) fail(Err::InternalContradiction, "primitive element order mismatch");
}

FieldPtr Field::make(uint32_t p, uint32_t m,
                     const std::optional<std::vector<uint32_t>>& modulus) {
  if (!is_prime(p)) fail(Err::NonPrimeCharacteristic, "p = " + std::to_string(p));
  if (m < 1) fail(Err::InvalidArgument, "extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      fail(Err::UnsupportedOrder, "order " + std::to_string(p) + "^" + std::to_string(m) +
                                      " exceeds 2^16");
  }

  auto fm = std::shared_ptr<Field>(new Field());
  fm->p_ = p;
  fm->m_ = m;
  fm->q_ = uint32_t(q);

  if (m == 1) {
    if (modulus && !modulus->empty())
      fail(Err::InvalidArgument, "prime field takes no modulus");
  } else {
    if (modulus) {
      auto mod = *modulus;
      if (mod.size() != m + 1 || mod[m] != 1)
        fail(Err::InvalidArgument, "modulus must be monic of degree exactly m");
      for (auto& c : mod)
        if (c >= p) fail(Err::InvalidArgument, "modulus coefficient out of range");
      fm->mod_ = mod;
      if (!fm->modulus_irreducible())
        fail(Err::ReducibleModulus, "supplied modulus factors over F_p");
    } else {
      fm->pick_modulus();
    }
  }
  fm->find_smallest_primitive();
  if (m > 1) fm->build_tables();
  return fm;
}

Fe Field::element(uint64_t value) const {
  if (value >= q_) fail(Err::InvalidArgument, "element value " + std::to_string(value) +
                                                  " outside [0, " + std::to_string(q_) + ")");
  return Fe{uint32_t(value)};
}

Fe Field::add(Fe a, Fe b) const {
  if (m_ == 1) return Fe{uint32_t((uint64_t(a.v) + b.v) % p_)};
  if (p_ == 2) return Fe{a.v ^ b.v};
  Digits da = decode(a.v), db = decode(b.v);
  for (uint32_t i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return Fe{encode(da)};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::neg(Fe a) const {
  if (m_ == 1) return Fe{a.v == 0 ? 0 : p_ - a.v};
  if (p_ == 2) return a;
  Digits d = decode(a.v);
  for (auto& c : d) c = c == 0 ? 0 : p_ - c;
  return Fe{encode(d)};
}

Fe Field::mul(Fe a, Fe b) const {
  if (m_ == 1) return Fe{uint32_t(uint64_t(a.v) * b.v % p_)};
  if (a.v == 0 || b.v == 0) return Fe{0};
  uint64_t s = uint64_t(log_[a.v]) + log_[b.v];
  if (s >= q_ - 1) s -= q_ - 1;
  return Fe{exp_[s]};
}

Fe Field::inv(Fe a) const {
  if (a.v == 0) fail(Err::DivisionByZero, "inverse of zero");
  if (m_ == 1) return pow(a, p_ - 2);
  uint32_t l = log_[a.v];
  return Fe{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Fe Field::div(Fe a, Fe b) const {
  if (b.v == 0) fail(Err::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Fe Field::pow(Fe a, uint64_t e) const {
  if (a.v == 0) return e == 0 ? one() : zero();
  if (m_ == 1) return Fe{pow_slow(a.v, e)};
  uint64_t er = q_ > 2 ? e % (q_ - 1) : 0;
  return Fe{exp_[uint64_t(log_[a.v]) * er % (q_ - 1)]};
}

Fe Field::primitive() const {
  if (q_ < 3) fail(Err::InvalidArgument, "primitive element requires q >= 3");
  return Fe{prim_};
}

Fe find_primitive(const Field& f) { return f.primitive(); }

}  // namespace ecc
