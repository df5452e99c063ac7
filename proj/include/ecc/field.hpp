#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ecc/errors.hpp"

namespace ecc {

/// One element of a finite field, stored as its canonical integer in [0, q).
/// For GF(p^m) the integer packs the coefficient vector (c_0,...,c_{m-1})
/// over F_p in base p, so 0 and 1 always encode the additive and
/// multiplicative identities. Equality of elements is equality of integers.
struct FieldElement {
  uint32_t v = 0;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

using Fe = FieldElement;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic context for GF(p^m), q = p^m <= 2^16.
///
/// Prime fields use direct modular arithmetic. Extension fields reduce
/// polynomials modulo an irreducible modulus; multiplication, inversion and
/// powers additionally go through log/antilog tables built once at
/// construction (the characteristic-2 add is a plain xor). Construction is
/// deterministic: when no modulus is supplied the lexicographically smallest
/// monic irreducible of degree m over F_p is selected, so two runs (or two
/// implementations following the same rule) agree bit for bit.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(uint32_t p, uint32_t m,
                       const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return m_; }
  uint32_t order() const { return q_; }
  /// Modulus coefficients, ascending powers, monic; empty for prime fields.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// Validating constructor from a canonical integer.
  Fe element(uint64_t value) const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;  // throws DivisionByZero on 0
  Fe div(Fe a, Fe b) const;
  /// Square-and-multiply; the exponent is reduced mod q-1 for nonzero bases.
  Fe pow(Fe a, uint64_t e) const;

  /// Smallest canonical integer whose multiplicative order is exactly q-1.
  /// Requires q >= 3.
  Fe primitive() const;

  /// Embeds an integer via reduction mod p (prime-subfield constant).
  Fe from_int_mod_p(uint64_t c) const { return Fe{uint32_t(c % p_)}; }

  /// Structural equality: same (p, m, modulus).
  bool same_as(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
  }

 private:
  Field() = default;

  using Digits = std::vector<uint32_t>;  // coefficients over F_p, ascending
  Digits decode(uint32_t v) const;
  uint32_t encode(const Digits& d) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;  // polynomial mul + reduce
  uint32_t pow_slow(uint32_t a, uint64_t e) const;
  bool modulus_irreducible() const;
  void pick_modulus();
  void build_tables();
  void find_smallest_primitive();

  uint32_t p_ = 0;
  uint32_t m_ = 1;
  uint32_t q_ = 0;
  std::vector<uint32_t> mod_;   // ascending, size m+1, monic; empty if m == 1
  uint32_t prim_ = 0;           // 0 means none (q == 2)
  std::vector<uint32_t> exp_;   // exp_[i] = prim^i, i in [0, q-1); extensions only
  std::vector<uint32_t> log_;   // inverse of exp_, log_[1..q-1]
};

/// The spec-level operation name for Field::primitive().
Fe find_primitive(const Field& f);

/// Shared FieldMismatch guard for containers that carry a field handle.
inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same_as(*b)) fail(Err::FieldMismatch, "operands from different fields");
}

}  // namespace ecc
