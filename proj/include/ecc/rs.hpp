#pragma once

#include <vector>

#include "ecc/field.hpp"
#include "ecc/poly.hpp"
#include "ecc/rational.hpp"

namespace ecc {

/// A received or transmitted word: value at evaluation point S[i] sits at
/// position i.
struct Word {
  std::vector<Fe> values;
  bool operator==(const Word& o) const { return values == o.values; }
};

/// Reed-Solomon code parameters: message length k, ordered evaluation set S
/// of n distinct points, 1 <= k <= n <= q.
class RSSpec {
 public:
  static RSSpec make(FieldPtr field, int k, std::vector<Fe> S);

  const FieldPtr& field() const { return f_; }
  int k() const { return k_; }
  int n() const { return int(S_.size()); }
  const std::vector<Fe>& S() const { return S_; }

 private:
  RSSpec(FieldPtr f, int k, std::vector<Fe> S) : f_(std::move(f)), k_(k), S_(std::move(S)) {}
  FieldPtr f_;
  int k_;
  std::vector<Fe> S_;
};

/// Evaluation encoding: position i holds P_m(S[i]) for the message
/// polynomial P_m with coefficient vector m. Naive O(kn).
Word rs_encode(const RSSpec& spec, const std::vector<Fe>& m);

/// Exact minimum distance 1 - k/n + 1/n.
Rational rs_min_distance(const RSSpec& spec);

Rational rate(const RSSpec& spec);

/// (1 - rate + 1/n) - min_distance; identically zero for RS.
Rational singleton_gap(const RSSpec& spec);

/// Number of positions where the encoding of m matches w.
int agreements(const RSSpec& spec, const std::vector<Fe>& m, const Word& w);

/// Message polynomial of a coefficient vector (convenience).
UniPoly message_poly(const RSSpec& spec, const std::vector<Fe>& m);

/// Coefficient vector of p padded with zeros to length k.
std::vector<Fe> message_of_poly(const RSSpec& spec, const UniPoly& p);

}  // namespace ecc
