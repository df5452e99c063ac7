#include "ecc/rs.hpp"

#include <set>

namespace ecc {

RSSpec RSSpec::make(FieldPtr field, int k, std::vector<Fe> S) {
  if (!field) fail(Err::InvalidArgument, "null field");
  int n = int(S.size());
  if (k < 1 || k > n) fail(Err::InvalidArgument, "need 1 <= k <= n");
  if (uint64_t(n) > field->order()) fail(Err::InvalidArgument, "n exceeds field order");
  std::set<uint32_t> seen;
  for (Fe a : S) {
    if (a.v >= field->order()) fail(Err::InvalidArgument, "evaluation point outside field");
    if (!seen.insert(a.v).second) fail(Err::InvalidArgument, "evaluation points must be distinct");
  }
  return RSSpec(std::move(field), k, std::move(S));
}

Word rs_encode(const RSSpec& spec, const std::vector<Fe>& m) {
  if (int(m.size()) != spec.k())
    fail(Err::LengthMismatch, "message length " + std::to_string(m.size()) + " vs k = " +
                                  std::to_string(spec.k()));
  UniPoly p(spec.field(), m);
  Word w;
  w.values.reserve(spec.n());
  for (Fe a : spec.S()) w.values.push_back(p.eval(a));
  return w;
}

Rational rs_min_distance(const RSSpec& spec) {
  return Rational(spec.n() - spec.k() + 1, spec.n());
}

Rational rate(const RSSpec& spec) { return Rational(spec.k(), spec.n()); }

Rational singleton_gap(const RSSpec& spec) {
  Rational bound = Rational(1) - rate(spec) + Rational(1, spec.n());
  return bound - rs_min_distance(spec);
}

int agreements(const RSSpec& spec, const std::vector<Fe>& m, const Word& w) {
  if (int(w.values.size()) != spec.n()) fail(Err::LengthMismatch, "word length vs n");
  UniPoly p(spec.field(), m);
  int count = 0;
  for (int i = 0; i < spec.n(); ++i)
    if (p.eval(spec.S()[i]) == w.values[i]) ++count;
  return count;
}

UniPoly message_poly(const RSSpec& spec, const std::vector<Fe>& m) {
  return UniPoly(spec.field(), m);
}

std::vector<Fe> message_of_poly(const RSSpec& spec, const UniPoly& p) {
  std::vector<Fe> m(spec.k(), Fe{0});
  for (int i = 0; i <= p.degree(); ++i) m[i] = p.coeff(i);
  return m;
}

}  // namespace ecc
