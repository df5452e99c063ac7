#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ecc/linalg.hpp"
#include "ecc/poly.hpp"
#include "ecc/rs.hpp"

namespace ecc {

/// Monomial support and multiplicity for one interpolation run.
/// Invariants: |monomials| strictly exceeds n*C(m+1,2), and every admitted
/// (i, j) obeys i + j*(k-1) <= weighted_bound.
struct InterpolationPlan {
  std::vector<std::pair<int, int>> monomials;
  int multiplicity = 1;
  long long weighted_bound = 0;
};

/// Smallest D whose (1, k-1)-weighted-degree-<=D monomial count exceeds
/// n*C(m+1,2), with the full admitted monomial list. For k = 1 the Y weight
/// degenerates to 0; weight 1 is used instead, which keeps the count finite
/// and only shrinks the support. D never exceeds ceil(m*sqrt((1+1/m)*k*n)).
InterpolationPlan choose_plan(int n, int k, int m);

/// Rectangular support deg_X, deg_Y <= ceil(sqrt(n)), multiplicity 1.
InterpolationPlan basic_plan(int n, int k);

struct Candidate {
  std::vector<Fe> message;
  int agreements = 0;
  bool operator==(const Candidate& o) const {
    return message == o.message && agreements == o.agreements;
  }
};

/// Ordered list of surviving candidates: descending agreements, then
/// canonical message order; no duplicates.
struct DecodeOutcome {
  std::vector<Candidate> candidates;
  bool contains(const std::vector<Fe>& m) const;
};

/// Nonzero Q supported on plan.monomials with a multiplicity-m zero at every
/// (a, r(a)). Deterministic: first vector of the reduced-echelon nullspace
/// basis. Throws InternalContradiction if the nullspace is empty (impossible
/// while the plan invariant holds).
BiPoly interpolate(const RSSpec& spec, const Word& r, const InterpolationPlan& plan);

/// Berlekamp-Welch-style unique decoder via Q(X,Y) = A(X)*Y + B(X) with
/// deg A <= e, deg B <= e+k-1 for e = floor((n-k)/2). Returns the message of
/// the unique codeword within Hamming distance e of r, or nullopt.
std::optional<std::vector<Fe>> decode_unique_bw(const RSSpec& spec, const Word& r);

/// Basic interpolation list decoding; requires t > k*ceil(sqrt(n)) unless
/// force is set.
DecodeOutcome decode_list_basic(const RSSpec& spec, const Word& r, int t, bool force = false);

/// Weighted-degree list decoding (multiplicity 1); requires
/// t >= ceil(sqrt(2kn)) unless force is set.
DecodeOutcome decode_list_weighted(const RSSpec& spec, const Word& r, int t, bool force = false);

/// Multiplicity (Guruswami-Sudan) list decoding; requires t^2 > k*n unless
/// force is set. Multiplicity is chosen internally as the smallest m with
/// t*m > choose_plan(n, k, m).weighted_bound.
DecodeOutcome decode_list_gs(const RSSpec& spec, const Word& r, int t, bool force = false);

/// Build an outcome from candidate polynomials: computes agreements, keeps
/// those >= t, sorts and deduplicates. Shared by the decoders and oracles.
DecodeOutcome make_outcome(const RSSpec& spec, const std::vector<UniPoly>& cands, const Word& r,
                           int t);

}  // namespace ecc
