#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecc/field.hpp"

namespace ecc {

/// Dense row-major matrix over one finite field.
class FqMatrix {
 public:
  FqMatrix(FieldPtr f, int rows, int cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), e_(size_t(rows) * cols, Fe{0}) {}

  const FieldPtr& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Fe& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  Fe at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

 private:
  FieldPtr f_;
  int rows_, cols_;
  std::vector<Fe> e_;
};

/// Basis of {x : A x = 0} in reduced echelon form. Gaussian elimination with
/// leftmost pivots; basis vectors are indexed by free columns in ascending
/// order, so identical matrices always produce identical bases.
std::vector<std::vector<Fe>> nullspace(const FqMatrix& a);

/// Rank by plain elimination; used as the independent cross-check for
/// rank-nullity.
int rank(const FqMatrix& a);

struct AffineSolution {
  FieldPtr field;
  std::vector<Fe> particular;
  std::vector<std::vector<Fe>> basis;
};

/// Particular solution of A x = b plus the nullspace basis, or nullopt when b
/// is outside the column space.
std::optional<AffineSolution> solve_affine(const FqMatrix& a, const std::vector<Fe>& b);

/// All q^d points of the affine space, lexicographic coefficient sweep
/// (first basis coefficient slowest). Throws SolutionSpaceTooLarge when
/// q^d > cap.
std::vector<std::vector<Fe>> enumerate_affine(const AffineSolution& sol, uint64_t cap);

/// Matrix-vector product, for residual checks.
std::vector<Fe> mat_vec(const FqMatrix& a, const std::vector<Fe>& x);

}  // namespace ecc
