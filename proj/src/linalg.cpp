#include "ecc/linalg.hpp"

#include <algorithm>

namespace ecc {

namespace {

struct Echelon {
  FqMatrix m;
  std::vector<Fe> rhs;              // carried along when solving A x = b
  std::vector<int> pivot_col;       // per pivot row
};

// Reduced row echelon form, leftmost pivots, rows in pivot order.
Echelon rref(const FqMatrix& a, const std::vector<Fe>* b) {
  const auto& f = a.field();
  Echelon e{a, b ? *b : std::vector<Fe>(a.rows(), Fe{0}), {}};
  int piv_row = 0;
  for (int col = 0; col < a.cols() && piv_row < a.rows(); ++col) {
    int sel = -1;
    for (int r = piv_row; r < a.rows(); ++r) {
      if (e.m.at(r, col) != Fe{0}) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != piv_row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(e.m.at(sel, c), e.m.at(piv_row, c));
      std::swap(e.rhs[sel], e.rhs[piv_row]);
    }
    Fe inv = f->inv(e.m.at(piv_row, col));
    for (int c = col; c < a.cols(); ++c) e.m.at(piv_row, c) = f->mul(e.m.at(piv_row, c), inv);
    e.rhs[piv_row] = f->mul(e.rhs[piv_row], inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == piv_row) continue;
      Fe factor = e.m.at(r, col);
      if (factor == Fe{0}) continue;
      for (int c = col; c < a.cols(); ++c)
        e.m.at(r, c) = f->sub(e.m.at(r, c), f->mul(factor, e.m.at(piv_row, c)));
      e.rhs[r] = f->sub(e.rhs[r], f->mul(factor, e.rhs[piv_row]));
    }
    e.pivot_col.push_back(col);
    ++piv_row;
  }
  return e;
}

std::vector<std::vector<Fe>> basis_from_rref(const Echelon& e) {
  const auto& f = e.m.field();
  int cols = e.m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Fe> v(cols, Fe{0});
    v[fc] = Fe{1};
    for (size_t pr = 0; pr < e.pivot_col.size(); ++pr)
      v[e.pivot_col[pr]] = f->neg(e.m.at(int(pr), fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<Fe>> nullspace(const FqMatrix& a) {
  return basis_from_rref(rref(a, nullptr));
}

int rank(const FqMatrix& a) { return int(rref(a, nullptr).pivot_col.size()); }

std::optional<AffineSolution> solve_affine(const FqMatrix& a, const std::vector<Fe>& b) {
  if (int(b.size()) != a.rows())
    fail(Err::DimensionMismatch, "rhs length " + std::to_string(b.size()) + " vs rows " +
                                     std::to_string(a.rows()));
  Echelon e = rref(a, &b);
  int npiv = int(e.pivot_col.size());
  for (int r = npiv; r < a.rows(); ++r)
    if (e.rhs[r] != Fe{0}) return std::nullopt;
  std::vector<Fe> particular(a.cols(), Fe{0});
  for (int pr = 0; pr < npiv; ++pr) particular[e.pivot_col[pr]] = e.rhs[pr];
  return AffineSolution{a.field(), std::move(particular), basis_from_rref(e)};
}

std::vector<std::vector<Fe>> enumerate_affine(const AffineSolution& sol, uint64_t cap) {
  const auto& f = sol.field;
  uint64_t q = f->order();
  size_t d = sol.basis.size();
  uint64_t total = 1;
  for (size_t i = 0; i < d; ++i) {
    if (total > cap / q)
      fail(Err::SolutionSpaceTooLarge,
           "q^" + std::to_string(d) + " solutions exceed cap " + std::to_string(cap));
    total *= q;
  }
  if (total > cap)
    fail(Err::SolutionSpaceTooLarge,
         "q^" + std::to_string(d) + " solutions exceed cap " + std::to_string(cap));
  std::vector<std::vector<Fe>> out;
  out.reserve(size_t(total));
  std::vector<uint32_t> odo(d, 0);
  while (true) {
    std::vector<Fe> x = sol.particular;
    for (size_t i = 0; i < d; ++i) {
      if (odo[i] == 0) continue;
      Fe c{odo[i]};
      for (size_t j = 0; j < x.size(); ++j)
        x[j] = f->add(x[j], f->mul(c, sol.basis[i][j]));
    }
    out.push_back(std::move(x));
    // lexicographic odometer, first coefficient slowest
    size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++odo[pos] < q) break;
      odo[pos] = 0;
      if (pos == 0) return out;
    }
    if (d == 0) break;
  }
  return out;
}

std::vector<Fe> mat_vec(const FqMatrix& a, const std::vector<Fe>& x) {
  if (int(x.size()) != a.cols()) fail(Err::DimensionMismatch, "vector length vs cols");
  const auto& f = a.field();
  std::vector<Fe> y(a.rows(), Fe{0});
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) y[r] = f->add(y[r], f->mul(a.at(r, c), x[c]));
  return y;
}

}  // namespace ecc
