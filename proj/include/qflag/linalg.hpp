#pragma once

// Exact Gaussian elimination helpers used throughout: rref, rank, kernels,
// linear solves and incremental span tracking over the rationals.

#include "qflag/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace qflag::linalg {

// Reduces A in place; returns the rank. Pivot columns go to *pivots if given.
inline int rref_inplace(MatQ& A, std::vector<int>* pivots = nullptr) {
  const int rows = static_cast<int>(A.rows());
  const int cols = static_cast<int>(A.cols());
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) A.row(p).swap(A.row(r));
    Rat inv = A(r, c);
    for (int j = c; j < cols; ++j) A(r, j) /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Rat f = A(i, c);
      for (int j = c; j < cols; ++j) A(i, j) -= f * A(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

inline int rank(MatQ A) { return rref_inplace(A); }

// Columns form a basis of {x : Ax = 0}.
inline MatQ nullspace(const MatQ& A) {
  MatQ R = A;
  std::vector<int> piv;
  int rk = rref_inplace(R, &piv);
  const int cols = static_cast<int>(A.cols());
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  MatQ N = MatQ::Zero(cols, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int f = free_cols[k];
    N(f, k) = 1;
    for (int i = 0; i < rk; ++i) N(piv[i], k) = -R(i, f);
  }
  return N;
}

// Rows form a basis of {y : yA = 0}.
inline MatQ left_nullspace(const MatQ& A) {
  MatQ N = nullspace(MatQ(A.transpose()));
  return N.transpose();
}

// Solves A X = B exactly; nullopt if inconsistent. Free variables are set to 0.
inline std::optional<MatQ> solve(const MatQ& A, const MatQ& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int m = static_cast<int>(A.rows());
  const int na = static_cast<int>(A.cols());
  const int nb = static_cast<int>(B.cols());
  MatQ Aug(m, na + nb);
  if (na > 0) Aug.block(0, 0, m, na) = A;
  if (nb > 0) Aug.block(0, na, m, nb) = B;
  std::vector<int> piv;
  int rk = rref_inplace(Aug, &piv);
  for (int i = 0; i < rk; ++i)
    if (piv[i] >= na) return std::nullopt;
  MatQ X = MatQ::Zero(na, nb);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < nb; ++j) X(piv[i], j) = Aug(i, na + j);
  return X;
}

inline bool is_zero(const MatQ& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

inline MatQ hstack(const MatQ& A, const MatQ& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("hstack: shape mismatch");
  MatQ C(A.rows(), A.cols() + B.cols());
  if (A.cols() > 0) C.block(0, 0, A.rows(), A.cols()) = A;
  if (B.cols() > 0) C.block(0, A.cols(), B.rows(), B.cols()) = B;
  return C;
}

inline MatQ vstack(const MatQ& A, const MatQ& B) {
  if (A.cols() != B.cols()) throw std::invalid_argument("vstack: shape mismatch");
  MatQ C(A.rows() + B.rows(), A.cols());
  if (A.rows() > 0) C.block(0, 0, A.rows(), A.cols()) = A;
  if (B.rows() > 0) C.block(A.rows(), 0, B.rows(), B.cols()) = B;
  return C;
}

// Incremental span of column vectors with exact membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient) : ambient_(ambient) {}

  // Returns true and stores v if it enlarges the span.
  bool add(const VecQ& v) {
    VecQ w = reduce(v);
    if (all_zero(w)) return false;
    int lead = 0;
    while (w(lead) == 0) ++lead;
    Rat inv = w(lead);
    for (int i = 0; i < ambient_; ++i) w(i) /= inv;
    for (auto& row : rows_) {
      Rat f = row.second(lead);
      if (f != 0) row.second -= f * w;
    }
    rows_.emplace_back(lead, w);
    basis_.push_back(v);
    return true;
  }

  bool contains(const VecQ& v) const { return all_zero(reduce(v)); }

  int dim() const { return static_cast<int>(basis_.size()); }

  // Original (unreduced) vectors that were accepted, as columns.
  MatQ basis_matrix() const {
    MatQ B(ambient_, dim());
    for (int k = 0; k < dim(); ++k) B.col(k) = basis_[k];
    return B;
  }

 private:
  static bool all_zero(const VecQ& v) {
    for (int i = 0; i < v.size(); ++i)
      if (v(i) != 0) return false;
    return true;
  }

  VecQ reduce(VecQ v) const {
    for (const auto& row : rows_) {
      Rat f = v(row.first);
      if (f != 0) v -= f * row.second;
    }
    return v;
  }

  int ambient_;
  std::vector<std::pair<int, VecQ>> rows_;  // (lead index, reduced unit row)
  std::vector<VecQ> basis_;
};

}  // namespace qflag::linalg
