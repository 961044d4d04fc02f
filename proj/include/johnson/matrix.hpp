#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "johnson/combinat.hpp"
#include "johnson/field.hpp"

namespace johnson {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <class Scalar>
using DenseCol = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<Gf>;
using RowVector = DenseRow<Gf>;
using Vector = DenseCol<Gf>;

// Zero matrix with every entry typed in the field.
Matrix zeros(const GaloisField& F, Eigen::Index rows, Eigen::Index cols);
Matrix identity(const GaloisField& F, Eigen::Index n);
Matrix from_ints(const GaloisField& F, const std::vector<std::vector<long>>& rows);
Matrix random_matrix(const GaloisField& F, Eigen::Index rows, Eigen::Index cols, std::uint64_t& state);

// Matrix file: "rows cols q" then row-major decimals.
Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& M);

template <class Derived>
bool all_zero(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != Scalar(0)) return false;
  return true;
}

// Fraction-free (Bareiss) elimination. Exact over any field.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Eigen::Index n = A.rows();
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> M = A;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && M(p, k) == Scalar(0)) ++p;
    if (p == n) return M(k, k) * Scalar(0);
    if (p != k) {
      M.row(p).swap(M.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
      M(i, k) = M(i, k) * Scalar(0);
    }
    prev = M(k, k);
  }
  return negate ? -M(n - 1, n - 1) : M(n - 1, n - 1);
}

template <class Scalar>
struct Echelon {
  DenseMatrix<Scalar> reduced;  // reduced row echelon form, zero rows kept
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = A;
  auto& M = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < M.cols() && row < M.rows(); ++col) {
    Eigen::Index p = row;
    while (p < M.rows() && M(p, col) == Scalar(0)) ++p;
    if (p == M.rows()) continue;
    if (p != row) M.row(p).swap(M.row(row));
    Scalar inv = Scalar(1) / M(row, col);
    M.row(row) *= inv;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      if (i == row || M(i, col) == Scalar(0)) continue;
      Scalar f = M(i, col);
      M.row(i) -= f * M.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& A) {
  return rref(A).rank();
}

// Rows form a basis of { x : A x = 0 }.
template <class Derived>
DenseMatrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  auto E = rref(A);
  const Eigen::Index n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : E.pivots) is_pivot[p] = true;
  Scalar zero = Scalar(0), one = Scalar(1);
  if (A.size() > 0) {
    zero = A(0, 0) * Scalar(0);
    one = zero + Scalar(1);
  }
  DenseMatrix<Scalar> K(n - E.rank(), n);
  K.setConstant(zero);
  Eigen::Index r = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    K(r, f) = one;
    for (Eigen::Index i = 0; i < E.rank(); ++i) K(r, E.pivots[i]) = -E.reduced(i, f);
    ++r;
  }
  return K;
}

// Solves A X = B. Throws when inconsistent; returns one solution otherwise and
// reports whether it is unique.
template <class DA, class DB>
DenseMatrix<typename DA::Scalar> solve(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& B,
                                       bool* unique = nullptr) {
  using Scalar = typename DA::Scalar;
  DenseMatrix<Scalar> aug(A.rows(), A.cols() + B.cols());
  aug << A, B;
  auto E = rref(aug);
  Scalar zero = A.size() ? A(0, 0) * Scalar(0) : Scalar(0);
  DenseMatrix<Scalar> X(A.cols(), B.cols());
  X.setConstant(zero);
  Eigen::Index r = 0;
  for (; r < E.rank(); ++r) {
    if (E.pivots[r] >= A.cols()) throw std::runtime_error("inconsistent linear system");
    X.row(E.pivots[r]) = E.reduced.block(r, A.cols(), 1, B.cols());
  }
  if (unique) *unique = E.rank() == A.cols();
  return X;
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
  DenseMatrix<Scalar> I = A * Scalar(0);
  Scalar one = (A.size() ? A(0, 0) * Scalar(0) : Scalar(0)) + Scalar(1);
  for (Eigen::Index i = 0; i < A.rows(); ++i) I(i, i) = one;
  bool unique = false;
  auto X = solve(A, I, &unique);
  if (!unique) throw std::runtime_error("singular matrix");
  return X;
}

// Row spaces of A and B coincide.
template <class DA, class DB>
bool same_row_space(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& B) {
  if (A.cols() != B.cols()) return false;
  DenseMatrix<typename DA::Scalar> S(A.rows() + B.rows(), A.cols());
  S << A, B;
  auto r = rank(S);
  return r == rank(A) && r == rank(B);
}

inline std::vector<Eigen::Index> columns_of(const Layer& L) {
  std::vector<Eigen::Index> c;
  for (int e : L.elems()) c.push_back(e);
  return c;
}

template <class Derived>
DenseMatrix<typename Derived::Scalar> select_rows(const Eigen::MatrixBase<Derived>& M, const Layer& I) {
  return M(columns_of(I), Eigen::all);
}

// det(M_L) for every L in the given vertex order.
template <class Derived>
DenseRow<typename Derived::Scalar> pi(const Eigen::MatrixBase<Derived>& M, const std::vector<Layer>& vertices) {
  if (M.rows() > M.cols()) throw std::invalid_argument("pi needs rows <= cols");
  DenseRow<typename Derived::Scalar> out(static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].size() != M.rows()) throw std::invalid_argument("vertex size differs from row count");
    out(static_cast<Eigen::Index>(i)) = determinant(M(Eigen::all, columns_of(vertices[i])));
  }
  return out;
}

template <class Derived>
DenseRow<typename Derived::Scalar> pi_signed(const Eigen::MatrixBase<Derived>& M,
                                             const std::vector<Layer>& vertices) {
  auto out = pi(M, vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (sign_of(vertices[i]) < 0) out(static_cast<Eigen::Index>(i)) = -out(static_cast<Eigen::Index>(i));
  return out;
}

// Product of M(i, x_i) for each tuple x.
template <class Derived>
DenseRow<typename Derived::Scalar> tau(const Eigen::MatrixBase<Derived>& M,
                                       const std::vector<HammingVertex>& tuples) {
  DenseRow<typename Derived::Scalar> out(static_cast<Eigen::Index>(tuples.size()));
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (static_cast<Eigen::Index>(tuples[t].size()) != M.rows()) throw std::invalid_argument("tuple length");
    auto p = M(0, tuples[t][0]);
    for (Eigen::Index i = 1; i < M.rows(); ++i) p *= M(i, tuples[t][i]);
    out(static_cast<Eigen::Index>(t)) = p;
  }
  return out;
}

// Compound matrix: entry (I, L) is det of g with rows I and columns L.
template <class Derived>
DenseMatrix<typename Derived::Scalar> compound(const Eigen::MatrixBase<Derived>& g,
                                               const std::vector<Layer>& vertices) {
  if (g.rows() != g.cols()) throw std::invalid_argument("compound of non-square matrix");
  if (g.rows() > 10) throw std::invalid_argument("compound materialized only for n <= 10");
  const auto N = static_cast<Eigen::Index>(vertices.size());
  DenseMatrix<typename Derived::Scalar> out(N, N);
  for (Eigen::Index i = 0; i < N; ++i) out.row(i) = pi(select_rows(g, vertices[i]), vertices);
  return out;
}

}  // namespace johnson
