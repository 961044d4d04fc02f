#include <gtest/gtest.h>

#include <sstream>

#include "johnson/matrix.hpp"

using namespace johnson;

namespace {

Gf cofactor_det(const Matrix& A) {
  const auto n = A.rows();
  if (n == 1) return A(0, 0);
  Gf s = A(0, 0) * Gf(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    std::vector<Eigen::Index> rows, cols;
    for (Eigen::Index i = 1; i < n; ++i) rows.push_back(i);
    for (Eigen::Index c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    Gf term = A(0, j) * cofactor_det(A(rows, cols));
    s = j % 2 ? s - term : s + term;
  }
  return s;
}

std::uint64_t seed = 12345;

}  // namespace

TEST(Matrix, DeterminantMatchesCofactor) {
  for (std::uint32_t q : {5u, 7u, 8u, 11u}) {
    auto& F = GaloisField::get(q);
    EXPECT_EQ(determinant(identity(F, 4)), F.one());
    Matrix S = from_ints(F, {{1, 2, 3}, {0, 1, 4}, {1, 2, 3}});
    EXPECT_EQ(determinant(S), F.zero());
    for (int trial = 0; trial < 50; ++trial) {
      Matrix A = random_matrix(F, 4, 4, seed);
      if (trial % 5 == 0) A.row(3) = A.row(1) + A.row(2);
      ASSERT_EQ(determinant(A), cofactor_det(A));
    }
  }
  EXPECT_THROW(determinant(zeros(GaloisField::get(5), 2, 3)), std::invalid_argument);
}

TEST(Matrix, SolveNullspaceInverse) {
  auto& F = GaloisField::get(13);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix A = random_matrix(F, 4, 6, seed);
    Matrix K = nullspace(A);
    EXPECT_EQ(K.rows(), 6 - rank(A));
    EXPECT_TRUE(all_zero(A * K.transpose()));
    Matrix X = random_matrix(F, 6, 2, seed);
    bool unique = true;
    Matrix Y = solve(A, A * X, &unique);
    EXPECT_FALSE(unique);
    EXPECT_TRUE(all_zero(A * Y - A * X));
    Matrix B = random_matrix(F, 4, 4, seed);
    if (determinant(B) != F.zero()) EXPECT_EQ(B * inverse(B), identity(F, 4));
  }
  Matrix A = from_ints(F, {{1, 0}, {1, 0}});
  EXPECT_THROW(solve(A, from_ints(F, {{1}, {2}})), std::runtime_error);
}

TEST(Matrix, PiExamples) {
  auto& F = GaloisField::get(7);
  auto vs = johnson_vertices(5, 3, VertexOrder::klex(2));
  Matrix I = identity(F, 5).topRows(3);
  auto p = pi(I, vs);
  for (Eigen::Index i = 0; i < p.size(); ++i) EXPECT_EQ(p(i).value(), i == 0 ? 1u : 0u);

  // Rows g0, g1, g2 of the non-MDS basis on J(5,3).
  // Binary entries; over an odd field they agree up to sign.
  std::vector<std::uint32_t> want = {1, 0, 0, 1, 1, 0, 1, 0, 0, 1};
  std::vector<std::vector<long>> g = {{1, 0, 1, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 0}};
  auto row = pi(from_ints(GaloisField::get(2), g), vs);
  for (Eigen::Index i = 0; i < row.size(); ++i) EXPECT_EQ(row(i).value(), want[i]) << vs[i].str();
  auto row7 = pi(from_ints(F, g), vs);
  for (Eigen::Index i = 0; i < row7.size(); ++i)
    EXPECT_TRUE(row7(i) == F(want[i]) || row7(i) == -F(want[i])) << vs[i].str();

  auto& F5 = GaloisField::get(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix M = random_matrix(F5, 2, 4, seed);
    auto lv = subsets(4, 2);
    auto r = pi(M, lv);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      auto e = lv[i].elems();
      EXPECT_EQ(r(i), M(0, e[0]) * M(1, e[1]) - M(0, e[1]) * M(1, e[0]));
    }
  }
  EXPECT_THROW(pi(random_matrix(F5, 3, 2, seed), subsets(2, 3)), std::invalid_argument);
}

TEST(Matrix, PiSigned) {
  auto& F = GaloisField::get(11);
  Matrix M = from_ints(F, {{3, 5}});
  auto s = pi_signed(M, subsets(2, 1));
  EXPECT_EQ(s(0), F(3));
  EXPECT_EQ(s(1), -F(5));
  // Equals det of M stacked on unit rows of the complement.
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A = random_matrix(F, 2, 5, seed);
    auto vs = subsets(5, 2);
    auto ps = pi_signed(A, vs);
    auto pp = pi(A, vs);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Matrix ext = zeros(F, 5, 5);
      std::vector<Eigen::Index> perm = columns_of(vs[i]);
      for (int e : vs[i].complement().elems()) perm.push_back(e);
      ext.topRows(2) = A(Eigen::all, perm);
      for (int j = 2; j < 5; ++j) ext(j, j) = F.one();
      // Reorder columns back to natural order; the column permutation
      // contributes sign(L).
      Matrix nat = zeros(F, 5, 5);
      for (int c = 0; c < 5; ++c) nat.col(perm[c]) = ext.col(c);
      EXPECT_EQ(ps(i), determinant(nat));
      EXPECT_EQ(ps(i), sign_of(vs[i]) > 0 ? pp(i) : -pp(i));
    }
  }
}

TEST(Matrix, Tau) {
  auto& F = GaloisField::get(2);
  auto tuples = hamming_vertices(2, 4, 2);
  Matrix M = from_ints(F, {{0, 0, 1, 0}, {0, 1, 0, 1}});
  std::string s;
  auto t = tau(M, tuples);
  for (Eigen::Index i = 0; i < t.size(); ++i) s += std::to_string(t(i).value());
  EXPECT_EQ(s, "0000000001000100");
  Matrix ones = from_ints(F, {{1, 1}, {1, 1}});
  auto t1 = tau(ones, hamming_vertices(2, 2, 1));
  for (Eigen::Index i = 0; i < t1.size(); ++i) EXPECT_EQ(t1(i), F.one());

  auto& F5 = GaloisField::get(5);
  Matrix R = random_matrix(F5, 2, 3, seed);
  auto tv = hamming_vertices(2, 3, 1);
  auto r = tau(R, tv);
  for (std::size_t i = 0; i < tv.size(); ++i) EXPECT_EQ(r(i), R(0, tv[i][0]) * R(1, tv[i][1]));
}

TEST(Matrix, CompoundProperties) {
  auto& F = GaloisField::get(7);
  auto vs = johnson_vertices(5, 2, VertexOrder::klex(2));
  EXPECT_EQ(compound(identity(F, 5), vs), identity(F, 10));
  for (int trial = 0; trial < 20; ++trial) {
    Matrix g = random_matrix(F, 5, 5, seed), h = random_matrix(F, 5, 5, seed);
    EXPECT_EQ(compound(Matrix(g * h), vs), compound(g, vs) * compound(h, vs));
    Matrix U = g.triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < 5; ++i)
      for (Eigen::Index j = 0; j < i; ++j) U(i, j) = F.zero();
    Matrix C = compound(U, vs);
    for (Eigen::Index i = 0; i < C.rows(); ++i)
      for (Eigen::Index j = 0; j < i; ++j) EXPECT_EQ(C(i, j), F.zero());
  }
}

TEST(Matrix, CompoundDeterminantPower) {
  for (std::uint32_t q : {5u, 7u}) {
    auto& F = GaloisField::get(q);
    for (int n = 2; n <= 6; ++n)
      for (int v = 1; v < n; ++v) {
        Matrix g = random_matrix(F, n, n, seed);
        auto vs = johnson_vertices(n, v, VertexOrder::lex());
        EXPECT_EQ(determinant(compound(g, vs)), determinant(g).pow(binomial(n - 1, v - 1)));
      }
  }
}

TEST(Matrix, SystematicCompoundSquaresToIdentity) {
  auto& F = GaloisField::get(11);
  const int n = 5, k = 2;
  for (int v = 1; v < n; ++v) {
    // g = [[I, S], [0, -I]] so g^2 = I.
    Matrix g = zeros(F, n, n);
    Matrix S = random_matrix(F, k, n - k, seed);
    for (int i = 0; i < k; ++i) g(i, i) = F.one();
    for (int i = k; i < n; ++i) g(i, i) = -F.one();
    g.topRightCorner(k, n - k) = S;
    ASSERT_EQ(Matrix(g * g), identity(F, n));
    auto vs = johnson_vertices(n, v, VertexOrder::klex(k));
    Matrix C = compound(g, vs);
    EXPECT_EQ(Matrix(C * C), identity(F, C.rows()));
    // Diagonal blocks are +-identity.
    Layer I0 = Layer::range(n, 0, k);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if ((vs[i] & I0).size() != (vs[j] & I0).size()) continue;
        if (i == j) EXPECT_TRUE(C(i, j) == F.one() || C(i, j) == -F.one());
        else EXPECT_EQ(C(i, j), F.zero());
      }
  }
}

TEST(Matrix, CauchyBinet) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u}) {
    auto& F = GaloisField::get(q);
    for (int trial = 0; trial < 50; ++trial) {
      int n = 4 + trial % 3, v = 1 + trial % 3;
      Matrix A = random_matrix(F, v, n, seed), B = random_matrix(F, n, v, seed);
      auto vs = subsets(n, v);
      Matrix BT = B.transpose();
      EXPECT_EQ(determinant(Matrix(A * B)), pi(A, vs).dot(pi(BT, vs)));
    }
  }
}

TEST(Matrix, VandermondeLeadingMinors) {
  auto& F = GaloisField::get(11);
  for (int n = 3; n <= 6; ++n) {
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = F(j).pow(i);
    for (int v = 1; v < n; ++v)
      for (int k = 1; k < n; ++k) {
        Matrix C = compound(g, johnson_vertices(n, v, VertexOrder::klex(k)));
        for (Eigen::Index s = 1; s <= C.rows(); ++s) ASSERT_NE(determinant(C.topLeftCorner(s, s)), F.zero());
      }
  }
}

TEST(Matrix, FileRoundTrip) {
  auto& F = GaloisField::get(8);
  Matrix A = random_matrix(F, 3, 4, seed);
  std::stringstream ss;
  write_matrix(ss, A);
  EXPECT_EQ(ss.str().substr(0, 6), "3 4 8\n");
  EXPECT_EQ(read_matrix(ss), A);
}
