#include <gtest/gtest.h>

#include "johnson/rs.hpp"

using namespace johnson;

namespace {

std::uint64_t seed = 4242;

std::vector<Gf> random_points(const GaloisField& F, int n) {
  std::vector<Gf> all = F.distinct_points(F.size());
  for (int i = static_cast<int>(all.size()) - 1; i > 0; --i) {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(all[i], all[(seed >> 33) % (i + 1)]);
  }
  all.resize(n);
  return all;
}

}  // namespace

TEST(Rs, Vandermonde) {
  auto& F = GaloisField::get(5);
  Matrix V = vandermonde(F.distinct_points(3), 3);
  for (Eigen::Index j = 0; j < 3; ++j) EXPECT_EQ(V(0, j), F.one());
  EXPECT_EQ(determinant(V), F(2));
  std::vector<Gf> rep = {F(1), F(1), F(2)};
  EXPECT_THROW(vandermonde(rep, 2), std::invalid_argument);
  auto& F11 = GaloisField::get(11);
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      Matrix G = vandermonde(F11.distinct_points(n), k);
      for (const Layer& S : subsets(n, k)) ASSERT_NE(determinant(G(Eigen::all, columns_of(S))), F11.zero());
    }
}

TEST(Rs, ReducedForms) {
  auto& F = GaloisField::get(11);
  auto a = F.distinct_points(5);
  RsBasis tri = reduced_basis(a, BasisForm::Triangular);
  for (Eigen::Index j = 0; j < 5; ++j) EXPECT_EQ(tri.rows(0, j), F.one());
  EXPECT_EQ(tri.rows(2, 2), F(2));
  for (Eigen::Index i = 0; i < 5; ++i)
    for (Eigen::Index j = 0; j < i; ++j) EXPECT_EQ(tri.rows(i, j), F.zero());
  for (int k = 1; k < 5; ++k) {
    RsBasis blk = reduced_basis(a, BasisForm::Block, k);
    for (Eigen::Index i = k; i < 5; ++i)
      for (Eigen::Index j = 0; j < k; ++j) EXPECT_EQ(blk.rows(i, j), F.zero());
  }
}

TEST(Rs, LeadingRowsShareRowSpace) {
  for (std::uint32_t q : {7u, 11u, 13u}) {
    auto& F = GaloisField::get(q);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_points(F, 6);
      RsBasis mono = reduced_basis(a, BasisForm::Monomial);
      RsBasis tri = reduced_basis(a, BasisForm::Triangular);
      for (int k = 1; k <= 6; ++k) {
        RsBasis blk = reduced_basis(a, BasisForm::Block, k);
        ASSERT_TRUE(same_row_space(mono.rows.topRows(k), tri.rows.topRows(k)));
        ASSERT_TRUE(same_row_space(mono.rows.topRows(k), blk.rows.topRows(k)));
      }
    }
  }
}

TEST(Rs, DetH) {
  auto& F = GaloisField::get(13);
  auto a = F.distinct_points(7);
  RsBasis blk = reduced_basis(a, BasisForm::Block, 3);
  for (const Layer& L : subsets(7, 3)) {
    Gf vdm = F.one();
    auto e = L.elems();
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) vdm *= a[e[j]] - a[e[i]];
    EXPECT_EQ(det_h(blk, Layer::range(7, 0, 3), L), vdm);
  }
  EXPECT_THROW(det_h(blk, Layer::range(7, 0, 2), Layer::range(7, 0, 3)), std::invalid_argument);
}

TEST(Rs, TriangularAndBlockShareSpecialRows) {
  // I = {0..t-1} u {k..k+v-t-1}
  for (std::uint32_t q : {7u, 11u, 13u}) {
    auto& F = GaloisField::get(q);
    for (int trial = 0; trial < 4; ++trial) {
      const int n = 7;
      auto a = random_points(F, n);
      RsBasis tri = reduced_basis(a, BasisForm::Triangular);
      for (int k = 1; k < n; ++k) {
        RsBasis blk = reduced_basis(a, BasisForm::Block, k);
        for (int v = 1; v < n; ++v)
          for (int t = 0; t <= std::min(v, k); ++t) {
            if (k + v - t > n) continue;
            std::vector<int> I;
            for (int i = 0; i < t; ++i) I.push_back(i);
            for (int i = k; i < k + v - t; ++i) I.push_back(i);
            Layer IL(n, I);
            for (const Layer& L : subsets(n, v)) ASSERT_EQ(det_rows(tri, IL, L), det_h(blk, IL, L));
          }
      }
    }
  }
}

TEST(Rs, TableDims) {
  struct Row {
    int n, v, k, r;
    std::int64_t len, dim;
  };
  std::vector<Row> rows = {{5, 2, 1, 0, 10, 4},  {5, 2, 1, 1, 10, 10}, {6, 3, 2, 0, 20, 4},
                           {6, 3, 2, 1, 20, 16}, {6, 3, 2, 2, 20, 20}, {7, 4, 3, 0, 35, 4},
                           {7, 4, 3, 1, 35, 22}, {7, 4, 3, 2, 35, 34}, {7, 4, 3, 3, 35, 35}};
  for (const auto& r : rows) {
    JgcSpec c = rs_jgc(r.n, r.v, r.k, std::min(r.v, r.k) - r.r, 11);
    EXPECT_EQ(c.length(), r.len);
    EXPECT_EQ(rank(c.generator), r.dim);
  }
  EXPECT_THROW(rs_jgc(8, 3, 2, 1, 7), std::invalid_argument);
}

TEST(Rs, NormalizedLeadingGenerator) {
  for (int v = 1; v <= 3; ++v) {
    JgcSpec c = rs_jgc(6, v, 3, 1, 7);
    auto& F = *c.field;
    ASSERT_EQ(c.basis_index[0], Layer::range(6, 0, v));
    Matrix N = c.generator;
    for (std::size_t j = 0; j < c.vertices.size(); ++j) {
      Gf d = determinant(vandermonde(c.alphas, v)(Eigen::all, columns_of(c.vertices[j])));
      ASSERT_NE(d, F.zero());
      N.col(j) /= d;
      EXPECT_EQ(N(0, j), F.one());
    }
    EXPECT_EQ(rank(N), c.dim());
  }
}

TEST(Rs, DualScaling) {
  auto& F7 = GaloisField::get(7);
  auto d = dual_scaling(F7.distinct_points(3));
  EXPECT_EQ(d[0], F7(3));
  auto full = dual_scaling(F7.distinct_points(7));
  for (const auto& x : full) EXPECT_EQ(x, F7.one());

  auto a = F7.distinct_points(5);
  auto delta = dual_scaling(a);
  Matrix C0 = vandermonde(a, 2);
  Matrix D0 = vandermonde(a, 3);
  for (Eigen::Index j = 0; j < 5; ++j) D0.col(j) *= delta[j];
  EXPECT_TRUE(all_zero(C0 * D0.transpose()));
  JgcSpec c = rs_jgc(2, 2, 1, a, VertexOrder::klex(2));
  JgcSpec dd = construct(F7, D0, 2, 2, VertexOrder::klex(2));
  EXPECT_TRUE(all_zero(c.generator * dd.generator.transpose()));
  EXPECT_EQ(c.dim() + dd.dim(), 10);
}

TEST(Rs, ProductPolynomials) {
  auto p = product_poly_code(5, 2, 8);
  ASSERT_EQ(p.coefficients.rows(), 10);
  ASSERT_EQ(p.coefficients.cols(), 7);
  // Row 34: (1 + a3 x + ..)(1 + a4 x + ..), degree-1 coefficient a3 + a4.
  int r = index_of(p.vertices, Layer(5, {3, 4}));
  EXPECT_EQ(p.coefficients(r, 0), p.field->one());
  EXPECT_EQ(p.coefficients(r, 1), p.alphas[3] + p.alphas[4]);
  EXPECT_EQ(p.coefficients(r, 6), (p.alphas[3] * p.alphas[4]).pow(3));
  for (const Layer& A : subsets(5, 2)) EXPECT_TRUE(p.anchor_basis(A));
  for (std::uint32_t q : {5u, 11u}) {
    auto c = product_poly_code(5, 3, q);
    for (const Layer& A : subsets(5, 3)) EXPECT_TRUE(c.anchor_basis(A)) << q << " " << A.str();
  }
  EXPECT_THROW(product_poly_code(5, 3, 7), std::invalid_argument);
  auto whole = product_poly_code(4, 4, 5);
  EXPECT_EQ(whole.coefficients.rows(), 1);
  EXPECT_TRUE(whole.anchor_basis(Layer::range(4, 0, 4)));
}
