#include <gtest/gtest.h>

#include "johnson/hgc.hpp"
#include "johnson/rs.hpp"

using namespace johnson;

namespace {

std::int64_t weight(const RowVector& w) {
  std::int64_t c = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) c += w(i) != Gf(0);
  return c;
}

Matrix example_base(const GaloisField& F) { return from_ints(F, {{1, 0, 1, 1}, {0, 1, 0, 1}}); }

}  // namespace

TEST(Hgc, ExampleDimension) {
  auto& F = GaloisField::get(2);
  HgcSpec c = construct_hgc(example_base(F), 2, 1);
  EXPECT_EQ(c.length(), 16);
  EXPECT_EQ(c.dim(), 12);
  EXPECT_EQ(rank(c.generator), 12);
  EXPECT_EQ(construct_hgc(example_base(F), 2, 2).dim(), 4);
}

TEST(Hgc, DimensionFormula) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k < n; ++k)
        for (int t = 1; t <= m; ++t) {
          HgcSpec c = construct_hgc(vandermonde(GaloisField::get(7).distinct_points(n), k), m, t);
          std::int64_t count = 0;
          for (const auto& x : hamming_vertices(m, n, k)) count += hamming_shell(x, Layer::range(n, 0, k)) <= m - t;
          ASSERT_EQ(rank(c.generator), count);
          ASSERT_EQ(hgc_dimension(m, n, k, m - t), count);
        }
}

TEST(Hgc, CertifyExample) {
  for (std::uint32_t q : {2u, 3u}) {
    auto& F = GaloisField::get(q);
    auto rep = certify_hgc_infosets(construct_hgc(example_base(F), 2, 1));
    ASSERT_EQ(rep.anchors.size(), 6u);
    auto bad = rep.failing();
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0], Layer(4, {0, 2}));
  }
}

TEST(Hgc, CertifyMds) {
  auto& F = GaloisField::get(7);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 1; m <= 3; ++m)
        for (int t = 1; t <= m; ++t) {
          auto rep = certify_hgc_infosets(construct_hgc(vandermonde(F.distinct_points(n), k), m, t));
          ASSERT_TRUE(rep.failing().empty()) << n << k << m << t;
        }
}

TEST(Hgc, BallComplement) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 2; n <= 4; ++n)
      for (const Layer& A : subsets(n, 1 + n / 2))
        for (int r = 0; r < m; ++r) {
          auto B = hamming_ball(A, r, m, n);
          auto C = hamming_ball(A.complement(), m - r - 1, m, n);
          for (const auto& x : hamming_vertices(m, n, 0)) ASSERT_NE(B.count(x), C.count(x));
        }
}

TEST(Hgc, Dual) {
  auto& F = GaloisField::get(3);
  HgcSpec c = construct_hgc(example_base(F), 2, 1);
  HgcSpec d = dual_hgc(c);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.r, 0);
  EXPECT_EQ(d.t, 2);
  EXPECT_EQ(c.dim() + d.dim(), 16);
  EXPECT_TRUE(all_zero(c.generator * d.generator.transpose()));
  EXPECT_EQ(dual_hgc(construct_hgc(example_base(F), 3, 1)).t, 3);
  auto& F7 = GaloisField::get(7);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 1; m <= 3; ++m)
        for (int t = 1; t <= m; ++t) {
          HgcSpec p = construct_hgc(vandermonde(F7.distinct_points(n), k), m, t);
          HgcSpec q = dual_hgc(p);
          ASSERT_EQ(p.dim() + q.dim(), p.length());
          ASSERT_TRUE(all_zero(p.generator * q.generator.transpose()));
        }
}

TEST(Hgc, ReedMuller) {
  auto& F = GaloisField::get(2);
  Matrix rep = from_ints(F, {{1, 1}});
  for (int m = 1; m <= 4; ++m)
    for (int r = 0; r < m; ++r) {
      HgcSpec c = construct_hgc(rep, m, m - r);
      Matrix rm = reed_muller(r, m, c.vertices);
      EXPECT_EQ(rank(rm), hgc_dimension(m, 2, 1, r));
      EXPECT_TRUE(same_row_space(c.generator, rm)) << r << " " << m;
      HgcSpec d = dual_hgc(c);
      if (m - 1 - r >= 0) EXPECT_TRUE(same_row_space(d.generator, reed_muller(m - 1 - r, m, c.vertices)));
    }
}

TEST(Hgc, UnitCodeword) {
  auto& F = GaloisField::get(2);
  HgcSpec c = construct_hgc(example_base(F), 2, 1);
  RowVector w = hgc_unit_codeword(c, Layer(4, {0, 1}), {2, 1});
  std::string s;
  for (Eigen::Index i = 0; i < w.size(); ++i) s += std::to_string(w(i).value());
  EXPECT_EQ(s, "0000000001000100");
  EXPECT_LE(weight(w), 3);
  EXPECT_THROW(hgc_unit_codeword(c, Layer(4, {0, 1}), {0, 1}), std::invalid_argument);
  EXPECT_THROW(hgc_unit_codeword(c, Layer(4, {0, 2}), {2, 1}), std::invalid_argument);

  auto& F7 = GaloisField::get(7);
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int m = 1; m <= 3; ++m)
        for (int t = 1; t <= m; ++t) {
          HgcSpec p = construct_hgc(vandermonde(F7.distinct_points(n), k), m, t);
          Matrix H = dual_hgc(p).generator;
          std::int64_t bound = 1;
          for (int i = 0; i < t; ++i) bound *= n - k + 1;
          Layer A = Layer::range(n, 0, k);
          for (const auto& L : p.vertices) {
            if (hamming_shell(L, A) != p.r) continue;
            RowVector u = hgc_unit_codeword(p, A, L);
            ASSERT_LE(weight(u), bound);
            ASSERT_TRUE(all_zero(H * u.transpose()));
          }
        }
}
