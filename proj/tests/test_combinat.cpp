#include <gtest/gtest.h>

#include <algorithm>

#include "johnson/combinat.hpp"

using namespace johnson;

namespace {

std::string join(const std::vector<Layer>& v) {
  std::string s;
  for (const auto& L : v) s += (s.empty() ? "" : " ") + L.str();
  return s;
}

}  // namespace

TEST(Combinat, KlexOrder) {
  EXPECT_EQ(join(johnson_vertices(5, 3, VertexOrder::klex(2))), "012 013 014 023 024 034 123 124 134 234");
  EXPECT_EQ(join(johnson_vertices(3, 3, VertexOrder::lex())), "012");
  EXPECT_EQ(join(johnson_vertices(5, 2, VertexOrder::lex())), "01 02 03 04 12 13 14 23 24 34");
}

TEST(Combinat, ShellIndex) {
  EXPECT_EQ(shell_index(Layer(5, {2, 3}), Layer(5, {0, 1})), 2);
  EXPECT_EQ(shell_index(Layer(5, {0, 3}), Layer(5, {0, 3})), 0);
  EXPECT_EQ(shell_index(Layer(8, {0, 1, 2, 3, 4}), Layer(8, {0, 1, 2, 3})), 0);
}

TEST(Combinat, Balls) {
  auto B = ball(Layer(5, {0, 1}), 0, 5, 3);
  EXPECT_EQ(join({B.begin(), B.end()}), "012 013 014");
  EXPECT_EQ(ball(Layer(8, {0, 1, 2, 3}), 1, 8, 5).size(), 28u);
  EXPECT_EQ(ball(Layer(8, {0, 1, 2, 3}), 3, 8, 5).size(), 56u);
  EXPECT_EQ(ball_size(8, 5, 4, 3), 56);
  EXPECT_EQ(ball_size(7, 4, 3, 1), 22);
  for (int n = 1; n <= 8; ++n)
    for (int v = 0; v <= n; ++v)
      for (int k = 0; k <= n; ++k) {
        Layer A = Layer::range(n, 0, k);
        GraphParams g(n, v, k);
        for (int r = 0; r <= g.R; ++r)
          ASSERT_EQ(ball_size(n, v, k, r), static_cast<std::int64_t>(ball(A, r, n, v).size()));
        if (k <= v) EXPECT_EQ(ball_size(n, v, k, 0), binomial(n - k, v - k));
      }
}

TEST(Combinat, ShellSymmetries) {
  for (int n = 2; n <= 8; ++n)
    for (int v = 1; v < n; ++v)
      for (int k = 1; k < n; ++k) {
        GraphParams g(n, v, k);
        for (const Layer& A : subsets(n, k)) {
          for (const Layer& L : subsets(n, v)) {
            int r = shell_index(L, A);
            ASSERT_LE(r, g.R);
            ASSERT_EQ(shell_index(L, A.complement()), g.R - r);
            // complement of B_r(A) is B_{R-r-1}(A^c)
            for (int s = 0; s < g.R; ++s)
              ASSERT_EQ(r > s, shell_index(L, A.complement()) <= g.R - s - 1);
          }
          if (n > 6) break;
        }
      }
}

TEST(Combinat, ComplementShellDuality) {
  // L in S_r(A) within J(n,v) iff L^c in S_{R-r}(A) within J(n,n-v).
  for (int n = 2; n <= 7; ++n)
    for (int v = 1; v < n; ++v)
      for (int k = 1; k < n; ++k) {
        int R = GraphParams(n, v, k).R;
        ASSERT_EQ(R, GraphParams(n, n - v, k).R);
        Layer A = Layer::range(n, 0, k);
        for (const Layer& L : subsets(n, v)) ASSERT_EQ(shell_index(L.complement(), A), R - shell_index(L, A));
      }
}

TEST(Combinat, OrdersRefineBruhat) {
  for (int n = 3; n <= 7; ++n)
    for (int v = 1; v < n; ++v)
      for (int k = 0; k <= n; ++k) {
        auto vs = johnson_vertices(n, v, VertexOrder::klex(k));
        auto lex = johnson_vertices(n, v, VertexOrder::lex());
        for (const auto* order : {&vs, &lex})
          for (std::size_t i = 0; i < order->size(); ++i)
            for (std::size_t j = 0; j < order->size(); ++j) {
              auto a = (*order)[i].elems(), b = (*order)[j].elems();
              bool below = a != b;
              for (int x = 0; x < v; ++x) below = below && a[x] <= b[x];
              if (below) ASSERT_LT(i, j);
            }
        // Adjacent pairs: neighbors that precede L are exactly the ones of
        // smaller weight sum(l_i - i), and there are that many of them.
        for (const auto* order : {&vs, &lex})
          for (std::size_t i = 0; i < order->size(); ++i) {
            auto e = (*order)[i].elems();
            int weight = 0, before = 0;
            for (int x = 0; x < v; ++x) weight += e[x] - x;
            for (std::size_t j = 0; j < order->size(); ++j) {
              if (((*order)[i] & (*order)[j]).size() != v - 1) continue;
              auto f = (*order)[j].elems();
              int wj = 0;
              for (int x = 0; x < v; ++x) wj += f[x] - x;
              ASSERT_EQ(j < i, wj < weight);
              before += j < i;
            }
            ASSERT_EQ(before, weight);
          }
      }
}

TEST(Combinat, Sign) {
  EXPECT_EQ(sign_of(Layer::range(6, 0, 3)), 1);
  EXPECT_EQ(sign_of(Layer(4, {0, 2})), -1);
  EXPECT_EQ(sign_of(Layer(4, {2, 3})), 1);
  // Parity of the permutation L followed by L^c.
  for (int n = 1; n <= 7; ++n)
    for (int v = 0; v <= n; ++v)
      for (const Layer& L : subsets(n, v)) {
        auto p = L.elems();
        for (int e : L.complement().elems()) p.push_back(e);
        int inv = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) inv += p[i] > p[j];
        ASSERT_EQ(sign_of(L), inv % 2 ? -1 : 1);
      }
}

TEST(Combinat, HammingBalls) {
  Layer A(4, {0, 1});
  auto B0 = hamming_ball(A, 0, 2, 4);
  EXPECT_EQ(B0.size(), 4u);
  EXPECT_TRUE(B0.count({1, 0}));
  EXPECT_EQ(hamming_ball(A, 1, 2, 4).size(), 12u);
  EXPECT_EQ(hamming_ball(A, 2, 2, 4).size(), 16u);
  std::string s;
  for (const auto& x : hamming_vertices(2, 4, 2)) s += hamming_str(x) + " ";
  EXPECT_EQ(s, "00 01 10 11 02 03 12 13 20 21 30 31 22 23 32 33 ");
}

TEST(Combinat, LayerText) {
  EXPECT_EQ(Layer::parse(8, "0134").str(), "0134");
  EXPECT_EQ(Layer(12, {1, 10}).str(), "1,10");
  EXPECT_EQ(Layer::parse(12, "1,10"), Layer(12, {1, 10}));
  EXPECT_THROW(Layer(4, {4}), std::invalid_argument);
}
