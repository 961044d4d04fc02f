#include "johnson/rs.hpp"

#include <numeric>
#include <stdexcept>

namespace johnson {

namespace {

void require_distinct(const std::vector<Gf>& alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw std::invalid_argument("evaluation points must be distinct");
  if (alphas.empty() || !alphas[0].field()) throw std::invalid_argument("evaluation points need a field");
}

}  // namespace

Matrix vandermonde(const std::vector<Gf>& alphas, int rows) {
  require_distinct(alphas);
  const GaloisField& F = *alphas[0].field();
  Matrix V = zeros(F, rows, static_cast<Eigen::Index>(alphas.size()));
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    Gf p = F.one();
    for (int i = 0; i < rows; ++i, p *= alphas[j]) V(i, static_cast<Eigen::Index>(j)) = p;
  }
  return V;
}

RsBasis reduced_basis(const std::vector<Gf>& alphas, BasisForm form, int k) {
  require_distinct(alphas);
  const GaloisField& F = *alphas[0].field();
  const int n = static_cast<int>(alphas.size());
  if (form == BasisForm::Block && (k < 0 || k > n)) throw std::invalid_argument("block split out of range");
  RsBasis b;
  b.alphas = alphas;
  b.form = form;
  b.k = k;
  auto f = [&](int i) {
    return Poly::from_roots(F, std::vector<Gf>(alphas.begin(), alphas.begin() + i));
  };
  for (int i = 0; i < n; ++i) {
    switch (form) {
      case BasisForm::Monomial:
        b.polys.push_back(Poly::monomial(F, i, F.one()));
        break;
      case BasisForm::Triangular:
        b.polys.push_back(f(i));
        break;
      case BasisForm::Block:
        b.polys.push_back(i < k ? Poly::monomial(F, i, F.one()) : f(k) * Poly::monomial(F, i - k, F.one()));
        break;
    }
  }
  b.rows = zeros(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.rows(i, j) = b.polys[static_cast<std::size_t>(i)](alphas[static_cast<std::size_t>(j)]);
  return b;
}

Gf det_rows(const RsBasis& basis, const Layer& I, const Layer& L) {
  if (I.size() != L.size()) throw std::invalid_argument("index sets differ in size");
  return determinant(basis.rows(columns_of(I), columns_of(L)));
}

Gf det_h(const RsBasis& block, const Layer& I, const Layer& L) {
  if (block.form != BasisForm::Block) throw std::invalid_argument("det_h needs the block basis");
  return det_rows(block, I, L);
}

JgcSpec rs_jgc(int v, int k, int t, const std::vector<Gf>& alphas, VertexOrder order) {
  JgcSpec c = construct(vandermonde(alphas, k), v, t, order);
  c.family = "RS";
  c.alphas = alphas;
  return c;
}

JgcSpec rs_jgc(int n, int v, int k, int t, std::uint32_t q) {
  if (q < static_cast<std::uint32_t>(n)) throw std::invalid_argument("field smaller than the number of nodes");
  return rs_jgc(v, k, t, GaloisField::get(q).distinct_points(static_cast<std::size_t>(n)), VertexOrder::klex(k));
}

std::vector<Gf> dual_scaling(const std::vector<Gf>& alphas) {
  require_distinct(alphas);
  const GaloisField& F = *alphas[0].field();
  std::vector<Gf> d;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    Gf p = F.one();
    for (std::size_t i = 0; i < alphas.size(); ++i)
      if (i != j) p *= alphas[j] - alphas[i];
    d.push_back(-(p.inverse()));
  }
  return d;
}

bool ProductPolyCode::anchor_basis(const Layer& A) const {
  std::vector<Eigen::Index> rows;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if ((vertices[i] & A).size() >= v - 1) rows.push_back(static_cast<Eigen::Index>(i));
  if (static_cast<Eigen::Index>(rows.size()) != coefficients.cols()) return false;
  return rank(coefficients(rows, Eigen::all)) == coefficients.cols();
}

ProductPolyCode product_poly_code(int n, int v, std::uint32_t q) {
  if (q < static_cast<std::uint32_t>(n)) throw std::invalid_argument("field smaller than the number of nodes");
  if (std::gcd(static_cast<std::uint32_t>(n - v + 1), q - 1) != 1)
    throw std::invalid_argument("product-polynomial code needs gcd(n-v+1, q-1) = 1");
  const GaloisField& F = GaloisField::get(q);
  ProductPolyCode c;
  c.n = n;
  c.v = v;
  c.field = &F;
  c.alphas = F.distinct_points(static_cast<std::size_t>(n));
  c.vertices = subsets(n, v);
  std::vector<Poly> f;
  for (int i = 0; i < n; ++i) {
    std::vector<Gf> co;
    Gf p = F.one();
    for (int e = 0; e <= n - v; ++e, p *= c.alphas[static_cast<std::size_t>(i)]) co.push_back(p);
    f.emplace_back(F, co);
  }
  const int len = v * (n - v) + 1;
  c.coefficients = zeros(F, static_cast<Eigen::Index>(c.vertices.size()), len);
  for (std::size_t r = 0; r < c.vertices.size(); ++r) {
    Poly p = Poly::constant(F, F.one());
    for (int i : c.vertices[r].elems()) p = p * f[static_cast<std::size_t>(i)];
    for (int e = 0; e < len; ++e) c.coefficients(static_cast<Eigen::Index>(r), e) = p.coeff(e);
  }
  return c;
}

}  // namespace johnson
