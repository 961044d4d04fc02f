#pragma once

#include <vector>

#include "johnson/jgc.hpp"
#include "johnson/poly.hpp"

namespace johnson {

enum class BasisForm { Monomial, Triangular, Block };

struct RsBasis {
  std::vector<Gf> alphas;
  BasisForm form = BasisForm::Monomial;
  int k = 0;  // block split, Block form only
  std::vector<Poly> polys;
  Matrix rows;  // rows(i, j) = polys[i](alphas[j])
};

// rows x n matrix with entry (i, j) = alpha_j^i.
Matrix vandermonde(const std::vector<Gf>& alphas, int rows);

// f_i = prod_{j<i}(x - alpha_j); h_i = x^i for i < k, f_k x^(i-k) otherwise.
RsBasis reduced_basis(const std::vector<Gf>& alphas, BasisForm form, int k = 0);

// det(b_i(alpha_j) : i in I, j in L)
Gf det_rows(const RsBasis& basis, const Layer& I, const Layer& L);
Gf det_h(const RsBasis& block, const Layer& I, const Layer& L);

JgcSpec rs_jgc(int n, int v, int k, int t, std::uint32_t q);
JgcSpec rs_jgc(int v, int k, int t, const std::vector<Gf>& alphas, VertexOrder order);

// Delta_j = -1 / p'(alpha_j) with p(z) = prod (z - alpha_j).
std::vector<Gf> dual_scaling(const std::vector<Gf>& alphas);

// Rows indexed by vertices L of J(n, v): coefficients of
// f_L = prod_{i in L} (1 + alpha_i x + ... + alpha_i^(n-v) x^(n-v)).
// Here information sets select rows, not columns.
struct ProductPolyCode {
  int n = 0, v = 0;
  const GaloisField* field = nullptr;
  std::vector<Gf> alphas;
  std::vector<Layer> vertices;
  Matrix coefficients;  // C(n,v) x (v(n-v)+1)

  // Rows with |L & A| >= v-1 form a basis of the coefficient space.
  bool anchor_basis(const Layer& A) const;
};

ProductPolyCode product_poly_code(int n, int v, std::uint32_t q);

}  // namespace johnson
