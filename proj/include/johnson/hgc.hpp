#pragma once

#include <string>
#include <vector>

#include "johnson/jgc.hpp"

namespace johnson {

struct HgcSpec {
  int m = 0, n = 0, k = 0, t = 0, r = 0;
  const GaloisField* field = nullptr;
  Matrix base;
  Matrix basis;
  std::vector<HammingVertex> vertices;     // coordinate order
  std::vector<HammingVertex> basis_index;  // row tuples with >= t entries in {0..k-1}
  Matrix generator;

  Eigen::Index dim() const { return generator.rows(); }
  Eigen::Index length() const { return static_cast<Eigen::Index>(vertices.size()); }
};

HgcSpec construct_hgc(const Matrix& base, int m, int t);
HgcSpec construct_hgc(const GaloisField& F, const Matrix& base, int m, int t, int order_k);

// sum_{j <= r} C(m, j) (n-k)^j k^(m-j)
std::int64_t hgc_dimension(int m, int n, int k, int r);

InfosetReport certify_hgc_infosets(const HgcSpec& code);
HgcSpec dual_hgc(const HgcSpec& code);
RowVector hgc_unit_codeword(const HgcSpec& code, const Layer& A0, const HammingVertex& L);

// Binary evaluation code of squarefree monomials of degree <= r at the points.
Matrix reed_muller(int r, int m, const std::vector<HammingVertex>& points);

std::string descriptor_json(const HgcSpec& code);

}  // namespace johnson
