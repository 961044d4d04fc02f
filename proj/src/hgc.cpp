#include "johnson/hgc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace johnson {

namespace {

const GaloisField& field_of(const Matrix& M) {
  for (Eigen::Index i = 0; i < M.size(); ++i)
    if (M.data()[i].field()) return *M.data()[i].field();
  throw std::invalid_argument("matrix carries no field");
}

Matrix rows_for(const Matrix& g, const HammingVertex& I) {
  Matrix M(static_cast<Eigen::Index>(I.size()), g.cols());
  for (std::size_t i = 0; i < I.size(); ++i) M.row(static_cast<Eigen::Index>(i)) = g.row(I[i]);
  return M;
}

bool is_base_infoset(const Matrix& base, const Layer& A) {
  if (A.size() != base.rows()) return false;
  return rank(base(Eigen::all, columns_of(A))) == base.rows();
}

}  // namespace

std::int64_t hgc_dimension(int m, int n, int k, int r) {
  std::int64_t s = 0;
  for (int j = 0; j <= std::min(r, m); ++j) {
    std::int64_t term = binomial(m, j);
    for (int i = 0; i < j; ++i) term *= n - k;
    for (int i = 0; i < m - j; ++i) term *= k;
    s += term;
  }
  return s;
}

HgcSpec construct_hgc(const GaloisField& F, const Matrix& base, int m, int t, int order_k) {
  HgcSpec c;
  c.field = &F;
  c.m = m;
  c.n = static_cast<int>(base.cols());
  c.k = static_cast<int>(base.rows());
  c.t = t;
  if (t < 0 || t > m + 1) throw std::invalid_argument("threshold out of range");
  c.r = m - t;
  c.base = base;
  c.basis = base.rows() ? complete_basis(base) : identity(F, c.n);
  c.vertices = hamming_vertices(m, c.n, order_k);
  Layer I0 = Layer::range(c.n, 0, c.k);
  for (const auto& I : hamming_vertices(m, c.n, c.k))
    if (m - hamming_shell(I, I0) >= t) c.basis_index.push_back(I);
  c.generator = zeros(F, static_cast<Eigen::Index>(c.basis_index.size()), c.length());
  for (std::size_t i = 0; i < c.basis_index.size(); ++i)
    c.generator.row(static_cast<Eigen::Index>(i)) = tau(rows_for(c.basis, c.basis_index[i]), c.vertices);
  return c;
}

HgcSpec construct_hgc(const Matrix& base, int m, int t) {
  if (rank(base) != base.rows()) throw std::invalid_argument("base matrix is rank deficient");
  return construct_hgc(field_of(base), base, m, t, static_cast<int>(base.rows()));
}

InfosetReport certify_hgc_infosets(const HgcSpec& code) {
  InfosetReport rep;
  for (const Layer& A : subsets(code.n, code.k)) {
    AnchorResult res{A, AnchorStatus::NotBaseInfoSet, 0};
    if (is_base_infoset(code.base, A)) {
      std::vector<Eigen::Index> cols;
      for (std::size_t i = 0; i < code.vertices.size(); ++i)
        if (hamming_shell(code.vertices[i], A) <= code.r) cols.push_back(static_cast<Eigen::Index>(i));
      res.rank = cols.empty() ? 0 : rank(code.generator(Eigen::all, cols));
      res.status = res.rank == code.dim() && static_cast<Eigen::Index>(cols.size()) == code.dim()
                       ? AnchorStatus::Pass
                       : AnchorStatus::Fail;
    }
    rep.anchors.push_back(res);
  }
  return rep;
}

HgcSpec dual_hgc(const HgcSpec& code) {
  Matrix D0 = nullspace(code.base);
  return construct_hgc(*code.field, D0, code.m, code.m + 1 - code.t, code.k);
}

RowVector hgc_unit_codeword(const HgcSpec& code, const Layer& A0, const HammingVertex& L) {
  const GaloisField& F = *code.field;
  if (!is_base_infoset(code.base, A0)) throw std::invalid_argument("anchor is not an information set of the base code");
  if (static_cast<int>(L.size()) != code.m || hamming_shell(L, A0) != code.r)
    throw std::invalid_argument("tuple is not in the outer shell of the anchor");
  Matrix S = inverse(Matrix(code.base(Eigen::all, columns_of(A0)))) * code.base;
  std::vector<int> a0 = A0.elems();
  Matrix M = zeros(F, code.m, code.n);
  for (int i = 0; i < code.m; ++i) {
    int j = L[static_cast<std::size_t>(i)];
    if (A0.contains(j)) M.row(i) = S.row(std::find(a0.begin(), a0.end(), j) - a0.begin());
    else M(i, j) = F.one();
  }
  RowVector w = tau(M, code.vertices);
  auto at = std::find(code.vertices.begin(), code.vertices.end(), L) - code.vertices.begin();
  return w / w(at);
}

Matrix reed_muller(int r, int m, const std::vector<HammingVertex>& points) {
  const GaloisField& F = GaloisField::get(2);
  std::vector<std::uint32_t> monos;
  for (std::uint32_t s = 0; s < (1u << m); ++s)
    if (std::popcount(s) <= r) monos.push_back(s);
  Matrix G = zeros(F, static_cast<Eigen::Index>(monos.size()), static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (std::size_t p = 0; p < points.size(); ++p) {
      bool one = true;
      for (int b = 0; b < m; ++b)
        if ((monos[i] >> b & 1u) && points[p][static_cast<std::size_t>(b)] == 0) one = false;
      G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)) = one ? F.one() : F.zero();
    }
  return G;
}

std::string descriptor_json(const HgcSpec& code) {
  nlohmann::json j;
  j["family"] = "HGC";
  j["n"] = code.n;
  j["m"] = code.m;
  j["k"] = code.k;
  j["t"] = code.t;
  j["r"] = code.r;
  j["q"] = code.field->size();
  std::vector<std::vector<std::uint32_t>> g;
  for (Eigen::Index i = 0; i < code.generator.rows(); ++i) {
    std::vector<std::uint32_t> row;
    for (Eigen::Index c = 0; c < code.generator.cols(); ++c) row.push_back(code.generator(i, c).value());
    g.push_back(row);
  }
  j["generator"] = g;
  j["order"] = "shell";
  j["vertices"] = code.vertices;
  return j.dump();
}

}  // namespace johnson
