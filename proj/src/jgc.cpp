#include "johnson/jgc.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace johnson {

namespace {

const GaloisField& field_of(const Matrix& M) {
  for (Eigen::Index i = 0; i < M.size(); ++i)
    if (M.data()[i].field()) return *M.data()[i].field();
  throw std::invalid_argument("matrix carries no field");
}

bool is_base_infoset(const Matrix& base, const Layer& A) {
  if (A.size() != base.rows()) return false;
  return rank(base(Eigen::all, columns_of(A))) == base.rows();
}

}  // namespace

namespace {

Matrix complete_basis(const GaloisField& F, const Matrix& base) {
  const Eigen::Index k = base.rows(), n = base.cols();
  auto E = rref(base);
  if (E.rank() != k) throw std::invalid_argument("base matrix is rank deficient");
  std::vector<bool> pivot(n, false);
  for (auto p : E.pivots) pivot[p] = true;
  Matrix g = zeros(F, n, n);
  g.topRows(k) = base;
  Eigen::Index row = k;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!pivot[j]) g(row++, j) = F.one();
  return g;
}

}  // namespace

Matrix complete_basis(const Matrix& base) { return complete_basis(field_of(base), base); }

JgcSpec construct(const Matrix& base, int v, int t, VertexOrder order) {
  return construct(field_of(base), base, v, t, order);
}

JgcSpec construct(const GaloisField& F, const Matrix& base, int v, int t, VertexOrder order) {
  JgcSpec c;
  c.field = &F;
  c.n = static_cast<int>(base.cols());
  c.k = static_cast<int>(base.rows());
  c.v = v;
  if (v < 0 || v > c.n) throw std::invalid_argument("layer size out of range");
  if (t < 0) throw std::invalid_argument("threshold out of range");
  t = std::min(t, std::min(v, c.k) + 1);
  c.t = t;
  c.r = std::min(v, c.k) - t;
  c.base = base;
  c.basis = complete_basis(F, base);
  c.order = order;
  c.vertices = johnson_vertices(c.n, v, order);
  Layer I0 = Layer::range(c.n, 0, c.k);
  for (const Layer& I : johnson_vertices(c.n, v, VertexOrder::klex(c.k)))
    if ((I & I0).size() >= t) c.basis_index.push_back(I);
  c.generator = zeros(*c.field, static_cast<Eigen::Index>(c.basis_index.size()), c.length());
  for (std::size_t i = 0; i < c.basis_index.size(); ++i)
    c.generator.row(static_cast<Eigen::Index>(i)) = pi(select_rows(c.basis, c.basis_index[i]), c.vertices);
  return c;
}

JgcSpec construct(const Matrix& base, int v, int t) {
  return construct(base, v, t, VertexOrder::klex(static_cast<int>(base.rows())));
}

bool InfosetReport::all_pass() const {
  for (const auto& a : anchors)
    if (a.status == AnchorStatus::Fail) return false;
  return true;
}

std::vector<Layer> InfosetReport::failing() const {
  std::vector<Layer> out;
  for (const auto& a : anchors)
    if (a.status != AnchorStatus::Pass) out.push_back(a.anchor);
  return out;
}

InfosetReport certify_infosets(const JgcSpec& code) {
  InfosetReport rep;
  for (const Layer& A : subsets(code.n, code.k)) {
    AnchorResult res{A, AnchorStatus::NotBaseInfoSet, 0};
    if (is_base_infoset(code.base, A)) {
      std::vector<Eigen::Index> cols;
      for (std::size_t i = 0; i < code.vertices.size(); ++i)
        if ((code.vertices[i] & A).size() >= code.t) cols.push_back(static_cast<Eigen::Index>(i));
      res.rank = cols.empty() ? 0 : rank(code.generator(Eigen::all, cols));
      res.status = res.rank == code.dim() && static_cast<Eigen::Index>(cols.size()) == code.dim()
                       ? AnchorStatus::Pass
                       : AnchorStatus::Fail;
    }
    rep.anchors.push_back(res);
  }
  return rep;
}

namespace {

// Rows of the base code that restrict to unit vectors on A.
Matrix systematic_on(const Matrix& base, const Layer& A) {
  Matrix sub = base(Eigen::all, columns_of(A));
  return inverse(sub) * base;
}

}  // namespace

RowVector unit_codeword(const JgcSpec& code, const Layer& A0, const Layer& L) {
  const GaloisField& F = *code.field;
  if (!is_base_infoset(code.base, A0)) throw std::invalid_argument("anchor is not an information set of the base code");
  if (L.size() != code.v || shell_index(L, A0) != code.r)
    throw std::invalid_argument("layer is not in the outer shell of the anchor");
  Matrix S = systematic_on(code.base, A0);
  std::vector<int> a0 = A0.elems();
  Matrix M = zeros(F, code.v, code.n);
  Eigen::Index row = 0;
  for (int j : L.elems()) {
    if (A0.contains(j)) {
      auto pos = std::find(a0.begin(), a0.end(), j) - a0.begin();
      M.row(row) = S.row(pos);
    } else {
      M(row, j) = F.one();
    }
    ++row;
  }
  RowVector w = pi(M, code.vertices);
  int at = index_of(code.vertices, L);
  return w / w(at);
}

JgcSpec dual(const JgcSpec& code) {
  Matrix D0 = nullspace(code.base);
  JgcSpec d = construct(*code.field, D0, code.v, code.v + 1 - code.t, code.order);
  d.alphas = code.alphas;
  d.family = code.family;
  return d;
}

JgcSpec signed_dual(const JgcSpec& code) {
  JgcSpec d = construct(*code.field, code.base, code.n - code.v, code.k + 1 - code.t, VertexOrder::klex(code.k));
  d.family = code.family;
  return d;
}

JgcSpec signed_primal(const JgcSpec& code) {
  Matrix D0 = nullspace(code.base);
  int nk = static_cast<int>(D0.rows());
  JgcSpec c = construct(*code.field, D0, code.n - code.v, std::max(0, nk - code.v + code.t), VertexOrder::klex(nk));
  c.family = code.family;
  return c;
}

Gf signed_pairing(const RowVector& c, const std::vector<Layer>& cv, const RowVector& d,
                  const std::vector<Layer>& dv) {
  Gf acc;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    int j = index_of(dv, cv[i].complement());
    if (j < 0) throw std::invalid_argument("complement layer missing");
    Gf term = c(static_cast<Eigen::Index>(i)) * d(j);
    acc = sign_of(cv[i]) > 0 ? acc + term : acc - term;
  }
  return acc;
}

std::int64_t ParityStructure::weight_bound(const GraphParams& g, int block) {
  return binomial(g.d1 + g.d2 - 2 * block, g.R - block);
}

namespace {

// pi of the matrix with rows h_j (j in L outside A) and e_j (j in L inside A).
RowVector local_parity(const JgcSpec& code, const Matrix& h, const Layer& A, const Layer& L) {
  const GaloisField& F = *code.field;
  std::vector<int> ac = A.complement().elems();
  Matrix M = zeros(F, code.v, code.n);
  Eigen::Index row = 0;
  for (int j : L.elems()) {
    if (A.contains(j)) {
      M(row, j) = F.one();
    } else {
      auto pos = std::find(ac.begin(), ac.end(), j) - ac.begin();
      M.row(row) = h.row(pos);
    }
    ++row;
  }
  return pi(M, code.vertices);
}

}  // namespace

ParityStructure sparse_parities(const JgcSpec& code, const Layer& A) {
  if (!is_base_infoset(code.base, A)) throw std::invalid_argument("anchor is not an information set of the base code");
  ParityStructure ps;
  ps.anchor = A;
  Layer Ac = A.complement();
  Matrix D0 = nullspace(code.base);
  Matrix h = D0.rows() ? systematic_on(D0, Ac) : D0;
  int need = code.v + 1 - code.t;
  std::vector<Layer> rows;
  for (const Layer& I : code.vertices)
    if ((I & Ac).size() >= need) rows.push_back(I);
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const Layer& a, const Layer& b) { return shell_index(a, Ac) < shell_index(b, Ac); });
  for (const Layer& I : rows) {
    RowVector u = local_parity(code, h, A, I);
    ParityRow pr;
    pr.pivot = I;
    pr.block = shell_index(I, Ac);
    for (Eigen::Index j = 0; j < u.size(); ++j)
      if (!u(j).is_zero()) {
        pr.columns.push_back(j);
        pr.support.push_back(code.vertices[static_cast<std::size_t>(j)]);
        pr.coefficients.push_back(u(j));
      }
    ps.rows.push_back(std::move(pr));
  }
  return ps;
}

Matrix parity_check(const JgcSpec& code) { return dual(code).generator; }

ErasureDecoder::ErasureDecoder(const JgcSpec& code, const Layer& A) : ErasureDecoder(code, A, parity_check(code)) {}

ErasureDecoder::ErasureDecoder(const JgcSpec& code, const Layer& A, Matrix H)
    : code_(&code), anchor_(A), H_(std::move(H)) {
  const auto N = code.length();
  in_ball_.assign(static_cast<std::size_t>(N), false);
  for (Eigen::Index i = 0; i < N; ++i)
    in_ball_[static_cast<std::size_t>(i)] = (code.vertices[static_cast<std::size_t>(i)] & A).size() >= code.t;
  if (!is_base_infoset(code.base, A)) return;
  std::vector<Eigen::Index> erased;
  for (Eigen::Index i = 0; i < N; ++i)
    if (!in_ball_[static_cast<std::size_t>(i)]) erased.push_back(i);
  if (erased.empty()) {
    sparse_ok_ = true;
    return;
  }
  std::stable_sort(erased.begin(), erased.end(), [&](Eigen::Index a, Eigen::Index b) {
    return (code.vertices[static_cast<std::size_t>(a)] & A).size() > (code.vertices[static_cast<std::size_t>(b)] & A).size();
  });
  Matrix D0 = nullspace(code.base);
  Matrix h = D0.rows() ? systematic_on(D0, A.complement()) : D0;
  Matrix U(static_cast<Eigen::Index>(erased.size()), N);
  for (std::size_t e = 0; e < erased.size(); ++e)
    U.row(static_cast<Eigen::Index>(e)) = local_parity(code, h, A, code.vertices[static_cast<std::size_t>(erased[e])]);
  Matrix T;
  try {
    T = solve(H_.transpose(), U.transpose()).transpose();
  } catch (const std::runtime_error&) {
    return;
  }
  std::vector<bool> done(in_ball_);
  for (std::size_t e = 0; e < erased.size(); ++e) {
    Step s;
    s.position = erased[e];
    s.pivot = U(static_cast<Eigen::Index>(e), s.position);
    if (s.pivot.is_zero()) return;
    s.syndrome_combination = T.row(static_cast<Eigen::Index>(e));
    for (Eigen::Index j = 0; j < N; ++j) {
      if (j == s.position || U(static_cast<Eigen::Index>(e), j).is_zero()) continue;
      if (!done[static_cast<std::size_t>(j)]) return;
      s.others.emplace_back(j, U(static_cast<Eigen::Index>(e), j));
    }
    done[static_cast<std::size_t>(s.position)] = true;
    steps_.push_back(std::move(s));
  }
  sparse_ok_ = true;
}

RowVector ErasureDecoder::decode(const PartialWord& known, const Vector& syndrome) const {
  const JgcSpec& code = *code_;
  const auto N = code.length();
  if (static_cast<Eigen::Index>(known.size()) != N) throw std::invalid_argument("partial word has wrong length");
  if (syndrome.size() != H_.rows()) throw std::invalid_argument("syndrome has wrong length");
  bool covers = true;
  for (Eigen::Index i = 0; i < N; ++i)
    if (in_ball_[static_cast<std::size_t>(i)] && !known[static_cast<std::size_t>(i)]) covers = false;
  RowVector c;
  if (sparse_ok_ && covers) {
    c = RowVector::Constant(N, code.field->zero());
    for (Eigen::Index i = 0; i < N; ++i)
      if (known[static_cast<std::size_t>(i)]) c(i) = *known[static_cast<std::size_t>(i)];
    for (const Step& s : steps_) {
      if (known[static_cast<std::size_t>(s.position)]) continue;
      Gf acc = (s.syndrome_combination * syndrome)(0, 0);
      for (const auto& [j, coef] : s.others) acc -= coef * c(j);
      c(s.position) = acc / s.pivot;
    }
  } else {
    c = dense_decode(known, syndrome);
  }
  Vector check = H_ * c.transpose();
  if (check != syndrome) throw std::runtime_error("inconsistent syndrome: input is not a codeword with this syndrome");
  return c;
}

RowVector ErasureDecoder::dense_decode(const PartialWord& known, const Vector& syndrome) const {
  const JgcSpec& code = *code_;
  const auto N = code.length();
  std::vector<Eigen::Index> unknown, have;
  RowVector c = RowVector::Constant(N, code.field->zero());
  for (Eigen::Index i = 0; i < N; ++i) {
    if (known[static_cast<std::size_t>(i)]) {
      have.push_back(i);
      c(i) = *known[static_cast<std::size_t>(i)];
    } else {
      unknown.push_back(i);
    }
  }
  if (unknown.empty()) return c;
  Vector rhs = syndrome;
  if (!have.empty()) rhs -= H_(Eigen::all, have) * c(Eigen::all, have).transpose();
  Matrix A = H_(Eigen::all, unknown);
  bool unique = false;
  Matrix x = solve(A, Matrix(rhs), &unique);
  if (!unique) throw std::runtime_error("erasure pattern not decodable");
  for (std::size_t i = 0; i < unknown.size(); ++i) c(unknown[i]) = x(static_cast<Eigen::Index>(i), 0);
  return c;
}

RowVector erasure_decode(const JgcSpec& code, const Layer& A, const PartialWord& known, const Vector& syndrome) {
  return ErasureDecoder(code, A).decode(known, syndrome);
}

std::string descriptor_json(const JgcSpec& code) {
  nlohmann::json j;
  j["family"] = code.family;
  j["n"] = code.n;
  j["v"] = code.v;
  j["k"] = code.k;
  j["t"] = code.t;
  j["r"] = code.r;
  j["q"] = code.field->size();
  if (!code.alphas.empty()) {
    std::vector<std::uint32_t> a;
    for (const Gf& x : code.alphas) a.push_back(x.value());
    j["alphas"] = a;
  }
  std::vector<std::vector<std::uint32_t>> g;
  for (Eigen::Index i = 0; i < code.generator.rows(); ++i) {
    std::vector<std::uint32_t> row;
    for (Eigen::Index c = 0; c < code.generator.cols(); ++c) row.push_back(code.generator(i, c).value());
    g.push_back(row);
  }
  j["generator"] = g;
  j["order"] = code.order.str();
  std::vector<std::vector<int>> verts;
  for (const Layer& L : code.vertices) verts.push_back(L.elems());
  j["vertices"] = verts;
  return j.dump();
}

}  // namespace johnson
