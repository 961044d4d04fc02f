#include "johnson/subres.hpp"

#include <algorithm>
#include <stdexcept>

namespace johnson {

SubresultantFrame SubresultantFrame::make(int k, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  if (std::adjacent_find(I.begin(), I.end()) != I.end()) throw std::invalid_argument("repeated index in I");
  if (!I.empty() && I.front() < 0) throw std::invalid_argument("negative index in I");
  SubresultantFrame f;
  f.k = k;
  f.v = static_cast<int>(I.size());
  f.I = I;
  for (int i = 0; i < k; ++i) f.E.push_back(i);
  f.m = std::max(k, I.empty() ? 0 : I.back() + 1);
  for (int e = 0; e < f.m; ++e) {
    bool inE = e < k, inI = std::binary_search(I.begin(), I.end(), e);
    if (inE && inI) f.V0.push_back(e);
    else if (inE || inI) f.V1.push_back(e);
    else f.V2.push_back(e);
  }
  return f;
}

namespace {

const GaloisField& field_of(const Poly& p, const Poly& q) {
  if (&p.field() != &q.field()) throw std::invalid_argument("polynomials over different fields");
  return p.field();
}

}  // namespace

Matrix sylvester_principal(const Poly& p, const Poly& q, int i) {
  const GaloisField& F = field_of(p, q);
  const int v = p.degree(), k = q.degree();
  if (v < 0 || k < 0) throw std::invalid_argument("zero polynomial");
  if (i < 0 || i > std::min(v, k)) throw std::invalid_argument("subresultant index out of range");
  const int size = k + v - 2 * i;
  Matrix S = zeros(F, size, size);
  auto fill = [&](const Poly& f, int shifts, int row0) {
    for (int r = 0; r < shifts; ++r) {
      int shift = shifts - 1 - r;
      for (int c = 0; c < size; ++c) S(row0 + r, c) = f.coeff(k + v - i - 1 - c - shift);
    }
  };
  fill(p, k - i, 0);
  fill(q, v - i, k - i);
  return S;
}

Matrix phi_masked(const Poly& p, const Poly& q, int i) {
  const GaloisField& F = field_of(p, q);
  const int v = p.degree(), k = q.degree();
  Matrix S = sylvester_principal(p, q, i);
  const int size = k + v - i, lead = k + v - 2 * i;
  Matrix P = zeros(F, size, size);
  P.topLeftCorner(lead, lead) = S;
  // Trailing coefficients of ap+bq, degrees i-1 down to 0.
  auto fill = [&](const Poly& f, int shifts, int row0) {
    for (int r = 0; r < shifts; ++r) {
      int shift = shifts - 1 - r;
      for (int c = 0; c < i; ++c) P(row0 + r, lead + c) = f.coeff(i - 1 - c - shift);
    }
  };
  fill(p, k - i, 0);
  fill(q, v - i, k - i);
  for (int c = 0; c < i; ++c) P(lead + c, lead + c) = F.one();  // a0 = x^(i-1-c)
  return P;
}

namespace {

struct Column {
  int exponent;
  int part;  // 0: sum, 1: a side, 2: b side
};

std::vector<Column> columns_for(const SubresultantFrame& fr, bool extended) {
  std::vector<Column> cols;
  for (int e = 0; e < fr.m; ++e) {
    bool v0 = std::binary_search(fr.V0.begin(), fr.V0.end(), e);
    bool v2 = std::binary_search(fr.V2.begin(), fr.V2.end(), e);
    if (v2 || (v0 && extended)) {
      cols.push_back({e, 1});
      cols.push_back({e, 2});
    } else if (!v0) {
      cols.push_back({e, 0});
    }
  }
  return cols;
}

}  // namespace

Matrix sigma_I(const Poly& p, const Poly& q, const SubresultantFrame& fr) {
  const GaloisField& F = field_of(p, q);
  if (p.degree() != fr.v || q.degree() != fr.k) throw std::invalid_argument("degrees do not match the frame");
  auto cols = columns_for(fr, false);
  const int na = fr.m - fr.v, nb = fr.m - fr.k;
  Matrix S = zeros(F, na + nb, static_cast<Eigen::Index>(cols.size()));
  for (int s = 0; s < na + nb; ++s) {
    bool is_a = s < na;
    int shift = is_a ? s : s - na;
    const Poly& f = is_a ? p : q;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Column& col = cols[c];
      if (col.part == 1 && !is_a) continue;
      if (col.part == 2 && is_a) continue;
      S(s, static_cast<Eigen::Index>(c)) = f.coeff(col.exponent - shift);
    }
  }
  return S;
}

Matrix sigma_I_extended(const Poly& p, const Poly& q, const SubresultantFrame& fr) {
  const GaloisField& F = field_of(p, q);
  auto cols = columns_for(fr, true);
  const int n0 = static_cast<int>(fr.V0.size());
  const int na = fr.m - fr.v, nb = fr.m - fr.k;
  Matrix S = zeros(F, 2 * n0 + na + nb, static_cast<Eigen::Index>(cols.size()));
  for (int r = 0; r < 2 * n0; ++r) {
    int e = fr.V0[static_cast<std::size_t>(r % n0)];
    int part = r < n0 ? 1 : 2;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (cols[c].exponent == e && cols[c].part == part) S(r, static_cast<Eigen::Index>(c)) = F.one();
  }
  for (int s = 0; s < na + nb; ++s) {
    bool is_a = s < na;
    int shift = is_a ? s : s - na;
    const Poly& f = is_a ? p : q;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Column& col = cols[c];
      if ((col.part == 1 && !is_a) || (col.part == 2 && is_a)) continue;
      S(2 * n0 + s, static_cast<Eigen::Index>(c)) = f.coeff(col.exponent - shift);
    }
  }
  return S;
}

Matrix ev_matrix(const std::vector<Gf>& alphas, const Layer& L) {
  const GaloisField& F = *alphas.at(0).field();
  auto el = L.elems();
  const int v = static_cast<int>(el.size());
  Matrix M = zeros(F, v, v);
  for (int j = 0; j < v; ++j) {
    Gf x = alphas.at(static_cast<std::size_t>(el[static_cast<std::size_t>(j)]));
    Gf pw = F.one();
    for (int i = 0; i < v; ++i, pw *= x) M(i, j) = pw;
  }
  return M;
}

Matrix eta_I(const std::vector<Gf>& alphas, const Layer& L, const Poly& q, const SubresultantFrame& fr) {
  const GaloisField& F = q.field();
  if (L.size() != fr.v) throw std::invalid_argument("layer size differs from |I|");
  auto el = L.elems();
  const int v = fr.v, n0 = static_cast<int>(fr.V0.size()), nb = fr.m - fr.k;
  const int n2 = static_cast<int>(fr.V2.size());
  Matrix M = zeros(F, n0 + nb, v + n2);
  auto ev = [&](const Poly& f, int row) {
    for (int j = 0; j < v; ++j) M(row, j) = f(alphas.at(static_cast<std::size_t>(el[static_cast<std::size_t>(j)])));
  };
  for (int r = 0; r < n0; ++r) ev(Poly::monomial(F, fr.V0[static_cast<std::size_t>(r)], F.one()), r);
  for (int s = 0; s < nb; ++s) {
    Poly bq = Poly::monomial(F, s, F.one()) * q;
    std::vector<Gf> v1(static_cast<std::size_t>(fr.m), F.zero());
    for (int e : fr.V1) v1[static_cast<std::size_t>(e)] = bq.coeff(e);
    ev(Poly(F, v1), n0 + s);
    for (int c = 0; c < n2; ++c) M(n0 + s, v + c) = bq.coeff(fr.V2[static_cast<std::size_t>(c)]);
  }
  return M;
}

ShIdentity sh_identity(const std::vector<Gf>& alphas, const Layer& L, int k, const std::vector<int>& I) {
  SubresultantFrame fr = SubresultantFrame::make(k, I);
  if (L.size() != fr.v) throw std::invalid_argument("layer size differs from |I|");
  std::vector<Gf> roots;
  for (int j : L.elems()) roots.push_back(alphas.at(static_cast<std::size_t>(j)));
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (roots[a] == roots[b]) throw std::invalid_argument("repeated roots");
  const GaloisField& F = *alphas.at(0).field();
  Poly p = Poly::from_roots(F, roots);
  Poly q = Poly::from_roots(F, std::vector<Gf>(alphas.begin(), alphas.begin() + k));
  ShIdentity out;
  out.lhs = F.zero() + determinant(ev_matrix(alphas, L)) * determinant(sigma_I(p, q, fr));
  out.rhs = F.zero() + p.leading().pow(static_cast<std::uint64_t>(fr.m - fr.v)) * determinant(eta_I(alphas, L, q, fr));
  if (out.lhs == out.rhs) out.sign = 1;
  else if (out.lhs == -out.rhs) out.sign = -1;
  return out;
}

bool sh_identity_check(const std::vector<Gf>& alphas, const Layer& L, int k, const std::vector<int>& I) {
  return sh_identity(alphas, L, k, I).holds();
}

}  // namespace johnson
