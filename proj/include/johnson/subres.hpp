#pragma once

#include <vector>

#include "johnson/combinat.hpp"
#include "johnson/matrix.hpp"
#include "johnson/poly.hpp"

namespace johnson {

// E = {0..k-1}, I a set of v nonnegative integers, m minimal with E u I in [0, m).
// V0 = E & I, V1 = symmetric difference, V2 = the rest of [0, m).
struct SubresultantFrame {
  int k = 0, v = 0, m = 0;
  std::vector<int> E, I, V0, V1, V2;
  static SubresultantFrame make(int k, std::vector<int> I);
};

// Rows a (x^(k-i-1) .. x^0) then b (x^(v-i-1) .. x^0); columns are the
// coefficients of ap+bq from degree k+v-i-1 down to i. v = deg p, k = deg q.
Matrix sylvester_principal(const Poly& p, const Poly& q, int i);
// Same map with the trailing i coefficients masked by extra a0 rows.
Matrix phi_masked(const Poly& p, const Poly& q, int i);

// Rows a = x^0.. then b = x^0..; columns by ascending exponent, one per V1
// exponent and two per V2 exponent (the ap part, then the bq part).
Matrix sigma_I(const Poly& p, const Poly& q, const SubresultantFrame& frame);
// Doubly extended version with a0 and b0 rows and two columns per V0 exponent.
Matrix sigma_I_extended(const Poly& p, const Poly& q, const SubresultantFrame& frame);

// v x v matrix (alpha_j^i), i < v, j in L.
Matrix ev_matrix(const std::vector<Gf>& alphas, const Layer& L);
// Rows a0 = x^e (e in V0) then b = x^s (s < m-k); columns ev_L then V2.
Matrix eta_I(const std::vector<Gf>& alphas, const Layer& L, const Poly& q, const SubresultantFrame& frame);

struct ShIdentity {
  Gf lhs;  // det(ev_L) det(sigma_I)
  Gf rhs;  // p0^(m-v) det(eta_I)
  int sign = 0;  // lhs = sign * rhs; 0 when neither sign matches
  bool holds() const { return sign != 0; }
};

// p = prod_{j in L}(x - alpha_j), q = prod_{j<k}(x - alpha_j).
ShIdentity sh_identity(const std::vector<Gf>& alphas, const Layer& L, int k, const std::vector<int>& I);
bool sh_identity_check(const std::vector<Gf>& alphas, const Layer& L, int k, const std::vector<int>& I);

}  // namespace johnson
