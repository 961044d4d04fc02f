#pragma once

#include <optional>
#include <string>
#include <vector>

#include "johnson/combinat.hpp"
#include "johnson/matrix.hpp"

namespace johnson {

struct JgcSpec {
  std::string family = "JGC";
  int n = 0, v = 0, k = 0, t = 0, r = 0;
  const GaloisField* field = nullptr;
  Matrix base;   // k x n generator of the base code C0
  Matrix basis;  // n x n invertible; first k rows are `base`
  VertexOrder order;
  std::vector<Layer> vertices;     // coordinate order
  std::vector<Layer> basis_index;  // row labels: |I & {0..k-1}| >= t
  Matrix generator;
  std::vector<Gf> alphas;  // evaluation points, RS family only

  Eigen::Index dim() const { return generator.rows(); }
  Eigen::Index length() const { return static_cast<Eigen::Index>(vertices.size()); }
};

// Extends a full-rank k x n matrix by unit rows to an invertible n x n one.
Matrix complete_basis(const Matrix& base);

// Threshold t = 0 gives the full space; any t > min(v,k) gives the zero code
// (stored as t = min(v,k)+1).
JgcSpec construct(const Matrix& base, int v, int t, VertexOrder order);
JgcSpec construct(const Matrix& base, int v, int t);  // klex(k)
JgcSpec construct(const GaloisField& F, const Matrix& base, int v, int t, VertexOrder order);

enum class AnchorStatus { Pass, Fail, NotBaseInfoSet };

struct AnchorResult {
  Layer anchor;
  AnchorStatus status;
  Eigen::Index rank;
};

struct InfosetReport {
  std::vector<AnchorResult> anchors;
  bool all_pass() const;  // every base information set passes
  std::vector<Layer> failing() const;  // anchors that do not pass, skipped ones included
};

InfosetReport certify_infosets(const JgcSpec& code);

// Codeword equal to 1 at L and zero on the rest of B_r(A0).
RowVector unit_codeword(const JgcSpec& code, const Layer& A0, const Layer& L);

// Codes built on the dual base code. `dual` keeps the primal's vertex order;
// the signed codes live on J(n, n-v) in klex order of their own base.
JgcSpec dual(const JgcSpec& code);
JgcSpec signed_dual(const JgcSpec& code);
JgcSpec signed_primal(const JgcSpec& code);

// Sum over L of sign(L) c_L d_{L^c}; c indexed by `cv`, d by `dv`.
Gf signed_pairing(const RowVector& c, const std::vector<Layer>& cv, const RowVector& d,
                  const std::vector<Layer>& dv);

struct ParityRow {
  Layer pivot;
  int block = 0;
  std::vector<Layer> support;
  std::vector<Gf> coefficients;
  std::vector<Eigen::Index> columns;
};

struct ParityStructure {
  Layer anchor;
  std::vector<ParityRow> rows;
  // C(d1 + d2 - 2i, R - i)
  static std::int64_t weight_bound(const GraphParams& g, int block);
};

ParityStructure sparse_parities(const JgcSpec& code, const Layer& A);

// Canonical parity-check matrix: generator of the dual code.
Matrix parity_check(const JgcSpec& code);

using PartialWord = std::vector<std::optional<Gf>>;

class ErasureDecoder {
 public:
  ErasureDecoder(const JgcSpec& code, const Layer& A);
  ErasureDecoder(const JgcSpec& code, const Layer& A, Matrix H);

  RowVector decode(const PartialWord& known, const Vector& syndrome) const;
  const Matrix& parity() const { return H_; }

 private:
  struct Step {
    Eigen::Index position;
    RowVector syndrome_combination;
    std::vector<std::pair<Eigen::Index, Gf>> others;
    Gf pivot;
  };
  RowVector dense_decode(const PartialWord& known, const Vector& syndrome) const;

  const JgcSpec* code_;
  Layer anchor_;
  Matrix H_;
  std::vector<Step> steps_;
  std::vector<bool> in_ball_;
  bool sparse_ok_ = false;
};

RowVector erasure_decode(const JgcSpec& code, const Layer& A, const PartialWord& known, const Vector& syndrome);

std::string descriptor_json(const JgcSpec& code);

}  // namespace johnson
