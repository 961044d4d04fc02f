#include <istream>
#include <ostream>

#include "johnson/matrix.hpp"

namespace johnson {

Matrix zeros(const GaloisField& F, Eigen::Index rows, Eigen::Index cols) {
  Matrix M(rows, cols);
  M.setConstant(F.zero());
  return M;
}

Matrix identity(const GaloisField& F, Eigen::Index n) {
  Matrix M = zeros(F, n, n);
  for (Eigen::Index i = 0; i < n; ++i) M(i, i) = F.one();
  return M;
}

Matrix from_ints(const GaloisField& F, const std::vector<std::vector<long>>& rows) {
  Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Matrix M(r, c);
  const long q = F.size();
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (Eigen::Index j = 0; j < c; ++j) {
      long x = rows[i][j];
      if (F.degree() == 1) x = ((x % q) + q) % q;
      M(i, j) = F(static_cast<std::uint32_t>(x));
    }
  }
  return M;
}

Matrix random_matrix(const GaloisField& F, Eigen::Index rows, Eigen::Index cols, std::uint64_t& state) {
  Matrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      M(i, j) = F(static_cast<std::uint32_t>((state >> 33) % F.size()));
    }
  return M;
}

Matrix read_matrix(std::istream& in) {
  long rows = 0, cols = 0, q = 0;
  if (!(in >> rows >> cols >> q) || rows < 0 || cols < 0) throw std::runtime_error("bad matrix header");
  const GaloisField& F = GaloisField::get(static_cast<std::uint32_t>(q));
  Matrix M(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      long x;
      if (!(in >> x) || x < 0 || x >= q) throw std::runtime_error("bad matrix entry");
      M(i, j) = F(static_cast<std::uint32_t>(x));
    }
  return M;
}

void write_matrix(std::ostream& out, const Matrix& M) {
  std::uint32_t q = 0;
  for (Eigen::Index i = 0; i < M.size() && !q; ++i)
    if (M.data()[i].field()) q = M.data()[i].field()->size();
  out << M.rows() << ' ' << M.cols() << ' ' << q << '\n';
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) out << (j ? " " : "") << M(i, j).value();
    out << '\n';
  }
}

}  // namespace johnson
