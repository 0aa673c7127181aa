#include "csgp/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace csgp {

std::uint64_t hash_pattern(int n, const std::vector<int>& col_ptr,
                           const std::vector<int>& row_idx) {
  // FNV-1a over the structure arrays.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(n));
  for (int v : col_ptr) mix(static_cast<std::uint64_t>(v));
  for (int v : row_idx) mix(static_cast<std::uint64_t>(v));
  return h;
}

void validate_structure(const SparseSymMatrix& a) {
  if (a.n < 0) throw StructuralError("negative matrix order");
  if (static_cast<int>(a.col_ptr.size()) != a.n + 1)
    throw StructuralError("column pointer array has wrong length");
  if (a.col_ptr.front() != 0 ||
      a.col_ptr.back() != static_cast<int>(a.row_idx.size()))
    throw StructuralError("column pointers inconsistent with entry count");
  if (a.row_idx.size() != a.values.size())
    throw StructuralError("row index / value length mismatch");
  for (int j = 0; j < a.n; ++j) {
    const int begin = a.col_ptr[j];
    const int end = a.col_ptr[j + 1];
    if (begin > end) throw StructuralError("column pointers not monotone");
    if (begin == end || a.row_idx[begin] != j)
      throw StructuralError("missing diagonal entry in column " +
                            std::to_string(j));
    for (int p = begin; p < end; ++p) {
      const int i = a.row_idx[p];
      if (i < j || i >= a.n)
        throw StructuralError("row index out of range in column " +
                              std::to_string(j));
      if (p > begin && a.row_idx[p - 1] >= i)
        throw StructuralError("row indices not strictly increasing in column " +
                              std::to_string(j));
    }
  }
}

void SparseSymMatrix::finalize() {
  validate_structure(*this);
  pattern_id = hash_pattern(n, col_ptr, row_idx);
}

int SparseSymMatrix::find_lower(int row, int col) const {
  const auto begin = row_idx.begin() + col_ptr[col];
  const auto end = row_idx.begin() + col_ptr[col + 1];
  const auto it = std::lower_bound(begin, end, row);
  if (it == end || *it != row) return -1;
  return static_cast<int>(it - row_idx.begin());
}

double SparseSymMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw DimensionError("index out of range");
  if (i < j) std::swap(i, j);
  const int p = find_lower(i, j);
  return p < 0 ? 0.0 : values[p];
}

Eigen::VectorXd SparseSymMatrix::diag() const {
  Eigen::VectorXd d(n);
  for (int j = 0; j < n; ++j) d[j] = values[col_ptr[j]];
  return d;
}

Eigen::MatrixXd SparseSymMatrix::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int p = col_ptr[j]; p < col_ptr[j + 1]; ++p) {
      m(row_idx[p], j) = values[p];
      m(j, row_idx[p]) = values[p];
    }
  }
  return m;
}

Eigen::VectorXd SparseSymMatrix::multiply(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != n) throw DimensionError("matvec size mismatch");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    const double xj = x[j];
    double acc = 0.0;
    for (int p = col_ptr[j]; p < col_ptr[j + 1]; ++p) {
      const int i = row_idx[p];
      const double v = values[p];
      y[i] += v * xj;
      if (i != j) acc += v * x[i];
    }
    y[j] += acc;
  }
  return y;
}

double SparseSymMatrix::quad_form(
    const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != n) throw DimensionError("quad_form size mismatch");
  double s = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int p = col_ptr[j]; p < col_ptr[j + 1]; ++p) {
      const int i = row_idx[p];
      const double term = values[p] * x[i] * x[j];
      s += (i == j) ? term : 2.0 * term;
    }
  }
  return s;
}

void SparseSymMatrix::dump_coord(std::ostream& os) const {
  os << n << " " << nnz_lower() << "\n";
  for (int j = 0; j < n; ++j)
    for (int p = col_ptr[j]; p < col_ptr[j + 1]; ++p)
      os << row_idx[p] << " " << j << " " << values[p] << "\n";
}

SparseSymMatrix SparseSymMatrix::parse_coord(std::istream& is) {
  int n = 0, nnz = 0;
  if (!(is >> n >> nnz)) throw DataError("coordinate dump: bad header");
  std::vector<std::tuple<int, int, double>> trip;
  trip.reserve(nnz);
  int i, j;
  double v;
  while (is >> i >> j >> v) trip.emplace_back(i, j, v);
  if (static_cast<int>(trip.size()) != nnz)
    throw DataError("coordinate dump: entry count mismatch");
  return from_triplets(n, trip);
}

SparseSymMatrix SparseSymMatrix::from_triplets(
    int n, const std::vector<std::tuple<int, int, double>>& entries) {
  std::map<std::pair<int, int>, double> acc; // (col, row), lower triangle
  for (const auto& [i, j, v] : entries) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw StructuralError("triplet index out of range");
    const int r = std::max(i, j);
    const int c = std::min(i, j);
    acc[{c, r}] += v;
  }
  SparseSymMatrix a;
  a.n = n;
  a.col_ptr.assign(n + 1, 0);
  // Diagonal is always stored.
  for (int j = 0; j < n; ++j) acc.try_emplace({j, j}, 0.0);
  for (const auto& [key, v] : acc) a.col_ptr[key.first + 1]++;
  for (int j = 0; j < n; ++j) a.col_ptr[j + 1] += a.col_ptr[j];
  a.row_idx.resize(acc.size());
  a.values.resize(acc.size());
  std::vector<int> cursor(a.col_ptr.begin(), a.col_ptr.end() - 1);
  for (const auto& [key, v] : acc) {
    const int p = cursor[key.first]++;
    a.row_idx[p] = key.second;
    a.values[p] = v;
  }
  a.finalize();
  return a;
}

SparseSymMatrix SparseSymMatrix::diagonal(const Eigen::VectorXd& d) {
  SparseSymMatrix a;
  a.n = static_cast<int>(d.size());
  a.col_ptr.resize(a.n + 1);
  a.row_idx.resize(a.n);
  a.values.resize(a.n);
  for (int j = 0; j < a.n; ++j) {
    a.col_ptr[j] = j;
    a.row_idx[j] = j;
    a.values[j] = d[j];
  }
  a.col_ptr[a.n] = a.n;
  a.finalize();
  return a;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.perm.resize(n);
  p.inv.resize(n);
  for (int i = 0; i < n; ++i) p.perm[i] = p.inv[i] = i;
  return p;
}

Permutation Permutation::from_forward(std::vector<int> fwd) {
  Permutation p;
  p.perm = std::move(fwd);
  const int n = static_cast<int>(p.perm.size());
  p.inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const int o = p.perm[i];
    if (o < 0 || o >= n || p.inv[o] != -1)
      throw StructuralError("permutation is not a bijection");
    p.inv[o] = i;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

void validate_permutation(const Permutation& p, int n) {
  if (p.size() != n || static_cast<int>(p.inv.size()) != n)
    throw StructuralError("permutation size mismatch");
  for (int i = 0; i < n; ++i) {
    if (p.perm[i] < 0 || p.perm[i] >= n || p.inv[p.perm[i]] != i)
      throw StructuralError("permutation inverse inconsistent");
  }
}

} // namespace csgp
