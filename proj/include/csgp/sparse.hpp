#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "csgp/errors.hpp"

namespace csgp {

/// Symmetric sparse matrix, lower triangle only, compressed sparse column,
/// 0-based indices. Row indices are strictly increasing within each column
/// and the diagonal entry is present in every column. Queries against the
/// upper triangle mirror across the diagonal.
struct SparseSymMatrix {
  int n = 0;
  std::vector<int> col_ptr;   // size n+1
  std::vector<int> row_idx;   // rows >= column, sorted
  std::vector<double> values;
  std::uint64_t pattern_id = 0; // hash of (n, col_ptr, row_idx)

  SparseSymMatrix() = default;

  int nnz_lower() const { return static_cast<int>(row_idx.size()); }

  /// Count of nonzeros of the full symmetric matrix.
  std::int64_t nnz_full() const {
    return 2 * static_cast<std::int64_t>(nnz_lower()) - n;
  }

  /// Full-matrix element access; O(log column) lookup. Zero if not stored.
  double at(int i, int j) const;

  Eigen::VectorXd diag() const;

  /// Position of (row, col) with row >= col in the value array, -1 if absent.
  int find_lower(int row, int col) const;

  Eigen::MatrixXd to_dense() const;

  /// y = A * x using the symmetric expansion of the stored lower triangle.
  Eigen::VectorXd multiply(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// x' * A * x.
  double quad_form(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  /// Coordinate-format text dump (row col value per line, 0-based), used
  /// for test fixtures and debugging.
  void dump_coord(std::ostream& os) const;

  /// Validates structure and computes pattern_id. Call after filling the
  /// arrays by hand; the named constructors below do it for you.
  void finalize();

  /// Builds from (i, j, value) triplets of either triangle; duplicate
  /// entries are summed, mirrored duplicates must agree on value.
  static SparseSymMatrix from_triplets(
      int n, const std::vector<std::tuple<int, int, double>>& entries);

  static SparseSymMatrix diagonal(const Eigen::VectorXd& d);

  static SparseSymMatrix parse_coord(std::istream& is);
};

/// Checks structural invariants (square, sorted rows, full diagonal,
/// in-range indices); throws StructuralError otherwise.
void validate_structure(const SparseSymMatrix& a);

std::uint64_t hash_pattern(int n, const std::vector<int>& col_ptr,
                           const std::vector<int>& row_idx);

/// Row/column permutation. `perm` maps new index -> old index, so the
/// permuted matrix is B(i,j) = A(perm[i], perm[j]).
struct Permutation {
  std::vector<int> perm;
  std::vector<int> inv;

  static Permutation identity(int n);
  static Permutation from_forward(std::vector<int> p);

  int size() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
};

void validate_permutation(const Permutation& p, int n);

} // namespace csgp
