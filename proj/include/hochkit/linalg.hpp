#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "hochkit/cyclotomic.hpp"

namespace hochkit {

using Vector = std::vector<CycScalar>;
using SparseEntry = std::pair<std::size_t, CycScalar>;
/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);
/// y += a * x
void axpy(SparseVector& y, const CycScalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const CycScalar& a);
CycScalar dot(const SparseVector& x, const Vector& y);
bool is_zero(const Vector& v);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static SparseMatrix from_dense(const std::vector<Vector>& rows);
  static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  /// Duplicate (row, col) pairs are summed.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<std::tuple<std::size_t, std::size_t, CycScalar>> t);
  /// Single-entry matrix [c].
  static SparseMatrix scalar(const CycScalar& c);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const SparseVector& row(std::size_t i) const { return data_[i]; }
  const std::vector<SparseVector>& row_data() const noexcept { return data_; }

  CycScalar get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const CycScalar& v);
  std::size_t nnz() const;
  /// lcm of the orders of all entries (1 for the empty matrix).
  unsigned field_order() const;

  SparseMatrix transpose() const;
  SparseMatrix scaled(const CycScalar& c) const;
  CycScalar trace() const;
  bool is_zero() const;
  std::vector<Vector> to_dense() const;

  Vector apply(const Vector& x) const;
  SparseVector apply(const SparseVector& x) const;
  /// Column j as a sparse vector.
  SparseVector column(std::size_t j) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

  /// Coordinate-list dump: header `rows cols field_order`, then one
  /// `(row, col, scalar)` line per stored entry.
  void dump(std::ostream& os) const;
  static SparseMatrix parse_dump(std::istream& is);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

std::ostream& operator<<(std::ostream& os, const SparseMatrix& m);

/// Kronecker product, row index i_a * rows_b + i_b.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b);

struct LinalgOptions {
  /// Above this fill ratio elimination switches to dense storage.
  double dense_threshold = 0.3;
};

/// Row echelon form produced by sparse elimination. Each row has a 1 at its
/// pivot column; when `reduced` is set every pivot column is zero in all
/// other rows.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
  bool reduced = false;
  /// Rows that reduced to entries in columns >= pivot_limit only (an
  /// inconsistent augmented system when the limit marks the right-hand side).
  std::size_t residual_rows = 0;
};

struct EliminationMode {
  bool reduce = false;
  /// Columns at or beyond this index never become pivots.
  std::size_t pivot_limit = static_cast<std::size_t>(-1);
};

/// Gaussian elimination with Markowitz-style pivot choice (fewest nonzeros
/// in the pivot row, then the sparsest column), falling back to dense
/// storage when the input is dense.
Echelon eliminate(std::vector<SparseVector> rows, std::size_t cols, EliminationMode mode = {},
                  const LinalgOptions& options = {});

/// A subspace held as its unique reduced row echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}
  static Subspace span(std::span<const SparseVector> vectors, std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after reduction by the basis (zero iff v is contained).
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Coordinates in the echelon basis, or nullopt when v is not contained.
  std::optional<Vector> coordinates(const SparseVector& v) const;
  /// Adds v to the span; returns false if it was already contained.
  bool insert(SparseVector v);

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const SparseMatrix& m, const LinalgOptions& options = {});
Subspace nullspace(const SparseMatrix& m, const LinalgOptions& options = {});
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b, const LinalgOptions& options = {});

struct Cokernel {
  /// Standard basis vectors of the coordinates that are not pivots of the
  /// column space.
  Subspace complement;
  /// complement_dim x rows(m); projection * m == 0.
  SparseMatrix projection;
  /// rows(m) x complement_dim; projection * lift == identity.
  SparseMatrix lift;
};

Cokernel cokernel_projector(const SparseMatrix& m, const LinalgOptions& options = {});

}  // namespace hochkit
