#ifndef FACTHOM_MATRIX_HPP
#define FACTHOM_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facthom/field.hpp"

namespace facthom {

/// One nonzero entry of a sparse row or vector.
struct Entry {
  std::size_t index;
  Scalar value;
};

/// Sparse vector: entries sorted by index, no explicit zeros.
using SparseVector = std::vector<Entry>;

/**
 * Matrix over a Field with dense semantics and row-sparse storage.
 *
 * Rows hold their nonzero entries sorted by column. All values are kept
 * reduced into the field, so structural equality is value equality.
 */
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::size_t cols);

  static ExactMatrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  static ExactMatrix identity(Field field, std::size_t n);
  /// Row-major literal; values are reduced into the field.
  static ExactMatrix from_rows(Field field, const std::vector<std::vector<long>>& rows);
  static ExactMatrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  /// entry(r, c) += value
  void add_to(std::size_t r, std::size_t c, const Scalar& value);
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  /// Replaces row r; `entries` must be sorted, reduced and zero-free.
  void set_row(std::size_t r, SparseVector entries);
  /// Column c as a sparse vector (O(nonzeros)).
  SparseVector column(std::size_t c) const;

  bool is_zero() const;
  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix scaled(const Scalar& s) const;
  bool operator==(const ExactMatrix& rhs) const;

  /// Kronecker product, left factor major: (A ⊗ B)[i*p + k, j*q + l] = A[i,j] B[k,l].
  ExactMatrix kron(const ExactMatrix& rhs) const;
  /// [this | rhs]
  ExactMatrix hstack(const ExactMatrix& rhs) const;
  /// [this ; rhs]
  ExactMatrix vstack(const ExactMatrix& rhs) const;

  std::vector<std::vector<Scalar>> to_dense() const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseVector> data_;
};

/**
 * Incremental row echelon form over a field.
 *
 * Each stored vector has a distinct leading index and leading coefficient 1.
 * `insert` reduces a vector against the stored pivots and keeps the residual
 * if it is nonzero, so `rank()` is the dimension of the span inserted so far.
 */
class Echelon {
 public:
  Echelon(Field field, std::size_t length);

  /// Returns true iff the vector was independent of the current span.
  bool insert(SparseVector v);
  /// Residual of v modulo the current span (zero iff v lies in it).
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return count_; }
  std::size_t length() const { return length_; }
  /// Leading indices of the stored vectors, increasing.
  std::vector<std::size_t> pivots() const;

 private:
  Field field_;
  std::size_t length_;
  std::size_t count_ = 0;
  std::vector<SparseVector> by_lead_;  // by_lead_[i] is empty unless i is a pivot
};

/// Rank over the matrix's field.
std::size_t rank(const ExactMatrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// True iff column vector v lies in the column span of m.
bool in_column_span(const ExactMatrix& m, const SparseVector& v);

/// Sparse vector helpers. All take and return field-reduced entries.
SparseVector axpy(const Field& field, const SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector sparse_from_dense(const Field& field, const std::vector<Scalar>& dense);

}  // namespace facthom

#endif
