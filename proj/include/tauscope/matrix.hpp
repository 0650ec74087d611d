#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "tauscope/scalar.hpp"

namespace tauscope::exactlin {

using Vector = std::vector<Scalar>;

Vector zeroVector(std::size_t n);
Vector unitVector(std::size_t n, std::size_t i);
bool isZero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix fromColumns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> columns() const;

  bool isZero() const;
  bool isSquare() const { return rows_ == cols_; }
  Scalar trace() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const Matrix& b);
  void addBlock(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& factor = Scalar(1));
  Matrix selectColumns(const std::vector<std::size_t>& idx) const;
  Matrix selectRows(const std::vector<std::size_t>& idx) const;
  // Row-major flattening.
  Vector flatten() const { return data_; }

  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix blockDiagonal(const std::vector<Matrix>& blocks);
// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row-echelon form.  Pivot search scans columns left to right and,
// within a column, rows top to bottom.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns span the right null space; one column per free variable, with a 1
// in that free position.
Matrix kernelBasis(const Matrix& m);

// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
// Some X with m X = b (column by column).
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

// Linearly independent columns of m (the pivot columns, in order).
Matrix columnSpaceBasis(const Matrix& m);
// Basis of the row space, as rows (the nonzero rows of rref).
Matrix rowSpaceBasis(const Matrix& m);

// Coordinates with respect to a complement of a subspace U of K^n.  The
// complement is spanned by the standard vectors at the non-pivot positions
// of rref(U^T); `project` (c x n) kills U and `section` (n x c) satisfies
// project * section = 1.
struct QuotientMap {
  Matrix project;
  Matrix section;
  std::size_t dimension() const { return project.rows(); }
};
QuotientMap quotientBy(const Matrix& subspaceColumns, std::size_t ambient);

// Sparse homogeneous system solved by incremental echelon insertion.  Used
// for the large, very sparse intertwining systems behind Hom spaces.
class SparseSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  explicit SparseSystem(std::size_t unknowns) : unknowns_(unknowns), pivotRow_(unknowns, npos) {}

  // Adds the equation sum(coeff * x[col]) = 0.  Entries may repeat columns.
  void addEquation(Row row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t unknowns() const { return unknowns_; }
  // Columns span the solution space; column i is 1 at freeColumns()[i] and
  // 0 at the other free columns.
  Matrix kernelBasis() const;
  std::vector<std::size_t> freeColumns() const;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t unknowns_;
  std::vector<Row> rows_;              // each normalised: leading entry 1
  std::vector<std::size_t> pivotRow_;  // column -> row index or npos
};

}  // namespace tauscope::exactlin
