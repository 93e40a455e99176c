#pragma once

// Dense matrices over GF(2^k) and exact elimination.
//
// Pivoting is deterministic: columns are scanned left to right and the first
// row at or below the current pivot row holding a nonzero entry is chosen.
// Over GF(2) the elimination runs on rows bit-packed into 64-bit words; the
// reduced echelon form is unique, so both paths return identical results.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslie/field.hpp"

namespace reslie {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);
  const Vec& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Matrix-vector product.
  Vec apply(std::span<const Scalar> v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix& operator+=(const Matrix& other);

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  /// Columns of `a` followed by columns of `b`.
  static Matrix hconcat(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

std::string to_string(const Matrix& m);

/// Column span; columns of `basis` are linearly independent.
class SubspaceData {
 public:
  SubspaceData() = default;
  /// Checks independence; throws std::invalid_argument otherwise.
  explicit SubspaceData(Matrix basis);
  static SubspaceData zero(const Field& field, std::size_t ambient);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }
  Vec vector(std::size_t i) const { return basis_.column(i); }

 private:
  struct Trusted {};
  SubspaceData(Matrix basis, Trusted) : basis_(std::move(basis)) {}
  friend SubspaceData nullspace(const Matrix&);
  friend SubspaceData column_space(const Matrix&);
  friend SubspaceData extend_to_basis(const SubspaceData&, const SubspaceData&);
  Matrix basis_;
};

struct RowEchelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
SubspaceData nullspace(const Matrix& m);
/// Basis of the column span made of the pivot columns of `m`.
SubspaceData column_space(const Matrix& m);
/// Some x with a x = b, or nullopt when b is outside the column span.
/// Free variables are set to zero.
std::optional<Vec> solve_linear(const Matrix& a, std::span<const Scalar> b);
/// dim Z - dim B; throws std::logic_error when B is not inside Z.
std::size_t quotient_dim(const SubspaceData& z, const SubspaceData& b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Vectors of `z` (in order) whose classes form a basis of z / b.
SubspaceData extend_to_basis(const SubspaceData& b, const SubspaceData& z);

}  // namespace reslie
