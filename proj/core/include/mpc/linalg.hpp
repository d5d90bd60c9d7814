#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "mpc/field.hpp"

namespace mpc {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field. Zero-row and zero-column
/// matrices are ordinary values: their rank is 0 and products through an empty
/// inner dimension are zero maps.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(const Field& field, std::size_t len);
  /// Integer entries mapped into the prime subfield (negatives wrap mod p).
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  /// Raw element codes; used for extension-field fixtures (GF(4): 2 = alpha, 3 = alpha+1).
  static Matrix from_codes(const Field& field, const std::vector<std::vector<Elem>>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  Vec column(std::size_t j) const;

  Matrix transpose() const;
  Matrix row_range(std::size_t first, std::size_t count) const;
  Matrix col_range(std::size_t first, std::size_t count) const;
  Matrix scaled(Elem c) const;
  bool is_zero() const noexcept;

  /// y = M * x. Throws ShapeError on length mismatch.
  Vec apply(std::span<const Elem> x) const;
  /// Same as apply() without the shape check, writing into out (size rows()).
  void apply_into(std::span<const Elem> x, std::span<Elem> out) const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Matrix vstack(std::span<const Matrix> parts);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(std::span<const Matrix> parts);
Matrix block_diag(std::span<const Matrix> parts);

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the first nonzero entry in column order is the
/// pivot, so the output is fully deterministic.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : M x = 0}; one column per free variable.
Matrix nullspace_basis(const Matrix& m);
/// Nonzero rows of rref(M).
Matrix row_basis(const Matrix& m);
/// Greedy subset of the rows of M that is a basis of its row space; keeps the
/// original rows (so a full-row-rank M maps to itself).
Matrix independent_rows(const Matrix& m);
/// T such that stack(Y, T) is invertible: unit rows at the non-pivot columns of
/// rref(Y). Throws DependentRows if the rows of Y are dependent.
Matrix complete_to_invertible(const Matrix& y);
/// Throws Singular.
Matrix inverse(const Matrix& m);
/// Some x with M x = b; throws Inconsistent.
Vec solve(const Matrix& m, std::span<const Elem> b);
/// R with R * B = A; throws NotInRowSpace.
Matrix express_rows(const Matrix& a, const Matrix& b);
/// Full-row-rank matrix whose null space is exactly the column span of W.
Matrix left_annihilator(const Matrix& w);
bool same_row_space(const Matrix& a, const Matrix& b);

/// Pre-factored solver for repeated right-hand sides against one matrix.
class LinearSolver {
 public:
  explicit LinearSolver(const Matrix& a);

  std::size_t rank() const noexcept { return rank_; }
  /// Solution with free variables set to zero, or nullopt when inconsistent.
  std::optional<Vec> solve(std::span<const Elem> b) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t rank_;
  Matrix transform_;  // transform * A = rref(A)
  std::vector<std::size_t> pivots_;
};

// Vector helpers over a field.
Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a);
bool vec_is_zero(std::span<const Elem> a) noexcept;
/// Scales a nonzero vector so that its first nonzero entry is 1.
Vec normalize_projective(const Field& f, std::span<const Elem> a);

}  // namespace mpc
