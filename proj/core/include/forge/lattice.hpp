#pragma once

// Exact integer linear algebra: dense matrices over Z with arbitrary
// precision entries, Smith/Hermite normal forms, determinants, kernels.

#include <optional>
#include <vector>

#include "forge/errors.hpp"
#include "forge/numeric.hpp"

namespace forge {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_skew_symmetric() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void row_axpy(int dst, int src, const Int& c);  // row[dst] += c*row[src]
  void col_axpy(int dst, int src, const Int& c);
  void negate_row(int i);
  void negate_col(int j);

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

// U*M*V = D with U, V unimodular and D diagonal, nonnegative,
// each diagonal entry dividing the next, zeros trailing.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Z-basis of the left kernel {a : a*M = 0}, primitive vectors with
// positive leading entry, sorted lexicographically.
std::vector<ExponentVec> integer_nullspace(const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int det_int(const IntMatrix& m);

// Inverse of a matrix with |det| = 1; raises not_unimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& b);

// Column-style Hermite form of a nonsingular square matrix: H = M*V with V
// unimodular, H lower triangular with positive diagonal.
IntMatrix hermite_column_form(const IntMatrix& m);

// Membership of v in the column lattice of a nonsingular square matrix,
// decided against its Hermite column form.
bool column_lattice_contains(const IntMatrix& hermite, const std::vector<Int>& v);

Int rank_int(const IntMatrix& m);

}  // namespace forge
