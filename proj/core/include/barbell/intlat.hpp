#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "barbell/integer.hpp"

namespace barbell {

// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  // Rows must share one length; `cols` is used only when `rows` is empty.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<std::vector<Int>> to_rows() const;

  void append_row(std::span<const Int> values);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += f * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);
  void negate_row(std::size_t r);

  bool is_zero() const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// D = U * M * V with D diagonal, d1 | d2 | ..., nonnegative, and U, V unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;  // count of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& M);

struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next

  friend bool operator==(const QuotientStructure&, const QuotientStructure&) = default;
};

// Z^cols / rowspan(relations)
QuotientStructure cokernel_structure(const IntMatrix& relations);

std::size_t rank_over_rationals(const IntMatrix& M);

// Bareiss determinant of a square matrix.
Int determinant(const IntMatrix& M);

// Reduced row-style Hermite form of the row lattice: zero rows dropped,
// positive pivots, entries above each pivot in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& M);

// Integer row lattice in Z^dim, stored as its Hermite basis.
class RowLattice {
 public:
  explicit RowLattice(const IntMatrix& generators);

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(std::span<const Int> v) const;
  bool contains_rows(const IntMatrix& M) const;

  friend bool operator==(const RowLattice& a, const RowLattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t dim_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace barbell
