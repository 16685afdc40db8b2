#pragma once

// Dense linear algebra over the base field K.

#include <optional>
#include <span>
#include <vector>

#include "taudiff/scalar.hpp"

namespace taudiff {

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<FieldElem> row(std::size_t r) const;
  void append_row(std::span<const FieldElem> row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

struct Echelon {
  FieldMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(FieldMatrix m);
std::size_t rank(const FieldMatrix& m);
// One solution of m * x = rhs with free variables set to zero.
std::optional<std::vector<FieldElem>> solve(const FieldMatrix& m, std::span<const FieldElem> rhs);
// Basis of {x : m * x = 0}.
std::vector<std::vector<FieldElem>> nullspace(const FieldMatrix& m);

}  // namespace taudiff
