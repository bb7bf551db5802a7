#pragma once

#include <optional>
#include <vector>

#include "syzgap/field.hpp"

namespace syzgap {

/// Dense row-major matrix of raw field codes.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Incrementally built row echelon basis of a subspace of F^cols.
class Echelon {
 public:
  Echelon(const FieldSpec& field, std::size_t cols);

  /// Adds v to the span; returns true when it was independent.
  bool insert(std::vector<Elem> v);
  /// Reduces v against the basis in place; true when v ends up zero.
  bool reduce(std::vector<Elem>& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// Rows normalized so each pivot entry is 1; row k has pivot pivots()[k].
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  const FieldSpec& f_;
  std::size_t cols_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_col_;
};

std::size_t rank(const FieldSpec& field, const Matrix& m);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Elem>> kernel(const FieldSpec& field, Matrix m);

/// Some solution of m v = b, or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve(const FieldSpec& field, Matrix m, const std::vector<Elem>& b);

}  // namespace syzgap
