#include "syzgap/linalg.hpp"

namespace syzgap {

Echelon::Echelon(const FieldSpec& field, std::size_t cols)
    : f_(field), cols_(cols), row_of_col_(cols, -1) {}

bool Echelon::reduce(std::vector<Elem>& v) const {
  if (v.size() != cols_) throw Error("vector length differs from echelon width");
  bool zero = true;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    long r = row_of_col_[c];
    if (r < 0) {
      zero = false;
      continue;
    }
    const auto& row = rows_[static_cast<std::size_t>(r)];
    Elem factor = f_.neg(v[c]);
    for (std::size_t k = c; k < cols_; ++k) {
      if (row[k] != 0) v[k] = f_.fma(factor, row[k], v[k]);
    }
  }
  return zero;
}

bool Echelon::insert(std::vector<Elem> v) {
  if (reduce(v)) return false;
  std::size_t p = 0;
  while (v[p] == 0) ++p;
  // Columns before p are zero: either eliminated or never nonzero.
  Elem inv = f_.inv(v[p]);
  for (std::size_t k = p; k < cols_; ++k) v[k] = f_.mul(v[k], inv);
  row_of_col_[p] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const FieldSpec& f, Matrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(sel, k), m.at(r, k));
    Elem inv = f.inv(m.at(r, c));
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = f.mul(m.at(r, k), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Elem factor = f.neg(m.at(i, c));
      for (std::size_t k = c; k < m.cols; ++k) {
        if (m.at(r, k) != 0) m.at(i, k) = f.fma(factor, m.at(r, k), m.at(i, k));
      }
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(const FieldSpec& field, const Matrix& m) {
  Echelon e(field, m.cols);
  for (std::size_t r = 0; r < m.rows && e.rank() < m.cols; ++r) {
    e.insert(std::vector<Elem>(m.data.begin() + static_cast<long>(r * m.cols),
                               m.data.begin() + static_cast<long>((r + 1) * m.cols)));
  }
  return e.rank();
}

std::vector<std::vector<Elem>> kernel(const FieldSpec& field, Matrix m) {
  auto piv = rref(field, m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<Elem> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = field.neg(m.at(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Elem>> solve(const FieldSpec& field, Matrix m, const std::vector<Elem>& b) {
  if (b.size() != m.rows) throw Error("right-hand side length differs from row count");
  Matrix aug(m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  auto piv = rref(field, aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<Elem> x(m.cols, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, m.cols);
  return x;
}

}  // namespace syzgap
