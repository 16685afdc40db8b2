#include "taudiff/linear.hpp"

namespace taudiff {

std::vector<FieldElem> FieldMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void FieldMatrix::append_row(std::span<const FieldElem> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorKind::ArityMismatch, "row length differs from matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Echelon row_reduce(FieldMatrix m) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // prefer a rational pivot; it keeps fractions in K small
    std::optional<std::size_t> pivot;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      if (!pivot || (m.at(i, c).is_rational() && !m.at(*pivot, c).is_rational())) pivot = i;
    }
    if (!pivot) continue;
    if (*pivot != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(*pivot, j));
    }
    const FieldElem inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const FieldElem factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m.at(r, j).is_zero()) m.at(i, j) -= factor * m.at(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const FieldMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<std::vector<FieldElem>> solve(const FieldMatrix& m, std::span<const FieldElem> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::ArityMismatch, "right-hand side length");
  FieldMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  std::vector<FieldElem> x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;  // inconsistent
    x[e.pivots[k]] = e.reduced.at(k, m.cols());
  }
  return x;
}

std::vector<std::vector<FieldElem>> nullspace(const FieldMatrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> v(m.cols());
    v[free] = FieldElem(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace taudiff
