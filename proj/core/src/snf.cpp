#include "coverinv/snf.hpp"

#include <stdexcept>
#include <utility>

namespace coverinv {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not agree");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> SmithDecomposition::invariant_factors() const {
  std::vector<BigInt> out;
  const std::size_t d = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < d; ++i)
    if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise pull the offending
      // row into row t and go round again with a smaller remainder.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      add_row(a, t, bad_row, 1);
      add_row(u, t, bad_row, 1);
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  if (u * m * v != a) throw std::logic_error("smith_normal_form: U*M*V != D");
  return SmithDecomposition{std::move(u), std::move(a), std::move(v)};
}

}  // namespace coverinv
