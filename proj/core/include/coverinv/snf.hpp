#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "coverinv/rational.hpp"

namespace coverinv {

/// Dense row-major matrix of unbounded integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Determinant by fraction-free (Bareiss) elimination; square matrices only.
BigInt determinant(const IntMatrix& m);

struct SmithDecomposition {
  IntMatrix left;      // U, rows x rows, unimodular
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, cols x cols, unimodular

  /// Nonzero diagonal entries d1 | d2 | ... (all positive).
  std::vector<BigInt> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

/// U * M * V = D with D diagonal, nonnegative, and each nonzero entry dividing
/// the next. The identity is re-verified before returning.
SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace coverinv
