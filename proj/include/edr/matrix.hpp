#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "edr/euclidean.hpp"
#include "edr/ring.hpp"

namespace edr {

/// Dense row-major matrix over one ring.
class Matrix {
 public:
  Matrix() : Matrix(Ring::Int, 0, 0) {}
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  /// Throws RingMismatch on mixed rings and InvalidArgument on a bad count.
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(Ring ring, std::size_t n);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<Element>>& rows);

  Ring ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  std::vector<Element> diagonal() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

Matrix operator*(const Matrix& lhs, const Matrix& rhs);

/// Cofactor expansion. Throws NotSquare.
Element matrix_det(const Matrix& a);

struct HermiteResult {
  Matrix P;
  Matrix T;  // P * A == T, upper triangular (row echelon)
};

/// Row-reduces with 2x2 rotations [[alpha, beta], [-cg, cf]] built from gcd
/// certificates of column entries.
HermiteResult hermite_triangularize(const Matrix& a);

/// Invertible matrix whose first row is the given unimodular row.
/// Throws NotUnimodular.
Matrix complete_unimodular_row(std::span<const Element> row);

struct DiagonalReduction {
  Matrix P;
  Matrix Q;
  Matrix D;  // P * A * Q == D
  std::size_t passes = 0;
};

/// Intermediate data of the 2x2 construction, exposed for checking.
struct TwoByTwoTrace {
  Matrix triangular;                    // Hermite form [[a, b], [0, c]]
  Element scale;                        // gcd of the triangular entries
  KaplanskyPair pq;                     // condition (K) witness after scaling
  std::array<Element, 2> unimodular_row;  // first row of P1 * (triangular / scale)
};

/// Diagonalizes a 2x2 matrix through the Kaplansky condition.
DiagonalReduction diagonalize_2x2(const Matrix& a, TwoByTwoTrace* trace = nullptr);

inline constexpr std::size_t kDefaultPassCap = 256;

/// Thrown by diagonal_reduce when the pass budget runs out; carries the
/// transforms accumulated so far and the current (non-diagonal) matrix.
class ReductionCapExceeded : public Error {
 public:
  ReductionCapExceeded(std::size_t passes, DiagonalReduction partial);
  const DiagonalReduction& partial() const noexcept { return partial_; }

 private:
  DiagonalReduction partial_;
};

/// Diagonal form with divisibility chain and canonical diagonal entries.
DiagonalReduction diagonal_reduce(const Matrix& a, std::size_t cap = kDefaultPassCap);

/// Independent check of every DiagonalReduction invariant by recomputation.
bool verify_reduction(const Matrix& a, const DiagonalReduction& red);

}  // namespace edr
