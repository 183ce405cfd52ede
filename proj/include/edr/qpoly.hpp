#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace edr {

/// Dense univariate polynomial over Q, lowest degree first.
/// Coefficients are kept in lowest terms and the list never ends in a zero,
/// so structural equality is mathematical equality.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);

  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of X^i (zero past the degree).
  mpq_class coeff(std::size_t i) const;
  mpq_class constant_term() const { return coeff(0); }
  /// Leading coefficient; requires a nonzero polynomial.
  const mpq_class& lead() const { return coeffs_.back(); }
  /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
  std::size_t lowest_order() const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const mpq_class& s);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const mpq_class& s) { return lhs *= s; }
  friend QPoly operator*(const mpq_class& s, QPoly rhs) { return rhs *= s; }
  friend bool operator==(const QPoly& lhs, const QPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Monic associate; zero stays zero.
  QPoly monic() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
};

/// Euclidean division f = q*g + r with deg r < deg g. g must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g);

}  // namespace edr
