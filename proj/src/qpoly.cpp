#include "edr/qpoly.hpp"

#include <stdexcept>

namespace edr {

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

mpq_class QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

std::size_t QPoly::lowest_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  throw std::logic_error("lowest_order of zero polynomial");
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpq_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  QPoly r;
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / lead();
  return *this * inv;
}

std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.degree() < g.degree()) return {QPoly(), f};
  std::vector<mpq_class> rem = f.coeffs();
  const int dg = g.degree();
  std::vector<mpq_class> quot(static_cast<std::size_t>(f.degree() - dg + 1));
  const mpq_class& lg = g.lead();
  for (int k = f.degree(); k >= dg; --k) {
    const mpq_class& top = rem[static_cast<std::size_t>(k)];
    if (sgn(top) == 0) continue;
    mpq_class factor = top / lg;
    const auto shift = static_cast<std::size_t>(k - dg);
    for (int j = 0; j <= dg; ++j)
      rem[shift + static_cast<std::size_t>(j)] -= factor * g.coeffs()[static_cast<std::size_t>(j)];
    quot[shift] = factor;
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

}  // namespace edr
