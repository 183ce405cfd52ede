#include "edr/matrix.hpp"

#include <string>
#include <utility>

#include "edr/kaplansky.hpp"

namespace edr {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, zero(ring)) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : ring_(ring), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::InvalidArgument, "entry count does not match dimensions");
  for (const auto& e : entries_)
    if (e.ring() != ring_) throw Error(ErrorCode::RingMismatch, "matrix entries span rings");
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one(ring);
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<Element>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  std::vector<Element> flat;
  flat.reserve(rows.size() * nc);
  for (const auto& row : rows) {
    if (row.size() != nc) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Matrix(ring, rows.size(), nc, std::move(flat));
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

std::vector<Element> Matrix::diagonal() const {
  std::vector<Element> d;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) d.push_back((*this)(i, i));
  return d;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.ring() != rhs.ring()) throw Error(ErrorCode::RingMismatch, "matrix ring mismatch");
  if (lhs.cols() != rhs.rows())
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not chain");
  Matrix out(lhs.ring(), lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Element& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        if (!rhs(k, j).is_zero()) out(i, j) = out(i, j) + a * rhs(k, j);
    }
  return out;
}

Element matrix_det(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one(a.ring());
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Element det = zero(a.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix minor(a.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    Element term = a(0, j) * matrix_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

/// Rows i, j <- [[g00, g01], [g10, g11]] * rows i, j.
void rotate_rows(Matrix& m, std::size_t i, std::size_t j, const Element& g00,
                 const Element& g01, const Element& g10, const Element& g11) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Element ri = m(i, c), rj = m(j, c);
    if (ri.is_zero() && rj.is_zero()) continue;
    m(i, c) = g00 * ri + g01 * rj;
    m(j, c) = g10 * ri + g11 * rj;
  }
}

/// Columns i, j <- columns i, j * [[g00, g01], [g10, g11]].
void rotate_cols(Matrix& m, std::size_t i, std::size_t j, const Element& g00,
                 const Element& g01, const Element& g10, const Element& g11) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Element ci = m(r, i), cj = m(r, j);
    if (ci.is_zero() && cj.is_zero()) continue;
    m(r, i) = ci * g00 + cj * g10;
    m(r, j) = ci * g01 + cj * g11;
  }
}

void apply_block_rows(Matrix& m, std::size_t i, std::size_t j, const Matrix& g) {
  rotate_rows(m, i, j, g(0, 0), g(0, 1), g(1, 0), g(1, 1));
}

void apply_block_cols(Matrix& m, std::size_t i, std::size_t j, const Matrix& g) {
  rotate_cols(m, i, j, g(0, 0), g(0, 1), g(1, 0), g(1, 1));
}

/// Rows r0.. of m <- l * (rows r0.. of m).
void left_multiply_rows(Matrix& m, std::size_t r0, const Matrix& l) {
  Matrix sub = m.block(r0, 0, l.rows(), m.cols());
  Matrix prod = l * sub;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) m(r0 + i, j) = prod(i, j);
}

/// Columns c0.. of m <- (columns c0.. of m) * r.
void right_multiply_cols(Matrix& m, std::size_t c0, const Matrix& r) {
  Matrix sub = m.block(0, c0, m.rows(), r.rows());
  Matrix prod = sub * r;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) m(i, c0 + j) = prod(i, j);
}

void swap_cols(Matrix& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

void scale_col(Matrix& m, std::size_t j, const Element& u) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = m(r, j) * u;
}

Matrix scaled(const Matrix& m, const Element& s) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s;
  return out;
}

Matrix divided(const Matrix& m, const Element& s) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = exact_div(m(i, j), s);
  return out;
}

Element entry_gcd(const Matrix& m) { return gcd_many(m.entries()).d; }

/// Replaces each diagonal entry by its canonical associate, pushing the unit
/// into the column transform.
void normalize_diagonal(Matrix& s, Matrix& q) {
  for (std::size_t i = 0; i < s.rows() && i < s.cols(); ++i) {
    auto [v, u] = canonical_associate(s(i, i));
    if (u == one(s.ring())) continue;
    s(i, i) = v;
    scale_col(q, i, u);
  }
}

}  // namespace

HermiteResult hermite_triangularize(const Matrix& a) {
  const Ring ring = a.ring();
  HermiteResult out{Matrix::identity(ring, a.rows()), a};
  Matrix& t = out.T;
  std::size_t r = 0;
  for (std::size_t j = 0; j < t.cols() && r < t.rows(); ++j) {
    for (std::size_t k = r + 1; k < t.rows(); ++k) {
      if (t(k, j).is_zero()) continue;
      BezoutCertificate cert = gcd_certificate(t(r, j), t(k, j));
      const Element neg_cg = -cert.cg;
      rotate_rows(t, r, k, cert.alpha, cert.beta, neg_cg, cert.cf);
      rotate_rows(out.P, r, k, cert.alpha, cert.beta, neg_cg, cert.cf);
    }
    if (!t(r, j).is_zero()) ++r;
  }
  return out;
}

Matrix complete_unimodular_row(std::span<const Element> row) {
  if (row.empty()) throw Error(ErrorCode::NotUnimodular, "empty row");
  const Ring ring = row[0].ring();
  if (!is_unit(gcd_many(row).d)) throw Error(ErrorCode::NotUnimodular, "row is not unimodular");
  const std::size_t n = row.size();
  if (n == 1) return Matrix(ring, 1, 1, {row[0]});
  if (n == 2) {
    Combination st = comaximal_combination(row[0], row[1]);
    return Matrix(ring, 2, 2, {row[0], row[1], -st.beta, st.alpha});
  }
  // Column-reduce the row to [u, 0, ..., 0] while accumulating the inverse of
  // the column transform; u times its first row is the original row.
  std::vector<Element> cur(row.begin(), row.end());
  Matrix inv = Matrix::identity(ring, n);
  for (std::size_t k = 1; k < n; ++k) {
    if (cur[k].is_zero()) continue;
    BezoutCertificate cert = gcd_certificate(cur[0], cur[k]);
    cur[0] = cert.d;
    cur[k] = zero(ring);
    rotate_rows(inv, 0, k, cert.cf, cert.cg, -cert.beta, cert.alpha);
  }
  for (std::size_t j = 0; j < n; ++j) inv(0, j) = cur[0] * inv(0, j);
  for (std::size_t j = 0; j < n; ++j)
    if (inv(0, j) != row[j]) throw Error(ErrorCode::Internal, "row completion mismatch");
  return inv;
}

DiagonalReduction diagonalize_2x2(const Matrix& a, TwoByTwoTrace* trace) {
  if (a.rows() != 2 || a.cols() != 2)
    throw Error(ErrorCode::InvalidArgument, "diagonalize_2x2 needs a 2x2 matrix");
  const Ring ring = a.ring();
  HermiteResult h = hermite_triangularize(a);
  if (h.T.is_zero())
    return {Matrix::identity(ring, 2), Matrix::identity(ring, 2), h.T, 1};

  const Element g = entry_gcd(h.T);
  const Matrix t = divided(h.T, g);
  const KaplanskyPair pq = kaplansky_solve(t(0, 0), t(0, 1), t(1, 1));

  const std::array<Element, 2> pq_row{pq.p, pq.q};
  const Matrix p1 = complete_unimodular_row(pq_row);
  Matrix b = p1 * t;
  if (trace) *trace = TwoByTwoTrace{h.T, g, pq, {b(0, 0), b(0, 1)}};

  // Column-reduce the unimodular first row to [1, 0].
  const Combination st = comaximal_combination(b(0, 0), b(0, 1));
  Matrix q(ring, 2, 2, {st.alpha, -b(0, 1), st.beta, b(0, 0)});
  b = b * q;
  // Clear the remaining first-column entry.
  const Matrix p2(ring, 2, 2, {one(ring), zero(ring), -b(1, 0), one(ring)});
  b = p2 * b;

  Matrix p = p2 * p1 * h.P;
  Matrix d = scaled(b, g);
  normalize_diagonal(d, q);
  return {std::move(p), std::move(q), std::move(d), 1};
}

ReductionCapExceeded::ReductionCapExceeded(std::size_t passes, DiagonalReduction partial)
    : Error(ErrorCode::CapExceeded,
            "diagonal reduction not achieved within " + std::to_string(passes) + " passes"),
      partial_(std::move(partial)) {}

namespace {

DiagonalReduction reduce_block(const Matrix& a, std::size_t cap) {
  const Ring ring = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0 || a.is_zero())
    return {Matrix::identity(ring, m), Matrix::identity(ring, n), a, 0};

  // Entries of s generate (1) from here on.
  const Element g = entry_gcd(a);
  Matrix s = divided(a, g);
  Matrix p = Matrix::identity(ring, m);
  Matrix q = Matrix::identity(ring, n);
  std::size_t passes = 0;

  while (true) {
    if (passes == cap) throw ReductionCapExceeded(passes, {p, q, scaled(s, g), passes});
    ++passes;

    HermiteResult h = hermite_triangularize(s);
    s = std::move(h.T);
    p = h.P * p;
    if (s(0, 0).is_zero()) {
      // First column vanished; bring a nonzero column to the front.
      std::size_t j = 1;
      while (s(0, j).is_zero()) ++j;
      swap_cols(s, 0, j);
      swap_cols(q, 0, j);
      continue;
    }

    if (m > 1 && n > 1) {
      DiagonalReduction sub;
      try {
        sub = reduce_block(s.block(1, 1, m - 1, n - 1), cap);
      } catch (const ReductionCapExceeded&) {
        // Report the state of this block, which is consistent with p and q.
        throw ReductionCapExceeded(passes, {p, q, scaled(s, g), passes});
      }
      left_multiply_rows(s, 1, sub.P);
      left_multiply_rows(p, 1, sub.P);
      right_multiply_cols(s, 1, sub.Q);
      right_multiply_cols(q, 1, sub.Q);
    }

    bool broken = false;
    for (std::size_t k = 1; k < n && !broken; ++k) {
      if (s(0, k).is_zero()) continue;
      if (auto f = try_exact_div(s(0, k), s(0, 0))) {
        const Element neg = -*f;
        rotate_cols(s, 0, k, one(ring), neg, zero(ring), one(ring));
        rotate_cols(q, 0, k, one(ring), neg, zero(ring), one(ring));
      } else if (k < m) {
        // Embedded 2x2 step on rows/columns {0, k}: enlarges the ideal of s(0, 0).
        const Matrix blk(ring, 2, 2, {s(0, 0), s(0, k), zero(ring), s(k, k)});
        DiagonalReduction red = diagonalize_2x2(blk);
        apply_block_rows(s, 0, k, red.P);
        apply_block_rows(p, 0, k, red.P);
        apply_block_cols(s, 0, k, red.Q);
        apply_block_cols(q, 0, k, red.Q);
        // Row k picks up multiples of the remaining first-row entries.
        for (std::size_t j = k + 1; j < n; ++j)
          if (!s(k, j).is_zero()) broken = true;
      } else {
        BezoutCertificate cert = gcd_certificate(s(0, 0), s(0, k));
        const Element neg_cg = -cert.cg;
        rotate_cols(s, 0, k, cert.alpha, neg_cg, cert.beta, cert.cf);
        rotate_cols(q, 0, k, cert.alpha, neg_cg, cert.beta, cert.cf);
      }
    }
    if (!broken) break;
  }

  // Absorb diagonal pairs until the divisibility chain holds.
  const std::size_t r = std::min(m, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      if (divides(s(i, i), s(j, j))) continue;
      const Matrix blk(ring, 2, 2, {s(i, i), zero(ring), zero(ring), s(j, j)});
      DiagonalReduction red = diagonalize_2x2(blk);
      apply_block_rows(s, i, j, red.P);
      apply_block_rows(p, i, j, red.P);
      apply_block_cols(s, i, j, red.Q);
      apply_block_cols(q, i, j, red.Q);
    }
  normalize_diagonal(s, q);
  return {std::move(p), std::move(q), scaled(s, g), passes};
}

}  // namespace

DiagonalReduction diagonal_reduce(const Matrix& a, std::size_t cap) {
  if (a.rows() == 0 || a.cols() == 0)
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  return reduce_block(a, cap);
}

bool verify_reduction(const Matrix& a, const DiagonalReduction& red) {
  const Ring ring = a.ring();
  const std::size_t m = a.rows(), n = a.cols();
  if (red.P.rows() != m || red.P.cols() != m || red.Q.rows() != n || red.Q.cols() != n ||
      red.D.rows() != m || red.D.cols() != n)
    return false;
  if (red.P.ring() != ring || red.Q.ring() != ring || red.D.ring() != ring) return false;
  if (red.P * a * red.Q != red.D) return false;
  if (!is_unit(matrix_det(red.P)) || !is_unit(matrix_det(red.Q))) return false;
  if (!red.D.is_diagonal()) return false;
  const std::vector<Element> d = red.D.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!divides(d[i], d[i + 1])) return false;
  if (m > 0 && n > 0 && !associates(d[0], gcd_many(a.entries()).d)) return false;
  return true;
}

}  // namespace edr
