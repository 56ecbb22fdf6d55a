#include "barbell/intlat.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "barbell/errors.hpp"

namespace barbell {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "matrix rows have inconsistent lengths");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

void IntMatrix::append_row(std::span<const Int> values) {
  if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = values.size();
  require(values.size() == cols_, "appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(src, c) != 0) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, src) != 0) (*this)(r, dst) += f * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace {

bool smaller_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& D, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < D.rows(); ++i)
    for (std::size_t j = t; j < D.cols(); ++j) {
      if (D(i, j) == 0) continue;
      if (!best || smaller_abs(D(i, j), D(best->first, best->second))) best = {i, j};
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  SmithForm s{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols())};
  IntMatrix& D = s.D;
  const std::size_t lim = std::min(D.rows(), D.cols());

  auto move_pivot = [&](std::size_t i, std::size_t j, std::size_t t) {
    D.swap_rows(t, i);
    s.U.swap_rows(t, i);
    D.swap_cols(t, j);
    s.V.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < lim; ++t) {
    auto start = smallest_entry(D, t);
    if (!start) break;
    move_pivot(start->first, start->second, t);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < D.rows(); ++i)
          if (D(i, t) != 0 && smaller_abs(D(i, t), D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (D(t, j) != 0 && smaller_abs(D(t, j), D(bi, bj))) bi = t, bj = j;
        move_pivot(bi, bj, t);
        continue;
      }
      // Enforce d_t | everything below-right of it.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < D.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      D.add_row_multiple(t, *bad_row, 1);
      s.U.add_row_multiple(t, *bad_row, 1);
    }

    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t lim = std::min(D.rows(), D.cols());
  while (r < lim && D(r, r) != 0) ++r;
  return r;
}

QuotientStructure cokernel_structure(const IntMatrix& relations) {
  QuotientStructure q;
  const SmithForm s = smith_normal_form(relations);
  const std::size_t r = s.rank();
  q.free_rank = relations.cols() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (s.D(i, i) > 1) q.torsion.push_back(s.D(i, i));
  return q;
}

std::size_t rank_over_rationals(const IntMatrix& M) {
  IntMatrix A = M;
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t p = rank;
    while (p < A.rows() && A(p, c) == 0) ++p;
    if (p == A.rows()) continue;
    A.swap_rows(p, rank);
    const Int& piv = A(rank, c);
    for (std::size_t i = rank + 1; i < A.rows(); ++i) {
      const Int lead = A(i, c);
      for (std::size_t j = c + 1; j < A.cols(); ++j) {
        Int v = piv * A(i, j) - lead * A(rank, j);
        mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, c) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

Int determinant(const IntMatrix& M) {
  require(M.rows() == M.cols(), "determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      A.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntMatrix hermite_normal_form(const IntMatrix& M) {
  IntMatrix A = M;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    bool found = false;
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < A.rows(); ++i)
        if (A(i, c) != 0 && (!best || smaller_abs(A(i, c), A(*best, c)))) best = i;
      if (!best) break;
      found = true;
      A.swap_rows(r, *best);
      bool done = true;
      for (std::size_t i = r + 1; i < A.rows(); ++i) {
        if (A(i, c) == 0) continue;
        Int q = A(i, c) / A(r, c);
        A.add_row_multiple(i, r, -q);
        if (A(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (!found) continue;
    if (A(r, c) < 0) A.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), A(i, c).get_mpz_t(), A(r, c).get_mpz_t());
      A.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix H(r, A.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) H(i, j) = A(i, j);
  return H;
}

RowLattice::RowLattice(const IntMatrix& generators)
    : dim_(generators.cols()), basis_(hermite_normal_form(generators)) {
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t c = 0;
    while (basis_(i, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

bool RowLattice::contains(std::span<const Int> v) const {
  require(v.size() == dim_, "lattice membership: vector has wrong length");
  std::vector<Int> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    if (w[p] == 0) continue;
    if (!mpz_divisible_p(w[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return false;
    Int q = w[p] / basis_(i, p);
    for (std::size_t j = p; j < dim_; ++j)
      if (basis_(i, j) != 0) w[j] -= q * basis_(i, j);
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

bool RowLattice::contains_rows(const IntMatrix& M) const {
  for (std::size_t r = 0; r < M.rows(); ++r)
    if (!contains(M.row(r))) return false;
  return true;
}

}  // namespace barbell
