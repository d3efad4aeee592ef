#include "gt/abelian.hpp"

namespace gt {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r.at(i, j) += at(i, k) * other.at(k, j);
      }
    }
  }
  return r;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  // Bareiss fraction-free elimination
  IntMatrix a = *this;
  std::size_t n = rows_;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a.at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return n == 0 ? Int(1) : Int(sign) * a.at(n - 1, n - 1);
}

namespace {

struct SmithState {
  IntMatrix m, u, v;

  SmithState(const IntMatrix& in)
      : m(in), u(IntMatrix::identity(in.rows())), v(IntMatrix::identity(in.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  // row i -= q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= q * m.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
  }

  // col i -= q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, i) -= q * m.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithState s(input);
  const std::size_t rows = input.rows(), cols = input.cols();
  const std::size_t rank_bound = std::min(rows, cols);

  for (std::size_t k = 0; k < rank_bound; ++k) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the remaining block, ties by (row, col)
      bool found = false;
      std::size_t pr = k, pc = k;
      Int best = 0;
      for (std::size_t i = k; i < rows; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          const Int& e = s.m.at(i, j);
          if (e == 0) continue;
          if (!found || abs(e) < best) {
            found = true;
            best = abs(e);
            pr = i;
            pc = j;
          }
        }
      }
      if (!found) {
        k = rank_bound;
        break;
      }
      s.swap_rows(k, pr);
      s.swap_cols(k, pc);

      // one reduction sweep over row and column k; a nonzero remainder means
      // a strictly smaller entry appeared, so re-pick the pivot
      bool remainder = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (s.m.at(i, k) == 0) continue;
        s.add_row(i, k, s.m.at(i, k) / s.m.at(k, k));
        remainder = remainder || s.m.at(i, k) != 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (s.m.at(k, j) == 0) continue;
        s.add_col(j, k, s.m.at(k, j) / s.m.at(k, k));
        remainder = remainder || s.m.at(k, j) != 0;
      }
      if (remainder) continue;

      // the pivot must divide everything that is left, so later invariant
      // factors are automatically multiples of earlier ones; folding a bad
      // row into row k strictly shrinks the eventual gcd
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i) {
        for (std::size_t j = k + 1; j < cols && divides; ++j) {
          if (s.m.at(i, j) % s.m.at(k, k) != 0) {
            s.add_row(k, i, Int(-1));
            divides = false;
          }
        }
      }
      if (divides) break;
    }
    if (k < rank_bound && s.m.at(k, k) < 0) s.negate_row(k);
  }

  return SmithResult{std::move(s.u), std::move(s.m), std::move(s.v)};
}

}  // namespace gt
