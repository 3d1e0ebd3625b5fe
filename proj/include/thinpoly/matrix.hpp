#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "thinpoly/integer.hpp"

namespace thinpoly {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative shape");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<IntVector>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("from_rows: ragged rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }
  static IntMatrix from_columns(const std::vector<IntVector>& cols) {
    return from_rows(cols).transposed();
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  IntVector row(int i) const {
    IntVector v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
  }
  IntVector column(int j) const {
    IntVector v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }
  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out(r_);
    for (int i = 0; i < r_; ++i) out[i] = row(i);
    return out;
  }
  std::vector<IntVector> column_vectors() const {
    std::vector<IntVector> out(c_);
    for (int j = 0; j < c_; ++j) out[j] = column(j);
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.c_; ++j) m.at(i, j) += aik * b.at(k, j);
      }
    return m;
  }

  IntVector apply(const IntVector& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("apply: size mismatch");
    IntVector out(r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] += at(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  int r_ = 0, c_ = 0;
  IntVector a_;
};

namespace detail {

inline IntMatrix reverse_rows(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(m.rows() - 1 - i, j);
  return out;
}
inline IntMatrix reverse_columns(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, m.cols() - 1 - j);
  return out;
}

// Row-echelon Hermite form: pivots march down-right, each pivot positive,
// entries above a pivot reduced into [0, pivot).  u tracks the row operations.
inline void hermite_upper_inplace(IntMatrix& m, IntMatrix& u) {
  const int rows = m.rows(), cols = m.cols();
  u = IntMatrix::identity(rows);
  auto row_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) m.at(dst, j) -= q * m.at(src, j);
    for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto row_swap = [&](int a, int b) {
    for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto row_negate = [&](int a) {
    for (int j = 0; j < cols; ++j) m.at(a, j) = -m.at(a, j);
    for (int j = 0; j < rows; ++j) u.at(a, j) = -u.at(a, j);
  };

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    while (true) {
      int piv = -1;
      for (int i = r; i < rows; ++i)
        if (m.at(i, c) != 0 && (piv < 0 || abs_int(m.at(i, c)) < abs_int(m.at(piv, c)))) piv = i;
      if (piv < 0) break;
      if (piv != r) row_swap(piv, r);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m.at(i, c) == 0) continue;
        row_sub(i, r, floor_div(m.at(i, c), m.at(r, c)));
        if (m.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0) row_negate(r);
    for (int i = 0; i < r; ++i) row_sub(i, r, floor_div(m.at(i, c), m.at(r, c)));
    ++r;
  }
}

}  // namespace detail

struct HermiteForm {
  IntMatrix h;  // the normal form, h == u * input
  IntMatrix u;  // unimodular row transform
};

// Hermite normal form of the row lattice, lower-triangular profile: pivots
// positive, entries below a pivot reduced into [0, pivot), zero rows first.
// Canonical: any two row-span-equal inputs (e.g. row permutations) agree on h.
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix m = detail::reverse_columns(a);
  IntMatrix u;
  detail::hermite_upper_inplace(m, u);
  return {detail::reverse_rows(detail::reverse_columns(m)), detail::reverse_rows(u)};
}

struct SmithForm {
  IntVector diagonal;  // invariant factors, nonnegative, each dividing the next
  IntMatrix u, v;      // unimodular; u * input * v is diagonal
};

inline SmithForm smith_normal_form(const IntMatrix& a) {
  IntMatrix m = a;
  const int rows = m.rows(), cols = m.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  auto row_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) m.at(dst, j) -= q * m.at(src, j);
    for (int j = 0; j < rows; ++j) u.at(dst, j) -= q * u.at(src, j);
  };
  auto col_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) m.at(i, dst) -= q * m.at(i, src);
    for (int i = 0; i < cols; ++i) v.at(i, dst) -= q * v.at(i, src);
  };
  auto row_swap = [&](int x, int y) {
    for (int j = 0; j < cols; ++j) std::swap(m.at(x, j), m.at(y, j));
    for (int j = 0; j < rows; ++j) std::swap(u.at(x, j), u.at(y, j));
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < rows; ++i) std::swap(m.at(i, x), m.at(i, y));
    for (int i = 0; i < cols; ++i) std::swap(v.at(i, x), v.at(i, y));
  };
  auto row_negate = [&](int x) {
    for (int j = 0; j < cols; ++j) m.at(x, j) = -m.at(x, j);
    for (int j = 0; j < rows; ++j) u.at(x, j) = -u.at(x, j);
  };
  auto row_add = [&](int dst, int src) {
    for (int j = 0; j < cols; ++j) m.at(dst, j) += m.at(src, j);
    for (int j = 0; j < rows; ++j) u.at(dst, j) += u.at(src, j);
  };

  const int n = std::min(rows, cols);
  int t = 0;
  while (t < n) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m.at(i, j) != 0 && (pi < 0 || abs_int(m.at(i, j)) < abs_int(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool rerun = false;
    for (int i = t + 1; i < rows; ++i) {
      if (m.at(i, t) == 0) continue;
      row_sub(i, t, floor_div(m.at(i, t), m.at(t, t)));
      if (m.at(i, t) != 0) rerun = true;
    }
    if (rerun) continue;
    for (int j = t + 1; j < cols; ++j) {
      if (m.at(t, j) == 0) continue;
      col_sub(j, t, floor_div(m.at(t, j), m.at(t, t)));
      if (m.at(t, j) != 0) rerun = true;
    }
    if (rerun) continue;

    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols && divides_all; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          row_add(t, i);  // drags the offending row into column range of the pivot
          divides_all = false;
        }
    if (!divides_all) continue;

    if (m.at(t, t) < 0) row_negate(t);
    ++t;
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (int i = 0; i < n; ++i) out.diagonal[i] = m.at(i, i);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

// Bareiss fraction-free determinant.
inline Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

// v divided by the gcd of its entries, signs preserved.
inline IntVector primitive(IntVector v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  for (Int& x : v) x /= g;
  return v;
}

namespace detail {

// Gauss-Jordan over Rat; returns the pivot column of each pivot row in order.
inline std::vector<int> reduced_row_echelon(std::vector<RatVector>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

// One solution of a x = b over the rationals (free variables set to 0), or
// nullopt when inconsistent.
inline std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_rational: size mismatch");
  const int rows = a.rows(), cols = a.cols();
  std::vector<RatVector> m(rows, RatVector(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
    m[i][cols] = b[i];
  }
  std::vector<int> pivots = detail::reduced_row_echelon(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
  return x;
}

inline std::optional<RatVector> solve_rational(const IntMatrix& a, const IntVector& b) {
  RatVector rb(b.begin(), b.end());
  return solve_rational(a, rb);
}

inline int rank_rational(const IntMatrix& a) {
  std::vector<RatVector> m(a.rows(), RatVector(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  return static_cast<int>(detail::reduced_row_echelon(m).size());
}

inline std::optional<std::vector<RatVector>> rational_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rational_inverse: matrix not square");
  const int n = a.rows();
  std::vector<RatVector> m(n, RatVector(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    m[i][n + i] = 1;
  }
  std::vector<int> pivots = detail::reduced_row_echelon(m);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<RatVector> inv(n, RatVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Basis of the rational right kernel {x : a x = 0}, one vector per free column.
inline std::vector<RatVector> kernel_basis_rational(const IntMatrix& a) {
  const int cols = a.cols();
  std::vector<RatVector> m(a.rows(), RatVector(cols));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = a.at(i, j);
  std::vector<int> pivots = detail::reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVector x(cols);
    x[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -m[k][c];
    basis.push_back(std::move(x));
  }
  return basis;
}

// Columns form a lattice basis of {x in Z^cols : a x = 0}.
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  int rank = 0;
  for (const Int& d : s.diagonal)
    if (d != 0) ++rank;
  IntMatrix out(a.cols(), a.cols() - rank);
  for (int j = rank; j < a.cols(); ++j)
    for (int i = 0; i < a.cols(); ++i) out.at(i, j - rank) = s.v.at(i, j);
  return out;
}

// Nonzero Hermite rows: a canonical basis of the row lattice.
inline IntMatrix row_lattice_basis(const IntMatrix& a) {
  IntMatrix h = hermite_normal_form(a).h;
  std::vector<IntVector> rows;
  for (int i = 0; i < h.rows(); ++i) {
    IntVector r = h.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; })) rows.push_back(std::move(r));
  }
  if (rows.empty()) return IntMatrix(0, a.cols());
  return IntMatrix::from_rows(rows);
}

// Rows form a basis of the saturation (row span of a, intersected with Z^cols):
// with u a v = diag(d), the span is generated by the first rank rows of v^{-1}.
inline IntMatrix saturation_row_basis(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  int rank = 0;
  for (const Int& d : s.diagonal)
    if (d != 0) ++rank;
  auto vinv = rational_inverse(s.v);
  if (!vinv) throw std::logic_error("saturation_row_basis: smith transform not invertible");
  IntMatrix out(rank, a.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = to_int((*vinv)[i][j]);
  return out;
}

}  // namespace thinpoly
