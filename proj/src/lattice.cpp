#include "toricsym/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace toricsym {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long x : r)
      data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns,
                                  std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw std::invalid_argument("IntMatrix::from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("IntMatrix::from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 const Integer &factor) {
  if (factor == 0)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::operator<(const IntMatrix &o) const {
  if (rows_ != o.rows_)
    return rows_ < o.rows_;
  if (cols_ != o.cols_)
    return cols_ < o.cols_;
  return data_ < o.data_;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

IntVector operator*(const IntMatrix &a, std::span<const Integer> x) {
  if (a.cols() != x.size())
    throw std::invalid_argument("IntMatrix * vector: shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      y[i] += a(i, k) * x[k];
  return y;
}

std::string to_string(const IntMatrix &m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto &x : v)
    g = gcd(g, x);
  return g;
}

bool is_primitive(std::span<const Integer> v) { return content(v) == 1; }

Integer determinant(const IntMatrix &m) {
  if (!m.square())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row echelon over Q; returns rank and, optionally, the pivot columns.
std::size_t rational_echelon(std::vector<RatVector> &rows,
                             std::vector<std::size_t> *pivots = nullptr) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && rows[p][c] == 0)
      ++p;
    if (p == nr)
      continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (rows[i][c] == 0)
        continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < nc; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    if (pivots)
      pivots->push_back(c);
    ++r;
  }
  return r;
}

std::vector<RatVector> to_rational_rows(const IntMatrix &m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = m(r, c);
  return rows;
}

// Indices of the first n linearly independent columns of an n x m matrix,
// scanning left to right.
std::vector<std::size_t> independent_columns(const IntMatrix &v) {
  std::vector<std::size_t> chosen;
  std::vector<RatVector> basis; // reduced echelon rows, with pivot positions
  std::vector<std::size_t> basis_pivot;
  for (std::size_t c = 0; c < v.cols() && chosen.size() < v.rows(); ++c) {
    RatVector col(v.rows());
    for (std::size_t r = 0; r < v.rows(); ++r)
      col[r] = v(r, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto p = basis_pivot[b];
      if (col[p] == 0)
        continue;
      Rational f = col[p] / basis[b][p];
      for (std::size_t r = 0; r < col.size(); ++r)
        col[r] -= f * basis[b][r];
    }
    auto it = std::find_if(col.begin(), col.end(),
                           [](const Rational &x) { return x != 0; });
    if (it == col.end())
      continue;
    basis_pivot.push_back(static_cast<std::size_t>(it - col.begin()));
    basis.push_back(std::move(col));
    chosen.push_back(c);
  }
  return chosen;
}

} // namespace

std::size_t rank(const IntMatrix &m) {
  auto rows = to_rational_rows(m);
  return rational_echelon(rows);
}

bool is_unimodular(const IntMatrix &m) {
  if (!m.square())
    throw std::invalid_argument("is_unimodular: matrix not square");
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

std::optional<std::vector<RatVector>> rational_inverse(const IntMatrix &m) {
  if (!m.square())
    throw std::invalid_argument("rational_inverse: matrix not square");
  const std::size_t n = m.rows();
  std::vector<RatVector> a(n, RatVector(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = m(r, c);
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[c], a[p]);
    Rational inv = 1 / a[c][c];
    for (auto &x : a[c])
      x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      inv[r][c] = a[r][n + c];
  return inv;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix &m) {
  if (!m.square() || !is_unimodular(m))
    return std::nullopt;
  auto inv = rational_inverse(m);
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = (*inv)[r][c].get_num();
  return out;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i)
    f.push_back(D(i, i));
  return f;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(nr);
  IntMatrix v = IntMatrix::identity(nc);

  // Moves the smallest nonzero |entry| of the trailing block into (t, t).
  auto place_min_pivot = [&](std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a(i, j) == 0)
          continue;
        if (!found || abs(a(i, j)) < abs(a(bi, bj))) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    if (found) {
      a.swap_rows(t, bi);
      u.swap_rows(t, bi);
      a.swap_cols(t, bj);
      v.swap_cols(t, bj);
    }
    return found;
  };

  std::size_t t = 0;
  for (; t < std::min(nr, nc); ++t) {
    if (!place_min_pivot(t))
      break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a(i, t) == 0)
          continue;
        Integer q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        clean = clean && a(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a(t, j) == 0)
          continue;
        Integer q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        clean = clean && a(t, j) == 0;
      }
      if (!clean) {
        place_min_pivot(t);
        continue;
      }
      // Row t and column t are clear; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v), t};
}

IntMatrix hermite_normal_form(const IntMatrix &m) {
  IntMatrix a = m;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    for (;;) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (a(i, c) != 0 && (best == nr || abs(a(i, c)) < abs(a(best, c))))
          best = i;
      if (best == nr)
        break;
      a.swap_rows(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (a(i, c) == 0)
          continue;
        Integer q = a(i, c) / a(r, c);
        a.add_row_multiple(i, r, -q);
        clear = clear && a(i, c) == 0;
      }
      if (clear)
        break;
    }
    if (a(r, c) == 0)
      continue;
    if (a(r, c) < 0)
      a.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      a.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      out(i, j) = a(i, j);
  return out;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix &m) {
  SmithForm s = smith_normal_form(m);
  const std::size_t nc = m.cols();
  if (s.rank == nc)
    return {};
  IntMatrix k(nc - s.rank, nc);
  for (std::size_t b = s.rank; b < nc; ++b)
    for (std::size_t r = 0; r < nc; ++r)
      k(b - s.rank, r) = s.V(r, b);
  IntMatrix h = hermite_normal_form(k);
  std::vector<IntVector> basis;
  basis.reserve(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r)
    basis.push_back(h.row(r));
  return basis;
}

std::optional<RatCovector> solve_covector(const IntMatrix &v,
                                          std::span<const Rational> target) {
  const std::size_t n = v.rows();
  if (target.size() != v.cols())
    throw std::invalid_argument("solve_covector: target length mismatch");
  auto cols = independent_columns(v);
  if (cols.size() < n)
    throw std::invalid_argument("solve_covector: normal matrix has rank " +
                                std::to_string(cols.size()) + " < " +
                                std::to_string(n));
  // alpha^T S = t_S  <=>  S^T alpha = t_S.
  IntMatrix st(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      st(k, r) = v(r, cols[k]);
  auto inv = rational_inverse(st);
  RatCovector alpha(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      alpha[r] += (*inv)[r][k] * target[cols[k]];
  for (std::size_t c = 0; c < v.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < n; ++r)
      s += alpha[r] * v(r, c);
    if (s != target[c])
      return std::nullopt;
  }
  return alpha;
}

std::optional<RatCovector> solve_covector(const IntMatrix &v,
                                          std::span<const Integer> target) {
  RatVector t = to_rational(target);
  return solve_covector(v, std::span<const Rational>(t));
}

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational &x) { return x.get_den() == 1; });
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto &x : v) {
    if (x.get_den() != 1)
      throw std::invalid_argument("to_integer: non-integral entry " +
                                  x.get_str());
    out.push_back(x.get_num());
  }
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

std::string to_string(const Rational &q) { return q.get_str(); }

Rational parse_rational(const std::string &text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  std::string_view s(text);
  std::string_view sign;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.substr(0, 1);
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational '" + text + "'");
  Integer p{std::string(num)}, q{std::string(den)};
  if (q == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  if (sign == "-")
    p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

} // namespace toricsym
