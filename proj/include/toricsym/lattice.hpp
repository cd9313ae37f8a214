#pragma once

// Exact integer and rational linear algebra over GMP.
//
// Vectors are plain std::vector of exact numbers; whether a given vector is
// read as an element of Z^n (a lattice vector) or of (Z^n)* (a covector) is
// fixed by the caller.  The pairing <covector, vector> is the dot product.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toricsym {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using IntCovector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using RatCovector = std::vector<Rational>;

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static IntMatrix from_columns(std::span<const IntVector> columns,
                                std::size_t rows);
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &factor);
  void negate_row(std::size_t r);

  bool operator==(const IntMatrix &) const = default;
  bool operator<(const IntMatrix &o) const;

  const std::vector<Integer> &entries() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
IntVector operator*(const IntMatrix &a, std::span<const Integer> x);

std::string to_string(const IntMatrix &m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);
Integer content(std::span<const Integer> v); // gcd of entries, 0 for zero
bool is_primitive(std::span<const Integer> v);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix &m);
std::size_t rank(const IntMatrix &m);
bool is_unimodular(const IntMatrix &m);

/// Inverse of a square matrix over Q; nullopt when singular.
std::optional<std::vector<RatVector>> rational_inverse(const IntMatrix &m);
/// Integer inverse of a unimodular matrix; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix &m);

struct SmithForm {
  IntMatrix U; // rows x rows, unimodular
  IntMatrix D; // rows x cols, diagonal, d1 | d2 | ...
  IntMatrix V; // cols x cols, unimodular
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

/// U * M * V = D with D in Smith normal form.
SmithForm smith_normal_form(const IntMatrix &m);

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot).  Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix &m);

/// Z-basis of {x in Z^cols : M x = 0}, returned in Hermite normal form.
std::vector<IntVector> integer_kernel_basis(const IntMatrix &m);

/// Solves <alpha, column_i(V)> = target_i for all i.  V must be n x m of rank
/// n; throws std::invalid_argument otherwise.  Returns nullopt when the
/// system has no solution.
std::optional<RatCovector> solve_covector(const IntMatrix &v,
                                          std::span<const Integer> target);
std::optional<RatCovector> solve_covector(const IntMatrix &v,
                                          std::span<const Rational> target);

/// True when every entry has denominator 1.
bool is_integral(std::span<const Rational> v);
IntVector to_integer(std::span<const Rational> v);
RatVector to_rational(std::span<const Integer> v);

/// Canonical text for a rational: "p" or "p/q".
std::string to_string(const Rational &q);
/// Parses "p", "-p", "p/q"; throws std::invalid_argument on bad syntax or a
/// zero denominator.
Rational parse_rational(const std::string &text);

} // namespace toricsym
