#pragma once

// Delzant polytopes P = { u : <u, v_i> >= a_i, i = 1..m } given by primitive
// inward facet normals v_i in Z^n and rational offsets a_i.

#include "toricsym/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsym {

/// Sorted list of 0-based facet indices.
using FacetSet = std::vector<std::size_t>;

/// Unvalidated polytope description as read from input.
struct RawPolytope {
  std::size_t n = 0;
  std::vector<IntVector> normals;
  std::vector<Rational> offsets;
  std::string name;

  bool operator==(const RawPolytope &) const = default;
};

enum class ViolationKind {
  NonPrimitiveNormal,
  Unbounded,
  Empty,
  RedundantInequality,
  NonSimpleVertex,
  NonUnimodularVertex,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  FacetSet facets;        // offending facet(s), 0-based
  Integer determinant{0}; // NonUnimodularVertex only
  RatCovector point;      // vertex coordinates, when relevant
  std::string message;    // 1-based, human readable
};

class InvalidPolytope : public std::runtime_error {
public:
  explicit InvalidPolytope(std::vector<Violation> violations);
  const std::vector<Violation> &violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

struct Vertex {
  FacetSet active;    // exactly n facets for a simple vertex
  RatCovector coords; // exact point in H^2(BT; Q)
};

/// A validated Delzant polytope.  Only obtainable through validate().
class DelzantPolytope {
public:
  std::size_t n() const { return raw_.n; }
  std::size_t m() const { return raw_.normals.size(); }
  const IntVector &normal(std::size_t i) const { return raw_.normals[i]; }
  const Rational &offset(std::size_t i) const { return raw_.offsets[i]; }
  const std::vector<IntVector> &normals() const { return raw_.normals; }
  const std::vector<Rational> &offsets() const { return raw_.offsets; }
  const std::string &name() const { return raw_.name; }
  const RawPolytope &raw() const { return raw_; }
  /// n x m matrix with columns v_1, ..., v_m.
  const IntMatrix &normal_matrix() const { return normal_matrix_; }
  /// Vertices with their active sets, in lexicographic order of active set.
  const std::vector<Vertex> &vertices() const { return vertices_; }

  /// <covector, v_i> for every facet i.
  IntVector pairings(std::span<const Integer> covector) const;

private:
  friend DelzantPolytope validate(const RawPolytope &);
  DelzantPolytope(RawPolytope raw, std::vector<Vertex> vertices);

  RawPolytope raw_;
  IntMatrix normal_matrix_;
  std::vector<Vertex> vertices_;
};

/// Lists every violated Delzant condition; empty means valid.
std::vector<Violation> check(const RawPolytope &raw);

/// Returns the validated polytope or throws InvalidPolytope carrying every
/// violation found.
DelzantPolytope validate(const RawPolytope &raw);

/// Brute-force vertex enumeration over all n-subsets of facets.  Points are
/// merged by coordinates, so a non-simple vertex shows up with more than n
/// active facets.  Works on unvalidated input.
std::vector<Vertex> enumerate_vertices(const RawPolytope &raw);

/// True iff { u : <u, v_i> >= 0 for all i } = {0}.
bool normals_positively_span(std::size_t n, std::span<const IntVector> normals);

struct FaceStructure {
  std::vector<Vertex> vertices;
  std::vector<FacetSet> minimal_nonfaces;
  /// f_vector[k] = number of k-dimensional faces, k = 0..n (f_n = 1).
  std::vector<Integer> f_vector;
};

std::vector<FacetSet> minimal_nonfaces(const DelzantPolytope &p);
std::vector<Integer> f_vector(const DelzantPolytope &p);
/// h_k with sum_k h_k t^k = sum_i f_i (t - 1)^i; h_k = rank H^{2k}(M).
std::vector<Integer> h_vector(const DelzantPolytope &p);
FaceStructure face_structure(const DelzantPolytope &p);

/// True iff the given facets meet in a nonempty face.
bool is_face(const DelzantPolytope &p, const FacetSet &facets);

/// Product polytope: normals block-concatenated, offsets concatenated.
RawPolytope product(const RawPolytope &a, const RawPolytope &b);

} // namespace toricsym
