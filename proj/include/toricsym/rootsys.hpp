#pragma once

// The root system R(P) of a Delzant polytope: integer covectors alpha with
// <alpha, v_i> = 1, <alpha, v_j> = -1 and <alpha, v_k> = 0 otherwise, its
// scalar product, dual reflections, type-A factors and Weyl group.

#include "toricsym/lattice.hpp"
#include "toricsym/polytope.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace toricsym {

struct Root {
  IntCovector alpha;
  std::size_t plus = 0;  // i with <alpha, v_i> = 1
  std::size_t minus = 0; // j with <alpha, v_j> = -1

  bool operator==(const Root &) const = default;
};

struct IrreducibleFactor {
  std::size_t rank = 0;           // r - 1 for type A_{r-1}
  FacetSet index_set;             // I(Phi), size r
  std::vector<std::size_t> roots; // indices into RootSystem::roots
  /// Simple roots, ordered along the A_{r-1} Dynkin path.
  std::vector<std::size_t> simple_roots;
  IntMatrix cartan; // a_{beta,alpha} over simple_roots, equals A_{r-1}

  std::string type() const { return "A" + std::to_string(rank); }
};

struct RootSystem {
  /// Canonical order: lexicographic on (plus, minus).
  std::vector<Root> roots;
  std::vector<IrreducibleFactor> factors;
  /// pairing(a, b) = a_{roots[b], roots[a]} = (roots[a], roots[b]).
  IntMatrix pairing;

  /// Index of the root with the given witness pair, or roots.size().
  std::size_t find(std::size_t plus, std::size_t minus) const;
};

/// (beta, gamma) = sum_l <beta, v_l> <gamma, v_l>.
Integer bilinear(const DelzantPolytope &p, std::span<const Integer> beta,
                 std::span<const Integer> gamma);

/// r_alpha^vee(beta) = beta - (<beta, v_i> - <beta, v_j>) alpha.
IntCovector reflect(const DelzantPolytope &p, const Root &alpha,
                    std::span<const Integer> beta);

/// a_{beta,alpha} = <beta, v_i> - <beta, v_j>; checked against the scalar
/// product (alpha, beta).
Integer cartan(const DelzantPolytope &p, const Root &alpha, const Root &beta);

/// Scans every ordered facet pair (i, j) for a root with that witness pair
/// and returns the complete system with its factors decomposed.
RootSystem compute_roots(const DelzantPolytope &p);

/// Splits R(P) into irreducible factors and certifies each as type A.
/// Throws InvariantViolation with a diagnostic dump on failure.
std::vector<IrreducibleFactor> decompose(const DelzantPolytope &p,
                                         const std::vector<Root> &roots);

/// The standard Cartan matrix of A_rank.
IntMatrix type_a_cartan(std::size_t rank);

/// Product over factors of (rank + 1)!.
Integer weyl_order(const RootSystem &r);

struct WeylElement {
  IntMatrix h2_action; // beta -> h2_action * beta on covectors
  IntMatrix h2_dual;   // the dual action on H_2 (transpose of h2_action)
  std::vector<std::size_t> word;              // generating roots, applied right to left
  std::vector<std::size_t> facet_permutation; // h2_dual * v_l = v_{perm[l]}
};

class WeylOrderTooLarge : public std::runtime_error {
public:
  WeylOrderTooLarge(Integer order, Integer cap, std::string formula);
  const Integer &order() const { return order_; }
  const Integer &cap() const { return cap_; }
  const std::string &formula() const { return formula_; }

private:
  Integer order_, cap_;
  std::string formula_;
};

constexpr long kDefaultWeylCap = 1'000'000;

/// "3! * 2!" style description of the Weyl order.
std::string weyl_order_formula(const RootSystem &r);

/// Enumerates the Weyl group by closure under the simple reflections.
/// Elements come in breadth-first order, so words are shortest.
std::vector<WeylElement> weyl_group(const DelzantPolytope &p,
                                    const RootSystem &r,
                                    const Integer &cap = kDefaultWeylCap);

/// H_2 matrix of the reflection r_alpha : v -> v - <alpha, v>(v_i - v_j).
IntMatrix reflection_h2_dual(const DelzantPolytope &p, const Root &alpha);

} // namespace toricsym
