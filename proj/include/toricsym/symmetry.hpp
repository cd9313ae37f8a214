#pragma once

// Aut(P): lattice automorphisms rho of the torus whose pullback maps P onto a
// parallel translate of itself, and the embedding of the Weyl group of R(P).

#include "toricsym/lattice.hpp"
#include "toricsym/polytope.hpp"
#include "toricsym/rootsys.hpp"

#include <cstddef>
#include <vector>

namespace toricsym {

using Permutation = std::vector<std::size_t>;

/// An element of Aut(P), stored as (rho_*, sigma, u0) with
///   rho_*^{-1}(v_i) = v_{sigma(i)}             for all i,
///   a_{sigma(i)} = a_i - <u0, v_{sigma(i)}>    for all i.
/// rho_* acts on H_2 = Z^n (column vectors).  The pullback rho^* on
/// H^2 = (Z^n)^* is its transpose, and rho^*(P) = P + u0.
struct PolytopeAutomorphism {
  IntMatrix rho_star; // H_2 action
  Permutation sigma;
  RatCovector u0;

  IntMatrix pullback() const { return rho_star.transpose(); }
  bool is_identity() const;
};

/// Composite g * h (apply h first): rho_* multiplies, sigma_{gh} = sigma_h o sigma_g.
Permutation compose_sigma(const PolytopeAutomorphism &g,
                          const PolytopeAutomorphism &h);

/// Every element of Aut(P), sorted lexicographically by sigma; the identity
/// comes first.  Group axioms and both defining equations are re-checked.
std::vector<PolytopeAutomorphism> compute_aut(const DelzantPolytope &p);

/// Index of the automorphism with the given sigma, or aut.size().
std::size_t find_by_sigma(const std::vector<PolytopeAutomorphism> &aut,
                          const Permutation &sigma);

struct ComponentGroupReport {
  Integer aut_order;
  Integer weyl_image_order;
  Integer component_count;
  bool weyl_normal_in_aut = false;
  /// Indices into Aut(P) of the Weyl image, in Weyl enumeration order.
  std::vector<std::size_t> weyl_image;
  /// Smallest-sigma representative of each left coset g W, in sigma order.
  std::vector<std::size_t> coset_representatives;
  /// coset_of[k] = position in coset_representatives of Aut element k.
  std::vector<std::size_t> coset_of;
  /// Multiplication table of Aut(P)/W over the representatives; empty when
  /// the image is not normal.
  std::vector<std::vector<std::size_t>> quotient_table;
};

/// Locates every Weyl element in Aut(P) and counts the cosets.  A Weyl
/// element with no matching automorphism throws InvariantViolation.
ComponentGroupReport weyl_embedding(const DelzantPolytope &p,
                                    const RootSystem &r,
                                    const std::vector<WeylElement> &weyl,
                                    const std::vector<PolytopeAutomorphism> &aut);

struct SigmaAction {
  Permutation sigma;
  /// image[k] = sigma applied to minimal nonface k (sorted).
  std::vector<FacetSet> nonface_images;
  bool preserves_nonfaces = false;
};

/// The permutation of the generators mu_i of H^*(M) induced by g, and the
/// check that it maps minimal nonfaces onto minimal nonfaces.  Throws
/// InvariantViolation when that check fails.
SigmaAction induced_sigma_action(const DelzantPolytope &p,
                                 const std::vector<FacetSet> &nonfaces,
                                 const PolytopeAutomorphism &g);

} // namespace toricsym
