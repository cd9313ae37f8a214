#pragma once

// Cohomology presentations, moment-angle data and the G_max descriptor.

#include "toricsym/lattice.hpp"
#include "toricsym/polytope.hpp"
#include "toricsym/rootsys.hpp"
#include "toricsym/symmetry.hpp"

#include <string>
#include <vector>

namespace toricsym {

enum class CohomologyMode { Equivariant, Ordinary };

struct CohomologyPresentation {
  CohomologyMode mode = CohomologyMode::Ordinary;
  std::vector<std::string> generators; // tau_i or mu_i, all of degree 2
  /// One square-free monomial prod_{i in I} x_i = 0 per minimal nonface I.
  std::vector<FacetSet> monomial_relations;
  /// Ordinary mode: row k holds the coefficients <e_k^*, v_i> of the linear
  /// relation sum_i <e_k^*, v_i> mu_i = 0.  Empty in equivariant mode.
  IntMatrix linear_relations;
  /// Ordinary mode: rank H^{2k}(M) = h_k.
  std::vector<Integer> betti;
  /// Ordinary mode: generators identified in H^2(M), one group per factor
  /// index set I(Phi).
  std::vector<FacetSet> identified_generators;
};

CohomologyPresentation cohomology(const DelzantPolytope &p,
                                  const std::vector<FacetSet> &nonfaces,
                                  const RootSystem &r, CohomologyMode mode);

struct ZpRelation {
  /// sum_i quadratic[i] |z_i|^2 = constant, where quadratic = row/2 and
  /// constant = -sum_i row_i a_i.
  RatVector quadratic;
  Rational constant;
};

struct MomentAngleData {
  /// (m - n) x m, rows span Ker pi_* in Hermite normal form.
  IntMatrix kernel_basis;
  std::vector<ZpRelation> zp_relations;
  /// Same lattice read multiplicatively: prod_i g_i^{B_{k,i}} parametrises
  /// the subtorus Ker V of (S^1)^m.
  IntMatrix kerv_exponents;
};

MomentAngleData moment_angle(const DelzantPolytope &p);

struct GmaxDescriptor {
  std::vector<FacetSet> blocks; // I(Phi_k)
  std::vector<std::size_t> block_sizes;
  FacetSet free_indices;
  Integer identity_component_dim;
  Integer weyl_order;
  Integer component_count;
  bool roots_realized = false;     // Delta(G_max) = R(P), by construction
  bool d_surjective = false;       // every Aut(P) element realized
  std::string summary;
};

GmaxDescriptor gmax_descriptor(const DelzantPolytope &p, const RootSystem &r,
                               const ComponentGroupReport &report);

/// dim G_max^0 recounted as (dim of the Lie algebra of the block group
/// prod U(r_k) x T^free, counted entry by entry) - dim Ker V.
Integer recount_identity_dim(const DelzantPolytope &p, const RootSystem &r,
                             const MomentAngleData &ma);

} // namespace toricsym
