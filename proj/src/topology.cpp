#include "toricsym/topology.hpp"

#include "toricsym/errors.hpp"

#include <algorithm>
#include <sstream>

namespace toricsym {

namespace {

std::string one_based(const FacetSet &s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? "," : "") << s[k] + 1;
  os << '}';
  return os.str();
}

} // namespace

CohomologyPresentation cohomology(const DelzantPolytope &p,
                                  const std::vector<FacetSet> &nonfaces,
                                  const RootSystem &r, CohomologyMode mode) {
  CohomologyPresentation c;
  c.mode = mode;
  const char *stem = mode == CohomologyMode::Equivariant ? "tau" : "mu";
  for (std::size_t i = 0; i < p.m(); ++i)
    c.generators.push_back(stem + std::to_string(i + 1));
  c.monomial_relations = nonfaces;
  if (mode == CohomologyMode::Ordinary) {
    c.linear_relations = p.normal_matrix();
    c.betti = h_vector(p);
    for (const auto &f : r.factors)
      c.identified_generators.push_back(f.index_set);
  } else {
    c.linear_relations = IntMatrix(0, p.m());
  }
  return c;
}

MomentAngleData moment_angle(const DelzantPolytope &p) {
  const auto basis = integer_kernel_basis(p.normal_matrix());
  MomentAngleData ma;
  ma.kernel_basis = IntMatrix::from_rows(basis, p.m());
  const IntMatrix &b = ma.kernel_basis;

  if (b.rows() != p.m() - p.n())
    throw InvariantViolation("Ker pi_* has rank " + std::to_string(b.rows()) +
                             ", expected m - n = " +
                             std::to_string(p.m() - p.n()));
  IntMatrix composite = p.normal_matrix() * b.transpose();
  for (const auto &x : composite.entries())
    if (x != 0)
      throw InvariantViolation("kernel basis does not annihilate the normals",
                               "B = " + to_string(b) + '\n');
  if (b.rows() > 0) {
    auto factors = smith_normal_form(b).invariant_factors();
    if (factors.size() != b.rows() ||
        !std::all_of(factors.begin(), factors.end(),
                     [](const Integer &d) { return d == 1; }))
      throw InvariantViolation("kernel basis is not saturated",
                               "B = " + to_string(b) + '\n');
  }

  for (std::size_t k = 0; k < b.rows(); ++k) {
    ZpRelation rel;
    rel.constant = 0;
    for (std::size_t i = 0; i < p.m(); ++i) {
      rel.quadratic.push_back(Rational(b(k, i), 2));
      rel.quadratic.back().canonicalize();
      rel.constant -= b(k, i) * p.offset(i);
    }
    ma.zp_relations.push_back(std::move(rel));
  }
  ma.kerv_exponents = b;
  return ma;
}

GmaxDescriptor gmax_descriptor(const DelzantPolytope &p, const RootSystem &r,
                               const ComponentGroupReport &report) {
  GmaxDescriptor g;
  std::vector<bool> in_block(p.m(), false);
  std::size_t root_total = 0;
  Integer block_dim = 0;
  for (const auto &f : r.factors) {
    g.blocks.push_back(f.index_set);
    g.block_sizes.push_back(f.index_set.size());
    for (auto i : f.index_set)
      in_block[i] = true;
    const auto rk = f.index_set.size();
    block_dim += Integer(static_cast<unsigned long>(rk * rk));
    root_total += rk * (rk - 1);
  }
  for (std::size_t i = 0; i < p.m(); ++i)
    if (!in_block[i])
      g.free_indices.push_back(i);

  g.identity_component_dim =
      block_dim + Integer(static_cast<unsigned long>(g.free_indices.size())) -
      Integer(static_cast<unsigned long>(p.m() - p.n()));
  g.weyl_order = weyl_order(r);
  g.component_count = report.component_count;
  g.roots_realized = root_total == r.roots.size();
  g.d_surjective = report.component_count * report.weyl_image_order ==
                       report.aut_order &&
                   report.weyl_image_order == g.weyl_order;

  const Integer n(static_cast<unsigned long>(p.n()));
  if (g.identity_component_dim < n ||
      (g.identity_component_dim == n) != r.roots.empty())
    throw InvariantViolation("dim G_max^0 = " + g.identity_component_dim.get_str() +
                             " inconsistent with n = " + n.get_str() + " and " +
                             std::to_string(r.roots.size()) + " roots");
  if (g.identity_component_dim !=
      n + Integer(static_cast<unsigned long>(r.roots.size())))
    throw InvariantViolation("dim G_max^0 differs from rank + number of roots");

  std::ostringstream os;
  os << "G_max^0 = (";
  bool first = true;
  for (auto s : g.block_sizes) {
    os << (first ? "" : " x ") << "U(" << s << ')';
    first = false;
  }
  if (!g.free_indices.empty()) {
    os << (first ? "" : " x ") << "T^" << g.free_indices.size();
    first = false;
  }
  os << ") / Ker V, dim " << g.identity_component_dim.get_str();
  if (!g.blocks.empty()) {
    os << ", blocks";
    for (const auto &b : g.blocks)
      os << ' ' << one_based(b);
  } else {
    os << " (maximal torus only)";
  }
  os << "; Weyl group order " << g.weyl_order.get_str() << "; "
     << g.component_count.get_str()
     << (g.component_count == 1 ? " component" : " components");
  g.summary = os.str();
  return g;
}

Integer recount_identity_dim(const DelzantPolytope &p, const RootSystem &r,
                             const MomentAngleData &ma) {
  std::vector<std::size_t> block_of(p.m(), p.m());
  for (std::size_t k = 0; k < r.factors.size(); ++k)
    for (auto i : r.factors[k].index_set)
      block_of[i] = k;
  unsigned long entries = 0;
  for (std::size_t i = 0; i < p.m(); ++i)
    for (std::size_t j = 0; j < p.m(); ++j)
      if (i == j || (block_of[i] != p.m() && block_of[i] == block_of[j]))
        ++entries;
  return Integer(entries) - Integer(static_cast<unsigned long>(ma.kernel_basis.rows()));
}

} // namespace toricsym
