#include "toricsym/symmetry.hpp"

#include "toricsym/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricsym {

namespace {

IntMatrix basis_matrix(const DelzantPolytope &p, const std::vector<std::size_t> &cols) {
  IntMatrix b(p.n(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < p.n(); ++r)
      b(r, c) = p.normal(cols[c])[r];
  return b;
}

std::string sigma_string(const Permutation &s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? " " : "") << s[k] + 1;
  os << ']';
  return os.str();
}

FacetSet image_of(const Permutation &sigma, const FacetSet &s) {
  FacetSet out;
  for (auto i : s)
    out.push_back(sigma[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Builds the automorphism sending the base vertex normals, in order, to the
// normals indexed by target, if there is one.
std::optional<PolytopeAutomorphism>
candidate(const DelzantPolytope &p, const IntMatrix &base_inverse, const std::vector<std::size_t> &target) {
  // rho_*^{-1} maps v_{base[k]} to v_{target[k]}.
  IntMatrix rho_inv = basis_matrix(p, target) * base_inverse;
  Permutation sigma(p.m());
  for (std::size_t i = 0; i < p.m(); ++i) {
    IntVector image = rho_inv * std::span<const Integer>(p.normal(i));
    auto it = std::find(p.normals().begin(), p.normals().end(), image);
    if (it == p.normals().end())
      return std::nullopt;
    sigma[i] = static_cast<std::size_t>(it - p.normals().begin());
  }
  // u0 from <u0, v_k> = a_{sigma^{-1}(k)} - a_k, solved on a basis and
  // verified on all facets.
  RatVector rhs(p.m());
  for (std::size_t i = 0; i < p.m(); ++i)
    rhs[sigma[i]] = p.offset(i) - p.offset(sigma[i]);
  auto u0 = solve_covector(p.normal_matrix(), std::span<const Rational>(rhs));
  if (!u0)
    return std::nullopt;
  auto rho = unimodular_inverse(rho_inv);
  if (!rho)
    return std::nullopt;
  return PolytopeAutomorphism{std::move(*rho), std::move(sigma), std::move(*u0)};
}

void check_vertex_action(const DelzantPolytope &p, const PolytopeAutomorphism &g) {
  std::map<FacetSet, const Vertex *> by_active;
  for (const auto &v : p.vertices())
    by_active.emplace(v.active, &v);
  const IntMatrix pull = g.pullback();
  for (const auto &v : p.vertices()) {
    auto it = by_active.find(image_of(g.sigma, v.active));
    if (it == by_active.end())
      throw InvariantViolation("sigma " + sigma_string(g.sigma) +
                               " does not preserve vertex active sets");
    // rho^*(x_I) = x_{sigma(I)} + u0
    for (std::size_t r = 0; r < p.n(); ++r) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < p.n(); ++c)
        lhs += pull(r, c) * v.coords[c];
      if (lhs != it->second->coords[r] + g.u0[r])
        throw InvariantViolation("automorphism " + sigma_string(g.sigma) +
                                 " does not carry P onto P + u0");
    }
  }
}

void check_defining_equations(const DelzantPolytope &p,
                              const PolytopeAutomorphism &g) {
  auto rho_inv = unimodular_inverse(g.rho_star);
  if (!rho_inv)
    throw InvariantViolation("rho_* is not unimodular: " + to_string(g.rho_star));
  for (std::size_t i = 0; i < p.m(); ++i) {
    if (*rho_inv * std::span<const Integer>(p.normal(i)) != p.normal(g.sigma[i]))
      throw InvariantViolation("rho_*^{-1}(v_i) != v_sigma(i) for " +
                               sigma_string(g.sigma));
    if (p.offset(g.sigma[i]) !=
        p.offset(i) - dot(std::span<const Rational>(g.u0), p.normal(g.sigma[i])))
      throw InvariantViolation("offset equation fails for " +
                               sigma_string(g.sigma));
  }
}

} // namespace

bool PolytopeAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != i)
      return false;
  return true;
}

Permutation compose_sigma(const PolytopeAutomorphism &g,
                          const PolytopeAutomorphism &h) {
  Permutation out(g.sigma.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = h.sigma[g.sigma[i]];
  return out;
}

std::size_t find_by_sigma(const std::vector<PolytopeAutomorphism> &aut,
                          const Permutation &sigma) {
  auto it = std::lower_bound(
      aut.begin(), aut.end(), sigma,
      [](const PolytopeAutomorphism &a, const Permutation &s) { return a.sigma < s; });
  if (it == aut.end() || it->sigma != sigma)
    return aut.size();
  return static_cast<std::size_t>(it - aut.begin());
}

std::vector<PolytopeAutomorphism> compute_aut(const DelzantPolytope &p) {
  // Any automorphism maps the base vertex to some vertex, and is pinned down
  // by where it sends the n normals there.
  const std::vector<std::size_t> base = p.vertices().front().active;
  const IntMatrix base_inverse = *unimodular_inverse(basis_matrix(p, base));

  std::map<Permutation, PolytopeAutomorphism> found;
  for (const auto &v : p.vertices()) {
    std::vector<std::size_t> target = v.active;
    do {
      auto g = candidate(p, base_inverse, target);
      if (g)
        found.emplace(g->sigma, std::move(*g));
    } while (std::next_permutation(target.begin(), target.end()));
  }
  std::vector<PolytopeAutomorphism> aut;
  aut.reserve(found.size());
  for (auto &[sigma, g] : found)
    aut.push_back(std::move(g));

  if (aut.empty() || !aut.front().is_identity())
    throw InvariantViolation("Aut(P) does not contain the identity");
  for (const auto &g : aut) {
    check_defining_equations(p, g);
    check_vertex_action(p, g);
  }
  for (const auto &g : aut) {
    bool has_inverse = false;
    for (const auto &h : aut) {
      Permutation s = compose_sigma(g, h);
      std::size_t k = find_by_sigma(aut, s);
      if (k == aut.size())
        throw InvariantViolation("Aut(P) not closed under composition: " +
                                 sigma_string(g.sigma) + " * " +
                                 sigma_string(h.sigma));
      if (aut[k].rho_star != g.rho_star * h.rho_star)
        throw InvariantViolation("composition of rho_* disagrees with sigma");
      has_inverse = has_inverse || k == 0;
    }
    if (!has_inverse)
      throw InvariantViolation("no inverse for " + sigma_string(g.sigma));
  }
  return aut;
}

ComponentGroupReport weyl_embedding(const DelzantPolytope &p,
                                    const RootSystem &r,
                                    const std::vector<WeylElement> &weyl,
                                    const std::vector<PolytopeAutomorphism> &aut) {
  ComponentGroupReport rep;
  rep.aut_order = aut.size();

  auto find_by_rho = [&](const IntMatrix &rho) {
    for (std::size_t k = 0; k < aut.size(); ++k)
      if (aut[k].rho_star == rho)
        return k;
    return aut.size();
  };

  // Each reflection r_alpha is the automorphism with sigma = (i j).
  for (const auto &root : r.roots) {
    std::size_t k = find_by_rho(reflection_h2_dual(p, root));
    if (k == aut.size())
      throw InvariantViolation("reflection for root with witness (" +
                               std::to_string(root.plus + 1) + ", " +
                               std::to_string(root.minus + 1) +
                               ") is not in Aut(P)");
    Permutation transposition(p.m());
    for (std::size_t i = 0; i < p.m(); ++i)
      transposition[i] = i;
    std::swap(transposition[root.plus], transposition[root.minus]);
    if (aut[k].sigma != transposition)
      throw InvariantViolation("reflection does not act as the transposition (" +
                               std::to_string(root.plus + 1) + " " +
                               std::to_string(root.minus + 1) + ")");
  }

  std::vector<bool> in_image(aut.size(), false);
  for (const auto &w : weyl) {
    std::size_t k = find_by_rho(w.h2_dual);
    if (k == aut.size())
      throw InvariantViolation("Weyl element is not in Aut(P)",
                               "H_2 action " + to_string(w.h2_dual) + '\n');
    if (in_image[k])
      throw InvariantViolation("two Weyl elements map to the same automorphism");
    in_image[k] = true;
    rep.weyl_image.push_back(k);
  }
  rep.weyl_image_order = rep.weyl_image.size();

  // Conjugating r_alpha by g gives the reflection in the root with witness
  // (sigma^{-1}(i), sigma^{-1}(j)), which is (g^{-1})^* alpha.
  rep.weyl_normal_in_aut = true;
  for (const auto &g : aut) {
    IntMatrix g_inv = *unimodular_inverse(g.rho_star);
    Permutation sigma_inv(p.m());
    for (std::size_t i = 0; i < p.m(); ++i)
      sigma_inv[g.sigma[i]] = i;
    for (const auto &root : r.roots) {
      IntMatrix conj = g.rho_star * reflection_h2_dual(p, root) * g_inv;
      std::size_t k = find_by_rho(conj);
      if (k == aut.size() || !in_image[k])
        rep.weyl_normal_in_aut = false;
      std::size_t other = r.find(sigma_inv[root.plus], sigma_inv[root.minus]);
      if (other == r.roots.size() ||
          conj != reflection_h2_dual(p, r.roots[other]) ||
          r.roots[other].alpha !=
              g_inv.transpose() * std::span<const Integer>(root.alpha))
        throw InvariantViolation("conjugate of a reflection by an automorphism "
                                 "is not the reflection in the permuted root");
    }
  }

  rep.coset_of.assign(aut.size(), aut.size());
  for (std::size_t g = 0; g < aut.size(); ++g) {
    if (rep.coset_of[g] != aut.size())
      continue;
    const std::size_t c = rep.coset_representatives.size();
    rep.coset_representatives.push_back(g);
    for (auto w : rep.weyl_image) {
      std::size_t k = find_by_sigma(aut, compose_sigma(aut[g], aut[w]));
      rep.coset_of[k] = c;
    }
  }
  rep.component_count = rep.coset_representatives.size();
  if (rep.component_count * rep.weyl_image_order != rep.aut_order)
    throw InvariantViolation("cosets of the Weyl image do not partition Aut(P)");

  if (rep.weyl_normal_in_aut) {
    const auto &reps = rep.coset_representatives;
    rep.quotient_table.assign(reps.size(), std::vector<std::size_t>(reps.size()));
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = 0; b < reps.size(); ++b)
        rep.quotient_table[a][b] =
            rep.coset_of[find_by_sigma(aut, compose_sigma(aut[reps[a]], aut[reps[b]]))];
  }
  return rep;
}

SigmaAction induced_sigma_action(const DelzantPolytope &p,
                                 const std::vector<FacetSet> &nonfaces,
                                 const PolytopeAutomorphism &g) {
  if (g.sigma.size() != p.m())
    throw std::invalid_argument("induced_sigma_action: permutation has wrong size");
  SigmaAction act;
  act.sigma = g.sigma;
  std::set<FacetSet> known(nonfaces.begin(), nonfaces.end());
  act.preserves_nonfaces = true;
  for (const auto &s : nonfaces) {
    act.nonface_images.push_back(image_of(g.sigma, s));
    if (!known.contains(act.nonface_images.back()))
      act.preserves_nonfaces = false;
  }
  if (!act.preserves_nonfaces)
    throw InvariantViolation("sigma " + sigma_string(g.sigma) +
                             " does not map minimal nonfaces to minimal nonfaces");
  return act;
}

} // namespace toricsym
