#include "toricsym/rootsys.hpp"

#include "toricsym/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace toricsym {

namespace {

std::string describe(const Root &r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < r.alpha.size(); ++k)
    os << (k ? ", " : "") << r.alpha[k].get_str();
  os << ") witness (" << r.plus + 1 << ", " << r.minus + 1 << ')';
  return os.str();
}

std::string dump_roots(const std::vector<Root> &roots,
                       const std::vector<std::size_t> &which) {
  std::ostringstream os;
  for (auto k : which)
    os << "  root " << k << ": " << describe(roots[k]) << '\n';
  return os.str();
}

IntCovector add(const IntCovector &a, const IntCovector &b) {
  IntCovector s(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    s[k] = a[k] + b[k];
  return s;
}

// Union-find over root indices.
struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

IrreducibleFactor certify_factor(const DelzantPolytope &p,
                                 const std::vector<Root> &roots,
                                 std::vector<std::size_t> members) {
  auto fail = [&](const std::string &why) {
    throw InvariantViolation("type-A certification failed: " + why,
                             "factor roots:\n" + dump_roots(roots, members));
  };

  IrreducibleFactor f;
  f.roots = members;
  for (auto k : members) {
    f.index_set.push_back(roots[k].plus);
    f.index_set.push_back(roots[k].minus);
  }
  std::sort(f.index_set.begin(), f.index_set.end());
  f.index_set.erase(std::unique(f.index_set.begin(), f.index_set.end()),
                    f.index_set.end());
  const std::size_t r = f.index_set.size();
  f.rank = r - 1;

  if (members.size() != r * (r - 1))
    fail("factor on " + std::to_string(r) + " facets has " +
         std::to_string(members.size()) + " roots, expected " +
         std::to_string(r * (r - 1)));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> witness_count;
  for (auto k : members)
    ++witness_count[{roots[k].plus, roots[k].minus}];
  for (auto i : f.index_set)
    for (auto j : f.index_set)
      if (i != j && witness_count[{i, j}] != 1)
        fail("witness pair (" + std::to_string(i + 1) + ", " +
             std::to_string(j + 1) + ") occurs " +
             std::to_string(witness_count[{i, j}]) + " times");

  // Positive roots: L(alpha) = sum_l l <alpha, v_l> = plus - minus > 0.
  std::vector<std::size_t> positive;
  for (auto k : members)
    if (roots[k].plus > roots[k].minus)
      positive.push_back(k);
  std::vector<IntCovector> sums;
  for (auto a : positive)
    for (auto b : positive)
      if (a < b)
        sums.push_back(add(roots[a].alpha, roots[b].alpha));
  std::vector<std::size_t> simple;
  for (auto k : positive)
    if (std::find(sums.begin(), sums.end(), roots[k].alpha) == sums.end())
      simple.push_back(k);
  if (simple.size() != f.rank)
    fail(std::to_string(simple.size()) + " simple roots for rank " +
         std::to_string(f.rank));

  // Order simple roots along the Dynkin path, starting from the endpoint
  // with the smallest root index.
  auto a_ij = [&](std::size_t a, std::size_t b) {
    return cartan(p, roots[a], roots[b]);
  };
  std::vector<std::size_t> degree(simple.size(), 0);
  for (std::size_t s = 0; s < simple.size(); ++s)
    for (std::size_t t = 0; t < simple.size(); ++t)
      if (s != t && a_ij(simple[s], simple[t]) != 0)
        ++degree[s];
  std::vector<std::size_t> path;
  std::vector<bool> used(simple.size(), false);
  for (std::size_t s = 0; s < simple.size(); ++s)
    if (degree[s] <= 1) {
      path.push_back(s);
      used[s] = true;
      break;
    }
  if (path.empty())
    fail("simple roots do not form a path");
  while (path.size() < simple.size()) {
    std::size_t last = path.back(), next = simple.size();
    for (std::size_t t = 0; t < simple.size(); ++t)
      if (!used[t] && a_ij(simple[last], simple[t]) != 0) {
        next = t;
        break;
      }
    if (next == simple.size())
      fail("Dynkin diagram of the simple roots is not a path");
    used[next] = true;
    path.push_back(next);
  }
  for (auto s : path)
    f.simple_roots.push_back(simple[s]);

  f.cartan = IntMatrix(f.rank, f.rank);
  for (std::size_t a = 0; a < f.rank; ++a)
    for (std::size_t b = 0; b < f.rank; ++b)
      f.cartan(a, b) = a_ij(f.simple_roots[b], f.simple_roots[a]);
  if (f.cartan != type_a_cartan(f.rank))
    fail("Cartan matrix " + to_string(f.cartan) + " is not of type A" +
         std::to_string(f.rank));
  return f;
}

} // namespace

std::size_t RootSystem::find(std::size_t plus, std::size_t minus) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k].plus == plus && roots[k].minus == minus)
      return k;
  return roots.size();
}

Integer bilinear(const DelzantPolytope &p, std::span<const Integer> beta,
                 std::span<const Integer> gamma) {
  Integer s = 0;
  for (const auto &v : p.normals())
    s += dot(beta, v) * dot(gamma, v);
  return s;
}

IntCovector reflect(const DelzantPolytope &p, const Root &alpha,
                    std::span<const Integer> beta) {
  Integer coeff = dot(beta, p.normal(alpha.plus)) - dot(beta, p.normal(alpha.minus));
  IntCovector out(beta.begin(), beta.end());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] -= coeff * alpha.alpha[k];
  return out;
}

Integer cartan(const DelzantPolytope &p, const Root &alpha, const Root &beta) {
  Integer a = dot(beta.alpha, p.normal(alpha.plus)) -
              dot(beta.alpha, p.normal(alpha.minus));
  Integer s = bilinear(p, alpha.alpha, beta.alpha);
  if (a != s)
    throw InvariantViolation("a_{beta,alpha} = " + a.get_str() +
                                 " differs from (alpha, beta) = " + s.get_str(),
                             "alpha " + describe(alpha) + "\nbeta " +
                                 describe(beta) + '\n');
  return a;
}

IntMatrix type_a_cartan(std::size_t rank) {
  IntMatrix c(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    c(i, i) = 2;
    if (i + 1 < rank)
      c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

RootSystem compute_roots(const DelzantPolytope &p) {
  const std::size_t m = p.m();
  RootSystem rs;
  IntVector target(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j)
        continue;
      std::fill(target.begin(), target.end(), 0);
      target[i] = 1;
      target[j] = -1;
      auto alpha = solve_covector(p.normal_matrix(), std::span<const Integer>(target));
      if (!alpha || !is_integral(*alpha))
        continue;
      Root root{to_integer(*alpha), i, j};
      if (p.pairings(root.alpha) != target)
        throw InvariantViolation("root " + describe(root) +
                                 " does not match its pattern");
      rs.roots.push_back(std::move(root));
    }

  const std::size_t nr = rs.roots.size();
  rs.pairing = IntMatrix(nr, nr);
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b)
      rs.pairing(a, b) = cartan(p, rs.roots[a], rs.roots[b]);

  for (std::size_t a = 0; a < nr; ++a) {
    const auto &ra = rs.roots[a];
    if (rs.find(ra.minus, ra.plus) == nr)
      throw InvariantViolation("R(P) not closed under negation at " +
                               describe(ra));
    for (std::size_t b = 0; b < nr; ++b) {
      auto image = reflect(p, ra, rs.roots[b].alpha);
      bool found = std::any_of(rs.roots.begin(), rs.roots.end(),
                               [&](const Root &r) { return r.alpha == image; });
      if (!found)
        throw InvariantViolation("R(P) not closed under the reflection in " +
                                 describe(ra));
    }
  }

  rs.factors = decompose(p, rs.roots);
  return rs;
}

std::vector<IrreducibleFactor> decompose(const DelzantPolytope &p,
                                         const std::vector<Root> &roots) {
  Components comp(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (bilinear(p, roots[a].alpha, roots[b].alpha) != 0)
        comp.join(a, b);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t a = 0; a < roots.size(); ++a)
    groups[comp.find(a)].push_back(a);

  std::vector<IrreducibleFactor> factors;
  for (auto &[rep, members] : groups)
    factors.push_back(certify_factor(p, roots, members));

  std::vector<bool> seen(p.m(), false);
  for (const auto &f : factors)
    for (auto i : f.index_set) {
      if (seen[i])
        throw InvariantViolation("index sets of distinct factors overlap at facet " +
                                 std::to_string(i + 1));
      seen[i] = true;
    }
  std::sort(factors.begin(), factors.end(),
            [](const IrreducibleFactor &a, const IrreducibleFactor &b) {
              return a.index_set < b.index_set;
            });
  return factors;
}

Integer weyl_order(const RootSystem &r) {
  Integer order = 1;
  for (const auto &f : r.factors) {
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), f.rank + 1);
    order *= fact;
  }
  return order;
}

std::string weyl_order_formula(const RootSystem &r) {
  if (r.factors.empty())
    return "1";
  std::string s;
  for (const auto &f : r.factors)
    s += (s.empty() ? "" : " * ") + std::to_string(f.rank + 1) + "!";
  return s;
}

WeylOrderTooLarge::WeylOrderTooLarge(Integer order, Integer cap,
                                     std::string formula)
    : std::runtime_error("Weyl group order too large to enumerate: " +
                         formula + " = " + order.get_str() + " exceeds cap " +
                         cap.get_str()),
      order_(std::move(order)), cap_(std::move(cap)),
      formula_(std::move(formula)) {}

IntMatrix reflection_h2_dual(const DelzantPolytope &p, const Root &alpha) {
  const std::size_t n = p.n();
  IntMatrix r = IntMatrix::identity(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      r(a, b) -= (p.normal(alpha.plus)[a] - p.normal(alpha.minus)[a]) *
                 alpha.alpha[b];
  return r;
}

std::vector<WeylElement> weyl_group(const DelzantPolytope &p,
                                    const RootSystem &r, const Integer &cap) {
  const Integer order = weyl_order(r);
  if (order > cap)
    throw WeylOrderTooLarge(order, cap, weyl_order_formula(r));

  std::vector<std::size_t> gens;
  for (const auto &f : r.factors)
    gens.insert(gens.end(), f.simple_roots.begin(), f.simple_roots.end());
  std::vector<IntMatrix> gen_h2;
  for (auto g : gens)
    gen_h2.push_back(reflection_h2_dual(p, r.roots[g]).transpose());

  std::vector<WeylElement> elems;
  std::map<IntMatrix, std::size_t> index;
  elems.push_back({IntMatrix::identity(p.n()), {}, {}, {}});
  index.emplace(elems[0].h2_action, 0);
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      IntMatrix next = gen_h2[g] * elems[k].h2_action;
      if (index.contains(next))
        continue;
      std::vector<std::size_t> word{gens[g]};
      word.insert(word.end(), elems[k].word.begin(), elems[k].word.end());
      index.emplace(next, elems.size());
      elems.push_back({std::move(next), {}, std::move(word), {}});
    }

  if (Integer(elems.size()) != order)
    throw InvariantViolation("Weyl group has " + std::to_string(elems.size()) +
                             " elements, expected " + order.get_str());

  for (auto &e : elems) {
    e.h2_dual = e.h2_action.transpose();
    for (std::size_t l = 0; l < p.m(); ++l) {
      IntVector image = e.h2_dual * std::span<const Integer>(p.normal(l));
      auto it = std::find(p.normals().begin(), p.normals().end(), image);
      if (it == p.normals().end())
        throw InvariantViolation("Weyl element does not permute the facet normals",
                                 "H_2 action " + to_string(e.h2_dual) + '\n');
      e.facet_permutation.push_back(
          static_cast<std::size_t>(it - p.normals().begin()));
    }
  }
  return elems;
}

} // namespace toricsym
