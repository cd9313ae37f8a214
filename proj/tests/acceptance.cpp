// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "toricsym/corpus.hpp"
#include "toricsym/topology.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace toricsym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok)
      failures.push_back(what);
  }
};

std::string str(const Integer &x) { return x.get_str(); }

std::set<IntCovector> root_set(const RootSystem &r) {
  std::set<IntCovector> out;
  for (const auto &root : r.roots)
    out.insert(root.alpha);
  return out;
}

std::vector<std::string> factor_types(const RootSystem &r) {
  std::vector<std::string> out;
  for (const auto &f : r.factors)
    out.push_back(f.type());
  return out;
}

struct Instance {
  std::string id;
  DelzantPolytope p;
};

std::vector<Instance> corpus_instances() {
  std::vector<Instance> out;
  for (const auto &f : valid_corpus())
    out.push_back({f.id, validate(f.document.polytope)});
  return out;
}

// every unordered pair of valid fixtures, including a fixture with itself
std::vector<Instance> product_instances() {
  auto fixtures = valid_corpus();
  std::vector<Instance> out;
  for (std::size_t a = 0; a < fixtures.size(); ++a)
    for (std::size_t b = a; b < fixtures.size(); ++b)
      out.push_back({fixtures[a].id + "x" + fixtures[b].id,
                     validate(product(fixtures[a].document.polytope,
                                      fixtures[b].document.polytope))});
  return out;
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto t0 = Clock::now();
    auto p = validate(simplex(n));
    auto r = compute_roots(p);
    double dt = seconds_since(t0);
    worst = std::max(worst, dt);

    std::set<IntCovector> expected;
    for (std::size_t i = 0; i < n; ++i) {
      IntCovector e(n, 0);
      e[i] = 1;
      expected.insert(e);
      e[i] = -1;
      expected.insert(e);
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) {
          IntCovector d(n, 0);
          d[i] = 1;
          d[j] = -1;
          expected.insert(d);
        }
    }
    const std::string tag = "CP" + std::to_string(n);
    o.expect(r.roots.size() == n * (n + 1), tag + ": |R(P)| != n(n+1)");
    o.expect(root_set(r) == expected, tag + ": root set differs");
    o.expect(factor_types(r) == std::vector<std::string>{"A" + std::to_string(n)},
             tag + ": factor type is not A_n");
    o.expect(dt < 1.0, tag + ": took " + std::to_string(dt) + " s");
  }
  std::ostringstream d;
  d << "CP^1..CP^4 root sets exact, slowest " << worst << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto r0 = compute_roots(validate(hirzebruch(0, 3)));
  o.expect(r0.roots.size() == 4, "a=0: |R(P)| != 4");
  o.expect(factor_types(r0) == std::vector<std::string>{"A1", "A1"}, "a=0: not A1 x A1");
  const std::set<IntCovector> pm_e1{{1, 0}, {-1, 0}};
  for (long a : {1L, 2L}) {
    auto r = compute_roots(validate(hirzebruch(a, 2)));
    const std::string tag = "a=" + std::to_string(a);
    o.expect(root_set(r) == pm_e1, tag + ": R(P) != {+-e1*}");
    o.expect(factor_types(r) == std::vector<std::string>{"A1"}, tag + ": not one A1");
  }
  o.detail = "a=0: 4 roots A1xA1; a=1,2: {+-e1*} A1";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto p = validate(pentagon());
  o.expect(p.n() == 2 && p.m() == 5, "pentagon fixture is not n=2, m=5");
  auto r = compute_roots(p);
  o.expect(r.roots.empty(), "R(P) not empty");
  o.expect(r.factors.empty(), "factors not empty");
  o.detail = "R(P) empty";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto sq = compute_aut(validate(rectangle(1, 1)));
  auto rect_raw = rectangle(2, 1);
  o.expect(rect_raw.offsets == std::vector<Rational>{0, 0, -2, -1},
           "rectangle offsets are not (0,0,-2,-1)");
  auto rect = compute_aut(validate(rect_raw));
  o.expect(sq.size() == 8, "square: |Aut| = " + std::to_string(sq.size()));
  o.expect(rect.size() == 4, "rectangle: |Aut| = " + std::to_string(rect.size()));
  o.detail = "square " + std::to_string(sq.size()) + ", rectangle " +
             std::to_string(rect.size());
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto instances = corpus_instances();
  const std::size_t base = instances.size();
  for (auto &i : product_instances())
    instances.push_back(std::move(i));
  std::size_t factors = 0;
  for (const auto &inst : instances) {
    RootSystem r;
    try {
      r = compute_roots(inst.p);
    } catch (const std::exception &e) {
      o.expect(false, inst.id + ": " + e.what());
      continue;
    }
    std::set<std::size_t> seen;
    for (const auto &f : r.factors) {
      ++factors;
      o.expect(f.cartan == type_a_cartan(f.rank), inst.id + ": Cartan matrix of " +
                                                      f.type() + " is not standard");
      o.expect(f.index_set.size() == f.rank + 1, inst.id + ": |I(Phi)| != rank + 1");
      o.expect(f.roots.size() == f.rank * (f.rank + 1),
               inst.id + ": factor root count != r(r+1)");
      // recompute the Cartan matrix directly from the simple roots
      for (std::size_t a = 0; a < f.simple_roots.size(); ++a)
        for (std::size_t b = 0; b < f.simple_roots.size(); ++b)
          o.expect(bilinear(inst.p, r.roots[f.simple_roots[a]].alpha,
                            r.roots[f.simple_roots[b]].alpha) == f.cartan(a, b),
                   inst.id + ": Cartan entry disagrees with the scalar product");
      for (auto i : f.index_set)
        o.expect(seen.insert(i).second, inst.id + ": index sets overlap");
    }
  }
  o.detail = std::to_string(base) + " fixtures + " +
             std::to_string(instances.size() - base) + " products, " +
             std::to_string(factors) + " factors certified";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto &inst : corpus_instances()) {
    const auto &p = inst.p;
    auto r = compute_roots(p);
    auto w = weyl_group(p, r);
    for (const auto &a : r.roots)
      for (const auto &b : r.roots) {
        ++pairs;
        Integer ab = bilinear(p, a.alpha, b.alpha);
        o.expect(ab == bilinear(p, b.alpha, a.alpha), inst.id + ": form not symmetric");
        o.expect(cartan(p, a, b) == cartan(p, b, a), inst.id + ": a_{b,a} != a_{a,b}");
        o.expect(cartan(p, a, b) == ab, inst.id + ": a_{b,a} != (a, b)");
        // invariance under every reflection
        for (const auto &g : r.roots)
          o.expect(bilinear(p, reflect(p, g, a.alpha), reflect(p, g, b.alpha)) == ab,
                   inst.id + ": not reflection invariant");
      }
    // and under every Weyl group element
    for (const auto &g : w)
      for (const auto &a : r.roots)
        for (const auto &b : r.roots)
          o.expect(bilinear(p, g.h2_action * a.alpha, g.h2_action * b.alpha) ==
                       bilinear(p, a.alpha, b.alpha),
                   inst.id + ": not Weyl invariant");
  }
  o.detail = std::to_string(pairs) + " root pairs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<Instance> instances;
  for (auto &i : corpus_instances())
    if (i.p.n() <= 3)
      instances.push_back(std::move(i));
  for (auto &i : product_instances())
    if (i.p.n() <= 3)
      instances.push_back(std::move(i));
  for (const auto &inst : instances) {
    auto expected = oracle::scan_roots(inst.p, oracle::root_entry_bound(inst.p));
    std::set<oracle::RootPattern> got;
    for (const auto &r : compute_roots(inst.p).roots)
      got.insert({oracle::to_vec(r.alpha), r.plus, r.minus});
    o.expect(got == expected, inst.id + ": oracle disagrees");
  }
  double dt = seconds_since(t0);
  o.expect(dt < 30.0, "took " + std::to_string(dt) + " s");
  std::ostringstream d;
  d << instances.size() << " instances with n <= 3, " << dt << " s";
  o.detail = d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto instances = corpus_instances();
  for (auto &i : product_instances())
    instances.push_back(std::move(i));
  for (const auto &inst : instances) {
    const auto &p = inst.p;
    auto r = compute_roots(p);
    auto ma = moment_angle(p);
    auto coh = cohomology(p, minimal_nonfaces(p), r, CohomologyMode::Ordinary);
    const IntMatrix &B = ma.kernel_basis;
    o.expect(coh.linear_relations * B.transpose() == IntMatrix(p.n(), B.rows()),
             inst.id + ": linear matrix * B^T != 0");
    o.expect(B.rows() == p.m() - p.n() && rank(B) == B.rows(),
             inst.id + ": B does not have rank m - n");
    for (const auto &root : r.roots)
      for (std::size_t k = 0; k < B.rows(); ++k)
        o.expect(B(k, root.plus) == B(k, root.minus),
                 inst.id + ": B columns differ on a witness pair");
  }
  o.detail = std::to_string(instances.size()) + " instances";
  return o;
}

GmaxDescriptor gmax_of(const DelzantPolytope &p, Integer *recount) {
  auto r = compute_roots(p);
  auto rep = weyl_embedding(p, r, weyl_group(p, r), compute_aut(p));
  *recount = recount_identity_dim(p, r, moment_angle(p));
  return gmax_descriptor(p, r, rep);
}

Outcome criterion9() {
  Outcome o;
  Integer recount;
  auto cp2 = gmax_of(validate(simplex(2)), &recount);
  o.expect(cp2.identity_component_dim == 8, "CP2: dim " + str(cp2.identity_component_dim));
  o.expect(recount == 8, "CP2: recount " + str(recount));
  o.expect(cp2.weyl_order == 6, "CP2: Weyl order " + str(cp2.weyl_order));
  o.expect(cp2.component_count == 1, "CP2: components " + str(cp2.component_count));

  auto sq = gmax_of(validate(rectangle(1, 1)), &recount);
  o.expect(sq.identity_component_dim == 6, "square: dim " + str(sq.identity_component_dim));
  o.expect(recount == 6, "square: recount " + str(recount));
  o.expect(sq.component_count == 2, "square: components " + str(sq.component_count));

  auto pent = gmax_of(validate(pentagon()), &recount);
  o.expect(pent.identity_component_dim == 2, "pentagon: dim " + str(pent.identity_component_dim));
  o.expect(recount == 2, "pentagon: recount " + str(recount));
  o.expect(pent.blocks.empty(), "pentagon: has unitary blocks");

  o.detail = "CP2 dim " + str(cp2.identity_component_dim) + " |W| " + str(cp2.weyl_order) +
             " comps " + str(cp2.component_count) + "; square dim " +
             str(sq.identity_component_dim) + " comps " + str(sq.component_count) +
             "; pentagon dim " + str(pent.identity_component_dim) + " (torus)";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t count = 0;
  for (const auto &inst : corpus_instances()) {
    const auto &p = inst.p;
    auto r = compute_roots(p);
    auto aut = compute_aut(p);
    auto rep = weyl_embedding(p, r, weyl_group(p, r), aut);
    auto g = gmax_descriptor(p, r, rep);
    ++count;
    o.expect(g.roots_realized && g.d_surjective, inst.id + ": condition flag false");

    // Delta(G) = R(P): the roots of the block group are the pairs (i, j) with
    // i != j in one block, and each must be the witness pair of a root
    std::size_t block_roots = 0;
    for (const auto &b : g.blocks)
      for (auto i : b)
        for (auto j : b)
          if (i != j) {
            ++block_roots;
            o.expect(r.find(i, j) < r.roots.size(),
                     inst.id + ": block pair without a root");
          }
    o.expect(block_roots == r.roots.size(), inst.id + ": |Delta(G)| != |R(P)|");

    // D-surjectivity: W embeds, and W-cosets cover Aut(P)
    o.expect(rep.weyl_image_order == weyl_order(r), inst.id + ": W does not embed");
    o.expect(rep.weyl_image_order * rep.component_count == Integer(aut.size()),
             inst.id + ": cosets do not cover Aut(P)");
    o.expect(rep.coset_of.size() == aut.size(), inst.id + ": element without coset");
    if (p.n() == 2)
      o.expect(oracle::scan_automorphisms(p, 3).size() == aut.size(),
               inst.id + ": Aut(P) incomplete against matrix scan");
  }
  o.detail = std::to_string(count) +
             " fixtures; maximality itself is not machine-checked";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"CP^n root systems", criterion1},
      {"Hirzebruch root systems", criterion2},
      {"pentagon has no roots", criterion3},
      {"Aut orders of square and rectangle", criterion4},
      {"every factor is type A (corpus + products)", criterion5},
      {"Weyl invariance and Cartan symmetry", criterion6},
      {"brute-force root oracle", criterion7},
      {"exactness and witness-column equality", criterion8},
      {"G_max descriptors", criterion9},
      {"G_max sufficient conditions", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[k].second();
    } catch (const std::exception &e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = o.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %2zu: %s (%zu checks, %.3f s) %s\n",
                pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.checks,
                seconds_since(t0), o.detail.c_str());
    for (std::size_t f = 0; f < o.failures.size() && f < 10; ++f)
      std::printf("         - %s\n", o.failures[f].c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
