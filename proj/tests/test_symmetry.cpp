#include "toricsym/corpus.hpp"
#include "toricsym/errors.hpp"
#include "toricsym/symmetry.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace toricsym;

namespace {

std::set<Permutation> sigmas(const std::vector<PolytopeAutomorphism> &aut) {
  std::set<Permutation> out;
  for (const auto &g : aut)
    out.insert(g.sigma);
  return out;
}

RatCovector act(const IntMatrix &m, const RatCovector &x) {
  RatCovector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r] += Rational(m(r, c)) * x[c];
  return out;
}

const RatCovector &vertex_at(const DelzantPolytope &p, FacetSet active) {
  std::sort(active.begin(), active.end());
  for (const auto &v : p.vertices())
    if (v.active == active)
      return v.coords;
  FAIL("no vertex with the given active set");
  throw 0;
}

ComponentGroupReport report_for(const DelzantPolytope &p) {
  auto r = compute_roots(p);
  return weyl_embedding(p, r, weyl_group(p, r), compute_aut(p));
}

} // namespace

TEST_CASE("automorphism group orders") {
  CHECK(compute_aut(validate(rectangle(1, 1))).size() == 8);
  CHECK(compute_aut(validate(rectangle(2, 1))).size() == 4);
  CHECK(compute_aut(validate(simplex(2))).size() == 6);
  CHECK(compute_aut(validate(simplex(3))).size() == 24);
  CHECK(compute_aut(validate(simplex(1))).size() == 2);
}

TEST_CASE("automorphisms agree with a brute-force matrix scan") {
  for (const auto &f : valid_corpus()) {
    auto p = validate(f.document.polytope);
    if (p.n() != 2)
      continue;
    CAPTURE(f.id);
    CHECK(sigmas(compute_aut(p)) == oracle::scan_automorphisms(p, 3));
  }
  // one three-dimensional case
  auto p = validate(product(simplex(2), simplex(1)));
  CHECK(sigmas(compute_aut(p)) == oracle::scan_automorphisms(p, 1));
}

TEST_CASE("group structure and defining equations") {
  for (const auto &f : valid_corpus()) {
    CAPTURE(f.id);
    auto p = validate(f.document.polytope);
    auto aut = compute_aut(p);
    REQUIRE_FALSE(aut.empty());
    CHECK(aut.front().is_identity());
    for (const auto &g : aut) {
      CHECK(abs(determinant(g.rho_star)) == 1);
      for (std::size_t i = 0; i < p.m(); ++i) {
        CHECK(g.rho_star * p.normal(g.sigma[i]) == p.normal(i));
        CHECK(p.offset(g.sigma[i]) == p.offset(i) - dot(g.u0, p.normal(g.sigma[i])));
      }
      // rho^*(x_I) = x_sigma(I) + u0 at every vertex
      for (const auto &v : p.vertices()) {
        FacetSet image;
        for (auto i : v.active)
          image.push_back(g.sigma[i]);
        RatCovector expected = vertex_at(p, image);
        for (std::size_t c = 0; c < p.n(); ++c)
          expected[c] += g.u0[c];
        CHECK(act(g.pullback(), v.coords) == expected);
      }
    }
    if (aut.size() > 48)
      continue;
    for (const auto &g : aut)
      for (const auto &h : aut) {
        Permutation s = compose_sigma(g, h);
        std::size_t k = find_by_sigma(aut, s);
        REQUIRE(k < aut.size());
        CHECK(aut[k].rho_star == g.rho_star * h.rho_star);
      }
  }
}

TEST_CASE("Weyl image and component groups") {
  auto sq = report_for(validate(rectangle(1, 1)));
  CHECK(sq.aut_order == 8);
  CHECK(sq.weyl_image_order == 4);
  CHECK(sq.component_count == 2);
  CHECK(sq.weyl_normal_in_aut);
  CHECK(sq.quotient_table.size() == 2);

  auto rect = report_for(validate(rectangle(2, 1)));
  CHECK(rect.component_count == 1);

  auto cp2 = report_for(validate(simplex(2)));
  CHECK(cp2.component_count == 1);
  CHECK(cp2.coset_representatives == std::vector<std::size_t>{0});

  auto pent = report_for(validate(pentagon()));
  CHECK(pent.weyl_image_order == 1);
  CHECK(pent.component_count == pent.aut_order);

  for (const auto &f : valid_corpus()) {
    CAPTURE(f.id);
    auto rep = report_for(validate(f.document.polytope));
    CHECK(rep.aut_order == rep.weyl_image_order * rep.component_count);
    CHECK(rep.weyl_normal_in_aut);
    std::set<std::size_t> image(rep.weyl_image.begin(), rep.weyl_image.end());
    CHECK(Integer(image.size()) == rep.weyl_image_order);
  }
}

TEST_CASE("a Weyl element missing from Aut(P) is an invariant violation") {
  auto p = validate(simplex(2));
  auto r = compute_roots(p);
  auto aut = compute_aut(p);
  std::vector<PolytopeAutomorphism> only_identity{aut.front()};
  CHECK_THROWS_AS(weyl_embedding(p, r, weyl_group(p, r), only_identity),
                  InvariantViolation);
}

TEST_CASE("induced action on cohomology generators") {
  SUBCASE("identity") {
    auto p = validate(rectangle(1, 1));
    auto nf = minimal_nonfaces(p);
    auto a = induced_sigma_action(p, nf, compute_aut(p).front());
    CHECK(a.sigma == Permutation{0, 1, 2, 3});
    CHECK(a.nonface_images == nf);
    CHECK(a.preserves_nonfaces);
  }
  SUBCASE("square rotation") {
    auto p = validate(rectangle(1, 1));
    auto aut = compute_aut(p);
    std::size_t k = find_by_sigma(aut, Permutation{1, 2, 3, 0});
    REQUIRE(k < aut.size());
    CHECK(aut[k].rho_star == IntMatrix{{0, 1}, {-1, 0}});
    auto a = induced_sigma_action(p, minimal_nonfaces(p), aut[k]);
    CHECK(a.nonface_images == std::vector<FacetSet>{{1, 3}, {0, 2}});
    CHECK(a.preserves_nonfaces);
  }
  SUBCASE("CP2 transposition") {
    auto p = validate(simplex(2));
    auto aut = compute_aut(p);
    std::size_t k = find_by_sigma(aut, Permutation{1, 0, 2});
    REQUIRE(k < aut.size());
    auto a = induced_sigma_action(p, minimal_nonfaces(p), aut[k]);
    CHECK(a.nonface_images == std::vector<FacetSet>{{0, 1, 2}});
  }
}
