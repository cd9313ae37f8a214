#include "toricsym/corpus.hpp"
#include "toricsym/errors.hpp"
#include "toricsym/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace toricsym;

namespace {

RawPolytope raw(std::size_t n, std::vector<std::vector<long>> normals,
                std::vector<Rational> offsets) {
  RawPolytope p;
  p.n = n;
  for (const auto &v : normals)
    p.normals.emplace_back(v.begin(), v.end());
  p.offsets = std::move(offsets);
  return p;
}

bool has_kind(const std::vector<Violation> &vs, ViolationKind k) {
  return std::any_of(vs.begin(), vs.end(),
                     [&](const Violation &v) { return v.kind == k; });
}

const Violation &first_of(const std::vector<Violation> &vs, ViolationKind k) {
  return *std::find_if(vs.begin(), vs.end(),
                       [&](const Violation &v) { return v.kind == k; });
}

std::set<RatCovector> vertex_points(const DelzantPolytope &p) {
  std::set<RatCovector> out;
  for (const auto &v : p.vertices())
    out.insert(v.coords);
  return out;
}

// A facet set is a face iff some vertex lies on all of its facets.
bool face_by_coordinates(const DelzantPolytope &p, const FacetSet &s) {
  for (const auto &v : p.vertices()) {
    bool on_all = true;
    for (auto i : s)
      on_all = on_all && dot(v.coords, p.normal(i)) == p.offset(i);
    if (on_all)
      return true;
  }
  return false;
}

std::set<FacetSet> minimal_nonfaces_by_subsets(const DelzantPolytope &p) {
  std::set<FacetSet> out;
  const std::size_t m = p.m();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    FacetSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1)
        s.push_back(i);
    if (face_by_coordinates(p, s))
      continue;
    bool minimal = true;
    for (std::size_t k = 0; k < s.size() && minimal; ++k) {
      FacetSet t = s;
      t.erase(t.begin() + long(k));
      minimal = face_by_coordinates(p, t);
    }
    if (minimal)
      out.insert(s);
  }
  return out;
}

// h_k counts vertices with exactly k edges on which a generic linear
// functional decreases: the Morse count on the moment polytope.
std::vector<Integer> morse_h_vector(const DelzantPolytope &p) {
  std::vector<Rational> xi;
  for (std::size_t c = 0; c < p.n(); ++c)
    xi.emplace_back(1 + 7 * long(c) * long(c) + 3 * long(c), 1);
  std::vector<Integer> h(p.n() + 1, 0);
  for (const auto &v : p.vertices()) {
    std::size_t down = 0;
    for (auto drop : v.active) {
      // the edge leaving v along the facets active at v except `drop`
      for (const auto &w : p.vertices()) {
        if (&w == &v)
          continue;
        FacetSet common;
        std::set_intersection(v.active.begin(), v.active.end(),
                              w.active.begin(), w.active.end(),
                              std::back_inserter(common));
        FacetSet edge = v.active;
        edge.erase(std::find(edge.begin(), edge.end(), drop));
        if (common != edge)
          continue;
        Rational fv = 0, fw = 0;
        for (std::size_t c = 0; c < p.n(); ++c) {
          fv += xi[c] * v.coords[c];
          fw += xi[c] * w.coords[c];
        }
        REQUIRE(fv != fw);
        if (fw < fv)
          ++down;
      }
    }
    ++h[down];
  }
  return h;
}

} // namespace

TEST_CASE("valid polytopes validate") {
  for (const auto &f : valid_corpus()) {
    CAPTURE(f.id);
    CHECK(check(f.document.polytope).empty());
    auto p = validate(f.document.polytope);
    for (const auto &v : p.vertices())
      CHECK(v.active.size() == p.n());
  }
}

TEST_CASE("non-unimodular triangle is rejected at the right vertex") {
  auto vs = check(raw(2, {{1, 0}, {0, 1}, {-1, -2}}, {0, 0, -1}));
  REQUIRE(has_kind(vs, ViolationKind::NonUnimodularVertex));
  const auto &v = first_of(vs, ViolationKind::NonUnimodularVertex);
  CHECK(v.facets == FacetSet{0, 2});
  CHECK(abs(v.determinant) == 2);
  CHECK(v.message.find("{1,3}") != std::string::npos);
  CHECK_THROWS_AS(validate(raw(2, {{1, 0}, {0, 1}, {-1, -2}}, {0, 0, -1})),
                  InvalidPolytope);
}

TEST_CASE("redundant inequality is named") {
  auto vs = check(raw(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}},
                      {0, 0, -1, -1, -5}));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::RedundantInequality);
  CHECK(vs[0].facets == FacetSet{4});
}

TEST_CASE("every violated condition is reported") {
  // (2, 0) is not primitive, and the vertex {1, 3} has determinant -4
  auto vs = check(raw(2, {{2, 0}, {0, 1}, {-1, -2}}, {0, 0, -1}));
  CHECK(has_kind(vs, ViolationKind::NonPrimitiveNormal));
  CHECK(has_kind(vs, ViolationKind::NonUnimodularVertex));
  CHECK(first_of(vs, ViolationKind::NonPrimitiveNormal).facets == FacetSet{0});
}

TEST_CASE("unbounded and empty inputs") {
  CHECK(has_kind(check(raw(2, {{1, 0}, {0, 1}}, {0, 0})), ViolationKind::Unbounded));
  CHECK(has_kind(check(raw(2, {{1, 0}, {0, 1}, {-1, 0}}, {0, 0, -1})),
                 ViolationKind::Unbounded));
  CHECK(has_kind(check(raw(1, {{1}, {-1}}, {1, 0})), ViolationKind::Empty));
  CHECK_FALSE(normals_positively_span(2, raw(2, {{1, 0}, {0, 1}, {-1, 0}}, {0, 0, 0}).normals));
  CHECK(normals_positively_span(2, simplex(2).normals));
}

TEST_CASE("non-simple apex of a square pyramid") {
  auto p = raw(3, {{0, 0, 1}, {1, 0, -1}, {-1, 0, -1}, {0, 1, -1}, {0, -1, -1}},
               {0, -1, -1, -1, -1});
  auto vs = check(p);
  REQUIRE(has_kind(vs, ViolationKind::NonSimpleVertex));
  const auto &v = first_of(vs, ViolationKind::NonSimpleVertex);
  CHECK(v.facets == FacetSet{1, 2, 3, 4});
  CHECK(v.point == RatCovector{0, 0, 1});
}

TEST_CASE("malformed shapes throw") {
  CHECK_THROWS_AS(check(raw(2, {{1, 0}, {0, 1, 0}, {-1, -1}}, {0, 0, -1})),
                  MalformedInput);
  CHECK_THROWS_AS(check(raw(2, {{1, 0}, {0, 1}, {-1, -1}}, {0, 0})), MalformedInput);
  CHECK_THROWS_AS(check(raw(0, {}, {})), MalformedInput);
}

TEST_CASE("vertex enumeration") {
  SUBCASE("square") {
    auto p = validate(rectangle(1, 1));
    CHECK(vertex_points(p) == std::set<RatCovector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  }
  SUBCASE("CP2") {
    auto p = validate(simplex(2));
    CHECK(vertex_points(p) == std::set<RatCovector>{{0, 0}, {1, 0}, {0, 1}});
  }
  SUBCASE("Hirzebruch a = 1") {
    auto p = validate(hirzebruch(1, 2));
    CHECK(vertex_points(p) == std::set<RatCovector>{{0, 0}, {2, 0}, {3, 1}, {0, 1}});
  }
  SUBCASE("rational offsets") {
    auto r = rectangle(1, 1);
    r.offsets[2] = Rational(-1, 2);
    auto p = validate(r);
    CHECK(vertex_points(p).count(RatCovector{Rational(1, 2), 1}) == 1);
  }
}

TEST_CASE("minimal nonfaces") {
  CHECK(minimal_nonfaces(validate(simplex(2))) == std::vector<FacetSet>{{0, 1, 2}});
  CHECK(minimal_nonfaces(validate(rectangle(1, 1))) ==
        std::vector<FacetSet>{{0, 2}, {1, 3}});
  CHECK(minimal_nonfaces(validate(simplex(1))) == std::vector<FacetSet>{{0, 1}});
  for (const auto &f : valid_corpus()) {
    CAPTURE(f.id);
    auto p = validate(f.document.polytope);
    if (p.m() > 12)
      continue;
    auto got = minimal_nonfaces(p);
    CHECK(std::set<FacetSet>(got.begin(), got.end()) == minimal_nonfaces_by_subsets(p));
  }
}

TEST_CASE("h-vectors") {
  CHECK(h_vector(validate(rectangle(1, 1))) == std::vector<Integer>{1, 2, 1});
  CHECK(h_vector(validate(simplex(2))) == std::vector<Integer>{1, 1, 1});
  CHECK(h_vector(validate(simplex(1))) == std::vector<Integer>{1, 1});
  CHECK(h_vector(validate(pentagon())) == std::vector<Integer>{1, 3, 1});
}

TEST_CASE("face numbers over the corpus") {
  for (const auto &f : valid_corpus()) {
    CAPTURE(f.id);
    auto p = validate(f.document.polytope);
    auto fv = f_vector(p);
    auto h = h_vector(p);
    REQUIRE(fv.size() == p.n() + 1);
    CHECK(fv[0] == Integer(p.vertices().size()));
    CHECK(fv[p.n()] == 1);
    if (p.n() >= 1)
      CHECK(fv[p.n() - 1] == Integer(p.m()));
    Integer euler = 0, total = 0;
    for (std::size_t k = 0; k <= p.n(); ++k) {
      euler += (k % 2 == 0) ? fv[k] : Integer(-fv[k]);
      total += h[k];
      CHECK(h[k] == h[p.n() - k]);
      CHECK(h[k] > 0);
    }
    CHECK(euler == 1);
    CHECK(total == fv[0]);
    CHECK(h == morse_h_vector(p));
  }
}

TEST_CASE("face queries") {
  auto p = validate(rectangle(1, 1));
  CHECK(is_face(p, {0, 1}));
  CHECK(is_face(p, {}));
  CHECK_FALSE(is_face(p, {0, 2}));
}

TEST_CASE("products") {
  auto r = product(simplex(2), simplex(1));
  CHECK(r.n == 3);
  CHECK(r.normals.size() == 5);
  auto p = validate(r);
  CHECK(p.vertices().size() == 6);
  CHECK(h_vector(p) == std::vector<Integer>{1, 2, 2, 1});
}
