#include "toricsym/corpus.hpp"

#include <fstream>
#include <stdexcept>

namespace toricsym {

namespace {

RawPolytope make(std::string name, std::size_t n,
                 std::vector<std::vector<long>> normals,
                 std::vector<Rational> offsets) {
  RawPolytope p;
  p.name = std::move(name);
  p.n = n;
  for (const auto &v : normals)
    p.normals.emplace_back(v.begin(), v.end());
  p.offsets = std::move(offsets);
  return p;
}

Fixture fixture(std::string id, RawPolytope p, ExpectedData e) {
  if (p.name.empty())
    p.name = id;
  return Fixture{std::move(id), PolytopeDocument{std::move(p), std::move(e)}};
}

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i)
    f *= i;
  return f;
}

} // namespace

RawPolytope simplex(std::size_t n) {
  RawPolytope p;
  p.name = "CP" + std::to_string(n);
  p.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, 0);
    v[i] = 1;
    p.normals.push_back(std::move(v));
    p.offsets.emplace_back(0);
  }
  p.normals.emplace_back(n, Integer(-1));
  p.offsets.emplace_back(-1);
  return p;
}

RawPolytope rectangle(long width, long height) {
  return make(width == height ? "square" : "rectangle", 2,
              {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
              {0, 0, Rational(-width), Rational(-height)});
}

RawPolytope hirzebruch(long a, long c) {
  return make("Hirzebruch a=" + std::to_string(a), 2,
              {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {0, 0, Rational(-c), -1});
}

RawPolytope pentagon() {
  return make("CP2 blown up at two points", 2,
              {{1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}}, {0, 0, -3, -2, -2});
}

std::vector<Fixture> bundled_corpus() {
  std::vector<Fixture> out;

  {
    RawPolytope seg = simplex(1);
    seg.name = "segment";
    out.push_back(fixture("segment", seg, {true, 2, {{"A1"}}, 2}));
  }
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back(fixture("cp" + std::to_string(n), simplex(n),
                          {true, n * (n + 1), {{"A" + std::to_string(n)}},
                           factorial(n + 1)}));
  out.push_back(fixture("square", rectangle(1, 1), {true, 4, {{"A1", "A1"}}, 8}));
  out.push_back(fixture("rectangle", rectangle(2, 1), {true, 4, {{"A1", "A1"}}, 4}));
  out.push_back(fixture("hirzebruch0", hirzebruch(0, 3),
                        {true, 4, {{"A1", "A1"}}, std::nullopt}));
  out.push_back(fixture("hirzebruch1", hirzebruch(1, 2),
                        {true, 2, {{"A1"}}, std::nullopt}));
  out.push_back(fixture("hirzebruch2", hirzebruch(2, 2),
                        {true, 2, {{"A1"}}, std::nullopt}));
  out.push_back(fixture("pentagon", pentagon(),
                        {true, 0, std::vector<std::string>{}, std::nullopt}));
  {
    RawPolytope p = product(simplex(2), simplex(1));
    out.push_back(fixture("cp2xcp1", p, {true, 8, {{"A2", "A1"}}, std::nullopt}));
  }
  {
    RawPolytope p = product(simplex(2), simplex(2));
    out.push_back(fixture("cp2xcp2", p, {true, 12, {{"A2", "A2"}}, std::nullopt}));
  }
  out.push_back(fixture("bad-triangle",
                        make("non-unimodular triangle", 2, {{1, 0}, {0, 1}, {-1, -2}},
                             {0, 0, -1}),
                        {false, std::nullopt, std::nullopt, std::nullopt}));
  out.push_back(fixture("redundant-square",
                        make("square with a redundant facet", 2,
                             {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}},
                             {0, 0, -1, -1, -5}),
                        {false, std::nullopt, std::nullopt, std::nullopt}));
  return out;
}

std::vector<Fixture> valid_corpus() {
  std::vector<Fixture> out;
  for (auto &f : bundled_corpus())
    if (f.document.expected.valid.value_or(true))
      out.push_back(std::move(f));
  return out;
}

std::vector<std::filesystem::path> write_corpus(const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto &f : bundled_corpus()) {
    Json doc = polytope_json(f.document.polytope);
    doc["expected"] = expected_json(f.document.expected);
    auto path = dir / (f.id + ".json");
    std::ofstream out(path);
    if (!out)
      throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    written.push_back(path);
  }
  return written;
}

} // namespace toricsym
