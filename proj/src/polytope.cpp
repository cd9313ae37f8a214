#include "toricsym/polytope.hpp"

#include "toricsym/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace toricsym {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxFacets = 64;

Mask to_mask(const FacetSet &s) {
  Mask m = 0;
  for (auto i : s)
    m |= Mask{1} << i;
  return m;
}

FacetSet from_mask(Mask m) {
  FacetSet s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1)
      s.push_back(i);
  return s;
}

std::string one_based(const FacetSet &s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? "," : "") << s[k] + 1;
  os << '}';
  return os.str();
}

std::string point_string(const RatCovector &u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < u.size(); ++k)
    os << (k ? ", " : "") << u[k].get_str();
  os << ')';
  return os.str();
}

// Calls f(subset) for every k-subset of {0..m-1} in lexicographic order.
template <class F> void for_each_subset(std::size_t m, std::size_t k, F &&f) {
  if (k > m)
    return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  for (;;) {
    f(static_cast<const std::vector<std::size_t> &>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

// Unique solution of <u, v_i> = a_i (i in rows), or nullopt if singular.
std::optional<RatCovector> solve_vertex(const RawPolytope &raw,
                                        const std::vector<std::size_t> &rows) {
  const std::size_t n = raw.n;
  std::vector<RatVector> a(n, RatVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = raw.normals[rows[r]][c];
    a[r][n] = raw.offsets[rows[r]];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[c], a[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  RatCovector u(n);
  for (std::size_t r = 0; r < n; ++r)
    u[r] = a[r][n] / a[r][r];
  return u;
}

void check_shape(const RawPolytope &raw) {
  if (raw.n < 1)
    throw MalformedInput("dimension n must be at least 1");
  if (raw.normals.size() != raw.offsets.size())
    throw MalformedInput("got " + std::to_string(raw.normals.size()) +
                         " normals but " + std::to_string(raw.offsets.size()) +
                         " offsets");
  if (raw.normals.size() > kMaxFacets)
    throw MalformedInput("at most " + std::to_string(kMaxFacets) +
                         " facets are supported");
  for (std::size_t i = 0; i < raw.normals.size(); ++i)
    if (raw.normals[i].size() != raw.n)
      throw MalformedInput("normal " + std::to_string(i + 1) + " has length " +
                           std::to_string(raw.normals[i].size()) +
                           ", expected n = " + std::to_string(raw.n));
}

IntMatrix rows_matrix(const RawPolytope &raw, const FacetSet &rows) {
  IntMatrix m(rows.size(), raw.n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < raw.n; ++c)
      m(r, c) = raw.normals[rows[r]][c];
  return m;
}

std::set<RatCovector> vertex_points(const std::vector<Vertex> &vs) {
  std::set<RatCovector> pts;
  for (const auto &v : vs)
    pts.insert(v.coords);
  return pts;
}

std::set<Mask> face_masks(const std::vector<Vertex> &vertices) {
  std::set<Mask> faces;
  for (const auto &v : vertices) {
    Mask full = to_mask(v.active);
    // every subset of the active set, including the empty set
    for (Mask s = full;; s = (s - 1) & full) {
      faces.insert(s);
      if (s == 0)
        break;
    }
  }
  return faces;
}

} // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::NonPrimitiveNormal:
    return "non-primitive-normal";
  case ViolationKind::Unbounded:
    return "unbounded";
  case ViolationKind::Empty:
    return "empty";
  case ViolationKind::RedundantInequality:
    return "redundant-inequality";
  case ViolationKind::NonSimpleVertex:
    return "non-simple-vertex";
  case ViolationKind::NonUnimodularVertex:
    return "non-unimodular-vertex";
  }
  return "unknown";
}

InvalidPolytope::InvalidPolytope(std::vector<Violation> violations)
    : std::runtime_error([&] {
        std::string s = "invalid Delzant polytope:";
        for (const auto &v : violations)
          s += "\n  - " + v.message;
        return s;
      }()),
      violations_(std::move(violations)) {}

DelzantPolytope::DelzantPolytope(RawPolytope raw, std::vector<Vertex> vertices)
    : raw_(std::move(raw)),
      normal_matrix_(IntMatrix::from_columns(raw_.normals, raw_.n)),
      vertices_(std::move(vertices)) {}

IntVector DelzantPolytope::pairings(std::span<const Integer> covector) const {
  IntVector out(m());
  for (std::size_t i = 0; i < m(); ++i)
    out[i] = dot(covector, raw_.normals[i]);
  return out;
}

std::vector<Vertex> enumerate_vertices(const RawPolytope &raw) {
  check_shape(raw);
  const std::size_t m = raw.normals.size();
  std::map<RatCovector, FacetSet> found;
  for_each_subset(m, raw.n, [&](const std::vector<std::size_t> &rows) {
    auto u = solve_vertex(raw, rows);
    if (!u || found.contains(*u))
      return;
    FacetSet active;
    for (std::size_t k = 0; k < m; ++k) {
      Rational s = dot(std::span<const Rational>(*u), raw.normals[k]);
      if (s < raw.offsets[k])
        return;
      if (s == raw.offsets[k])
        active.push_back(k);
    }
    found.emplace(std::move(*u), std::move(active));
  });
  std::vector<Vertex> vertices;
  vertices.reserve(found.size());
  for (auto &[coords, active] : found)
    vertices.push_back(Vertex{active, coords});
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex &a, const Vertex &b) { return a.active < b.active; });
  return vertices;
}

bool normals_positively_span(std::size_t n, std::span<const IntVector> normals) {
  if (normals.size() < n + 1)
    return false;
  IntMatrix all = IntMatrix::from_rows(normals, n);
  if (rank(all) < n)
    return false;
  // The recession cone is pointed; it is nonzero iff it has an extreme ray,
  // cut out by n - 1 independent tight constraints.
  bool spans = true;
  for_each_subset(normals.size(), n - 1, [&](const std::vector<std::size_t> &s) {
    if (!spans)
      return;
    IntMatrix tight(s.size(), n);
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t c = 0; c < n; ++c)
        tight(r, c) = normals[s[r]][c];
    auto ker = integer_kernel_basis(tight);
    if (ker.size() != 1)
      return;
    for (int sgn : {1, -1}) {
      bool in_cone = true;
      for (const auto &v : normals)
        if (sgn * dot(ker[0], v) < 0) {
          in_cone = false;
          break;
        }
      if (in_cone)
        spans = false;
    }
  });
  return spans;
}

std::vector<Violation> check(const RawPolytope &raw) {
  check_shape(raw);
  const std::size_t n = raw.n;
  const std::size_t m = raw.normals.size();
  std::vector<Violation> out;

  for (std::size_t i = 0; i < m; ++i) {
    Integer g = content(raw.normals[i]);
    if (g != 1)
      out.push_back({ViolationKind::NonPrimitiveNormal,
                     {i},
                     0,
                     {},
                     "normal " + std::to_string(i + 1) +
                         " is not primitive (gcd of entries = " + g.get_str() +
                         ")"});
  }

  if (m < n + 1) {
    out.push_back({ViolationKind::Unbounded,
                   {},
                   0,
                   {},
                   "P is unbounded: " + std::to_string(m) +
                       " facets cannot bound a polytope of dimension " +
                       std::to_string(n) + " (need m >= n + 1)"});
    return out;
  }
  if (!normals_positively_span(n, raw.normals)) {
    out.push_back({ViolationKind::Unbounded,
                   {},
                   0,
                   {},
                   "P is unbounded: the facet normals do not positively span "
                   "R^n"});
    return out;
  }

  auto vertices = enumerate_vertices(raw);
  if (vertices.empty()) {
    out.push_back({ViolationKind::Empty, {}, 0, {}, "P is empty"});
    return out;
  }

  std::vector<bool> at_simple(m, false), at_nonsimple(m, false);
  for (const auto &v : vertices) {
    if (v.active.size() != n) {
      for (auto i : v.active)
        at_nonsimple[i] = true;
      out.push_back({ViolationKind::NonSimpleVertex, v.active, 0, v.coords,
                     "P is not simple: vertex " + point_string(v.coords) +
                         " lies on " + std::to_string(v.active.size()) +
                         " facets " + one_based(v.active) + ", expected " +
                         std::to_string(n)});
      continue;
    }
    for (auto i : v.active)
      at_simple[i] = true;
    Integer d = determinant(rows_matrix(raw, v.active));
    if (d != 1 && d != -1)
      out.push_back({ViolationKind::NonUnimodularVertex, v.active, d, v.coords,
                     "normals " + one_based(v.active) + " at vertex " +
                         point_string(v.coords) +
                         " do not form a basis of Z^n (determinant " +
                         d.get_str() + ")"});
  }

  // A redundant inequality that touches P does so only at non-simple
  // vertices, so re-enumeration is needed only for those facets.
  const auto points = vertex_points(vertices);
  for (std::size_t i = 0; i < m; ++i) {
    bool redundant = false;
    if (!at_simple[i] && !at_nonsimple[i]) {
      redundant = true;
    } else if (!at_simple[i]) {
      RawPolytope reduced = raw;
      reduced.normals.erase(reduced.normals.begin() + static_cast<long>(i));
      reduced.offsets.erase(reduced.offsets.begin() + static_cast<long>(i));
      redundant = normals_positively_span(n, reduced.normals) &&
                  vertex_points(enumerate_vertices(reduced)) == points;
    }
    if (redundant)
      out.push_back({ViolationKind::RedundantInequality,
                     {i},
                     0,
                     {},
                     "inequality " + std::to_string(i + 1) +
                         " is redundant (removing it leaves P unchanged)"});
  }
  return out;
}

DelzantPolytope validate(const RawPolytope &raw) {
  auto violations = check(raw);
  if (!violations.empty())
    throw InvalidPolytope(std::move(violations));
  return DelzantPolytope(raw, enumerate_vertices(raw));
}

std::vector<FacetSet> minimal_nonfaces(const DelzantPolytope &p) {
  const auto faces = face_masks(p.vertices());
  std::set<Mask> minimal;
  for (Mask g : faces) {
    const std::size_t start = g ? 64 - std::countl_zero(g) : 0;
    for (std::size_t e = start; e < p.m(); ++e) {
      Mask s = g | (Mask{1} << e);
      if (faces.contains(s))
        continue;
      bool all_faces = true;
      for (Mask rest = s; rest; rest &= rest - 1) {
        Mask bit = rest & (~rest + 1);
        if (!faces.contains(s & ~bit)) {
          all_faces = false;
          break;
        }
      }
      if (all_faces)
        minimal.insert(s);
    }
  }
  std::vector<FacetSet> out;
  for (Mask s : minimal)
    out.push_back(from_mask(s));
  std::sort(out.begin(), out.end(), [](const FacetSet &a, const FacetSet &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Integer> f_vector(const DelzantPolytope &p) {
  const std::size_t n = p.n();
  std::vector<Integer> f(n + 1, 0);
  for (Mask s : face_masks(p.vertices())) {
    auto codim = static_cast<std::size_t>(std::popcount(s));
    f[n - codim] += 1;
  }
  return f;
}

std::vector<Integer> h_vector(const DelzantPolytope &p) {
  auto f = f_vector(p);
  const std::size_t n = p.n();
  std::vector<Integer> h(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = 0; k <= i; ++k) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), i, k);
      Integer term = f[i] * binom;
      h[k] += ((i - k) % 2 == 0) ? term : Integer(-term);
    }
  return h;
}

FaceStructure face_structure(const DelzantPolytope &p) {
  return FaceStructure{p.vertices(), minimal_nonfaces(p), f_vector(p)};
}

bool is_face(const DelzantPolytope &p, const FacetSet &facets) {
  return std::any_of(p.vertices().begin(), p.vertices().end(),
                     [&](const Vertex &v) {
                       return std::includes(v.active.begin(), v.active.end(),
                                            facets.begin(), facets.end());
                     });
}

RawPolytope product(const RawPolytope &a, const RawPolytope &b) {
  RawPolytope out;
  out.n = a.n + b.n;
  out.name = a.name + " x " + b.name;
  for (const auto &v : a.normals) {
    IntVector w(out.n, 0);
    std::copy(v.begin(), v.end(), w.begin());
    out.normals.push_back(std::move(w));
  }
  for (const auto &v : b.normals) {
    IntVector w(out.n, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(a.n));
    out.normals.push_back(std::move(w));
  }
  out.offsets = a.offsets;
  out.offsets.insert(out.offsets.end(), b.offsets.begin(), b.offsets.end());
  return out;
}

} // namespace toricsym
