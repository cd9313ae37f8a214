#include "toricsym/io.hpp"

#include "toricsym/errors.hpp"

#include <fstream>
#include <sstream>

namespace toricsym {

namespace {

Integer parse_integer(const Json &j, const std::string &where) {
  if (j.is_number_integer())
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) {
    Integer x;
    x = std::to_string(j.get<std::uint64_t>());
    return x;
  }
  if (j.is_string()) {
    try {
      Rational q = parse_rational(j.get<std::string>());
      if (q.get_den() == 1)
        return q.get_num();
    } catch (const std::invalid_argument &) {
    }
  }
  throw MalformedInput(where + ": expected an integer, got " + j.dump());
}

Rational parse_offset(const Json &j, const std::string &where) {
  if (j.is_number_integer() || j.is_number_unsigned())
    return Rational(parse_integer(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
      throw MalformedInput(where + ": " + e.what());
    }
  }
  throw MalformedInput(where + ": expected an integer or a \"p/q\" string, got " +
                       j.dump());
}

const Json &require(const Json &doc, const char *key) {
  if (!doc.contains(key))
    throw MalformedInput(std::string("missing field '") + key + "'");
  return doc.at(key);
}

ExpectedData parse_expected(const Json &e) {
  if (!e.is_object())
    throw MalformedInput("'expected' must be an object");
  ExpectedData out;
  if (e.contains("valid")) {
    if (!e["valid"].is_boolean())
      throw MalformedInput("expected.valid must be a boolean");
    out.valid = e["valid"].get<bool>();
  }
  auto count = [&](const char *key) -> std::optional<std::size_t> {
    if (!e.contains(key))
      return std::nullopt;
    if (!e[key].is_number_unsigned())
      throw MalformedInput(std::string("expected.") + key +
                           " must be a nonnegative integer");
    return e[key].get<std::size_t>();
  };
  out.root_count = count("root_count");
  out.aut_order = count("aut_order");
  if (e.contains("factor_types")) {
    if (!e["factor_types"].is_array())
      throw MalformedInput("expected.factor_types must be an array");
    std::vector<std::string> types;
    for (const auto &t : e["factor_types"]) {
      if (!t.is_string())
        throw MalformedInput("expected.factor_types entries must be strings");
      types.push_back(t.get<std::string>());
    }
    out.factor_types = std::move(types);
  }
  return out;
}

} // namespace

PolytopeDocument parse_polytope_document(const Json &doc) {
  if (!doc.is_object())
    throw MalformedInput("polytope document must be a JSON object");
  PolytopeDocument out;
  RawPolytope &p = out.polytope;

  const Json &n = require(doc, "n");
  if (!n.is_number_unsigned() || n.get<std::uint64_t>() < 1)
    throw MalformedInput("'n' must be a positive integer");
  p.n = n.get<std::size_t>();

  const Json &normals = require(doc, "normals");
  if (!normals.is_array())
    throw MalformedInput("'normals' must be an array of integer tuples");
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const std::string where = "normal " + std::to_string(i + 1);
    if (!normals[i].is_array())
      throw MalformedInput(where + " must be an array");
    IntVector v;
    for (const auto &x : normals[i])
      v.push_back(parse_integer(x, where));
    if (v.size() != p.n)
      throw MalformedInput(where + " has length " + std::to_string(v.size()) +
                           ", expected n = " + std::to_string(p.n));
    p.normals.push_back(std::move(v));
  }

  const Json &offsets = require(doc, "offsets");
  if (!offsets.is_array())
    throw MalformedInput("'offsets' must be an array");
  for (std::size_t i = 0; i < offsets.size(); ++i)
    p.offsets.push_back(parse_offset(offsets[i], "offset " + std::to_string(i + 1)));
  if (p.offsets.size() != p.normals.size())
    throw MalformedInput("got " + std::to_string(p.normals.size()) +
                         " normals but " + std::to_string(p.offsets.size()) +
                         " offsets");

  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw MalformedInput("'name' must be a string");
    p.name = doc["name"].get<std::string>();
  }
  if (doc.contains("expected"))
    out.expected = parse_expected(doc["expected"]);
  return out;
}

PolytopeDocument parse_polytope_text(const std::string &text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw MalformedInput(std::string("not a valid JSON document: ") + e.what());
  }
  return parse_polytope_document(doc);
}

PolytopeDocument read_polytope_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw MalformedInput("cannot open input file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_polytope_text(ss.str());
}

Json integer_json(const Integer &x) {
  if (x.fits_slong_p())
    return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json rational_json(const Rational &q) {
  if (q.get_den() == 1)
    return integer_json(q.get_num());
  return Json(q.get_str());
}

Json matrix_json(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(integer_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json facet_set_json(const FacetSet &s) {
  Json a = Json::array();
  for (auto i : s)
    a.push_back(i);
  return a;
}

namespace {

Json vector_json(std::span<const Integer> v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(integer_json(x));
  return a;
}

Json rational_vector_json(std::span<const Rational> v) {
  Json a = Json::array();
  for (const auto &x : v)
    a.push_back(rational_json(x));
  return a;
}

Json integers_json(const std::vector<Integer> &v) {
  return vector_json(std::span<const Integer>(v));
}

} // namespace

Json polytope_json(const RawPolytope &p) {
  Json j;
  j["name"] = p.name;
  j["n"] = p.n;
  Json normals = Json::array();
  for (const auto &v : p.normals)
    normals.push_back(vector_json(v));
  j["normals"] = std::move(normals);
  j["offsets"] = rational_vector_json(p.offsets);
  return j;
}

Json expected_json(const ExpectedData &e) {
  Json j = Json::object();
  if (e.valid)
    j["valid"] = *e.valid;
  if (e.root_count)
    j["root_count"] = *e.root_count;
  if (e.factor_types)
    j["factor_types"] = *e.factor_types;
  if (e.aut_order)
    j["aut_order"] = *e.aut_order;
  return j;
}

Json violations_json(const std::vector<Violation> &violations) {
  Json a = Json::array();
  for (const auto &v : violations) {
    Json j;
    j["kind"] = to_string(v.kind);
    j["facets"] = facet_set_json(v.facets);
    if (v.kind == ViolationKind::NonUnimodularVertex)
      j["determinant"] = integer_json(v.determinant);
    if (!v.point.empty())
      j["point"] = rational_vector_json(v.point);
    j["message"] = v.message;
    a.push_back(std::move(j));
  }
  return a;
}

Json faces_json(const DelzantPolytope &p, const FaceStructure &faces) {
  Json j;
  Json verts = Json::array();
  for (const auto &v : faces.vertices) {
    Json vj;
    vj["active"] = facet_set_json(v.active);
    vj["coords"] = rational_vector_json(v.coords);
    verts.push_back(std::move(vj));
  }
  j["vertices"] = std::move(verts);
  Json nf = Json::array();
  for (const auto &s : faces.minimal_nonfaces)
    nf.push_back(facet_set_json(s));
  j["minimal_nonfaces"] = std::move(nf);
  j["f_vector"] = integers_json(faces.f_vector);
  j["h_vector"] = integers_json(h_vector(p));
  return j;
}

Json roots_json(const RootSystem &r) {
  Json j;
  j["count"] = r.roots.size();
  j["positivity_rule"] =
      "alpha > 0 iff L(alpha) = sum_l l * <alpha, v_l> > 0, i.e. plus > minus";
  Json items = Json::array();
  for (const auto &root : r.roots) {
    Json rj;
    rj["alpha"] = vector_json(root.alpha);
    rj["plus"] = root.plus;
    rj["minus"] = root.minus;
    items.push_back(std::move(rj));
  }
  j["items"] = std::move(items);
  j["weyl_order"] = integer_json(weyl_order(r));
  j["weyl_order_formula"] = weyl_order_formula(r);
  return j;
}

Json factors_json(const RootSystem &r) {
  Json a = Json::array();
  for (const auto &f : r.factors) {
    Json j;
    j["type"] = f.type();
    j["rank"] = f.rank;
    j["index_set"] = facet_set_json(f.index_set);
    j["roots"] = f.roots;
    j["simple_roots"] = f.simple_roots;
    j["cartan"] = matrix_json(f.cartan);
    a.push_back(std::move(j));
  }
  return a;
}

Json weyl_json(const std::vector<WeylElement> &weyl) {
  Json a = Json::array();
  for (const auto &w : weyl) {
    Json j;
    j["word"] = w.word;
    j["h2_action"] = matrix_json(w.h2_action);
    j["h2_dual_action"] = matrix_json(w.h2_dual);
    j["facet_permutation"] = w.facet_permutation;
    a.push_back(std::move(j));
  }
  return a;
}

Json aut_json(const std::vector<PolytopeAutomorphism> &aut,
              const ComponentGroupReport &report) {
  Json j;
  j["order"] = aut.size();
  Json elems = Json::array();
  for (const auto &g : aut) {
    Json gj;
    gj["sigma"] = g.sigma;
    gj["rho_star_h2"] = matrix_json(g.rho_star);
    gj["pullback_h2dual"] = matrix_json(g.pullback());
    gj["u0"] = rational_vector_json(g.u0);
    elems.push_back(std::move(gj));
  }
  j["elements"] = std::move(elems);
  Json c;
  c["aut_order"] = integer_json(report.aut_order);
  c["weyl_image_order"] = integer_json(report.weyl_image_order);
  c["component_count"] = integer_json(report.component_count);
  c["weyl_normal_in_aut"] = report.weyl_normal_in_aut;
  c["weyl_image"] = report.weyl_image;
  c["coset_representatives"] = report.coset_representatives;
  if (report.weyl_normal_in_aut)
    c["quotient_table"] = report.quotient_table;
  else
    c["warning"] = "Weyl image is not normal in Aut(P); only the coset count is reported";
  j["component_report"] = std::move(c);
  return j;
}

Json cohomology_json(const CohomologyPresentation &c) {
  Json j;
  j["mode"] = c.mode == CohomologyMode::Equivariant ? "equivariant" : "ordinary";
  j["generators"] = c.generators;
  j["generator_degree"] = 2;
  Json mono = Json::array();
  for (const auto &s : c.monomial_relations)
    mono.push_back(facet_set_json(s));
  j["monomial_relations"] = std::move(mono);
  j["linear_relations"] = matrix_json(c.linear_relations);
  if (c.mode == CohomologyMode::Ordinary) {
    j["betti"] = integers_json(c.betti);
    Json ident = Json::array();
    for (const auto &s : c.identified_generators)
      ident.push_back(facet_set_json(s));
    j["identified_generators"] = std::move(ident);
  }
  return j;
}

Json moment_angle_json(const MomentAngleData &ma) {
  Json j;
  j["kernel_basis"] = matrix_json(ma.kernel_basis);
  Json rels = Json::array();
  for (const auto &r : ma.zp_relations) {
    Json rj;
    rj["quadratic"] = rational_vector_json(r.quadratic);
    rj["constant"] = rational_json(r.constant);
    rels.push_back(std::move(rj));
  }
  j["zp_relations"] = std::move(rels);
  j["kerv_exponents"] = matrix_json(ma.kerv_exponents);
  j["kerv_rank"] = ma.kerv_exponents.rows();
  return j;
}

Json gmax_json(const GmaxDescriptor &g) {
  Json j;
  Json blocks = Json::array();
  for (const auto &b : g.blocks)
    blocks.push_back(facet_set_json(b));
  j["blocks"] = std::move(blocks);
  j["block_sizes"] = g.block_sizes;
  j["free_indices"] = facet_set_json(g.free_indices);
  j["identity_component_dim"] = integer_json(g.identity_component_dim);
  j["weyl_order"] = integer_json(g.weyl_order);
  j["component_count"] = integer_json(g.component_count);
  Json cond;
  cond["roots_equal_R(P)"] = {{"holds", g.roots_realized},
                              {"status", "satisfied by construction"}};
  cond["D_surjective"] = {{"holds", g.d_surjective},
                          {"status", "verified via Weyl embedding and Aut(P) coset count"}};
  j["conditions"] = std::move(cond);
  j["summary"] = g.summary;
  return j;
}

Json document_header(const std::string &command) {
  Json j;
  j["format"] = "toricsym";
  j["version"] = 1;
  j["command"] = command;
  j["index_base"] = 0;
  j["conventions"] =
      "facet indices are 0-based; covectors are elements of H^2(BT) = (Z^n)^*; "
      "rho_star_h2 acts on H_2(BT) = Z^n, pullback_h2dual is its transpose "
      "acting on H^2(BT)";
  return j;
}

std::string facet_set_text(const FacetSet &s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? "," : "") << s[k] + 1;
  os << '}';
  return os.str();
}

std::string covector_text(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k)
    os << (k ? ", " : "") << v[k].get_str();
  os << ')';
  return os.str();
}

std::string rational_vector_text(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k)
    os << (k ? ", " : "") << v[k].get_str();
  os << ')';
  return os.str();
}

std::string permutation_text(const Permutation &s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? " " : "") << s[k] + 1;
  os << ']';
  return os.str();
}

} // namespace toricsym
