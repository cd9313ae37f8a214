#include "toricsym/cli.hpp"

#include "toricsym/corpus.hpp"
#include "toricsym/errors.hpp"
#include "toricsym/io.hpp"
#include "toricsym/polytope.hpp"
#include "toricsym/rootsys.hpp"
#include "toricsym/symmetry.hpp"
#include "toricsym/topology.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

namespace toricsym::cli {

namespace {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::string input;
  Format format = Format::Text;
  bool equivariant = false;
  Integer weyl_cap = kDefaultWeylCap;
  std::string corpus_dir = "fixtures";
};

std::string condition_name(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::NonPrimitiveNormal:
    return "facet normals must be primitive integer vectors";
  case ViolationKind::Unbounded:
    return "P must be bounded";
  case ViolationKind::Empty:
    return "P must be nonempty";
  case ViolationKind::RedundantInequality:
    return "no redundant inequality";
  case ViolationKind::NonSimpleVertex:
    return "P must be simple (exactly n facets meet at each vertex)";
  case ViolationKind::NonUnimodularVertex:
    return "non-singularity: the n normals at each vertex form a basis of Z^n";
  }
  return "";
}

// Everything derivable from a validated polytope, computed on demand.
class Analysis {
public:
  Analysis(const DelzantPolytope &p, const RunConfig &cfg) : p_(p), cfg_(cfg) {}

  const FaceStructure &faces() {
    if (!faces_)
      faces_ = face_structure(p_);
    return *faces_;
  }
  const RootSystem &roots() {
    if (!roots_)
      roots_ = compute_roots(p_);
    return *roots_;
  }
  const std::vector<WeylElement> &weyl() {
    if (!weyl_)
      weyl_ = weyl_group(p_, roots(), cfg_.weyl_cap);
    return *weyl_;
  }
  const std::vector<PolytopeAutomorphism> &aut() {
    if (!aut_)
      aut_ = compute_aut(p_);
    return *aut_;
  }
  const ComponentGroupReport &report() {
    if (!report_) {
      report_ = weyl_embedding(p_, roots(), weyl(), aut());
      for (const auto &g : aut())
        induced_sigma_action(p_, faces().minimal_nonfaces, g);
    }
    return *report_;
  }
  const MomentAngleData &moment_angle_data() {
    if (!ma_) {
      ma_ = moment_angle(p_);
      // columns i and j of the kernel basis agree for every root
      for (const auto &r : roots().roots)
        for (std::size_t k = 0; k < ma_->kernel_basis.rows(); ++k)
          if (ma_->kernel_basis(k, r.plus) != ma_->kernel_basis(k, r.minus))
            throw InvariantViolation("kernel basis columns differ across the "
                                     "witness pair of a root");
    }
    return *ma_;
  }
  CohomologyPresentation cohomology_presentation(CohomologyMode mode) {
    return cohomology(p_, faces().minimal_nonfaces, roots(), mode);
  }
  const GmaxDescriptor &gmax() {
    if (!gmax_) {
      gmax_ = gmax_descriptor(p_, roots(), report());
      if (recount_identity_dim(p_, roots(), moment_angle_data()) !=
          gmax_->identity_component_dim)
        throw InvariantViolation("independent recount of dim G_max^0 disagrees");
    }
    return *gmax_;
  }

private:
  const DelzantPolytope &p_;
  const RunConfig &cfg_;
  std::optional<FaceStructure> faces_;
  std::optional<RootSystem> roots_;
  std::optional<std::vector<WeylElement>> weyl_;
  std::optional<std::vector<PolytopeAutomorphism>> aut_;
  std::optional<ComponentGroupReport> report_;
  std::optional<MomentAngleData> ma_;
  std::optional<GmaxDescriptor> gmax_;
};

std::string polytope_text(const DelzantPolytope &p) {
  std::ostringstream os;
  os << "polytope " << (p.name().empty() ? "(unnamed)" : p.name()) << ": n = "
     << p.n() << ", m = " << p.m() << "  (facet indices are 1-based)\n";
  for (std::size_t i = 0; i < p.m(); ++i)
    os << "  facet " << i + 1 << ": <u, " << covector_text(p.normal(i))
       << "> >= " << p.offset(i).get_str() << '\n';
  return os.str();
}

std::string faces_text(const DelzantPolytope &p, const FaceStructure &f) {
  std::ostringstream os;
  os << "vertices (" << f.vertices.size() << "):\n";
  for (const auto &v : f.vertices)
    os << "  " << facet_set_text(v.active) << " at "
       << rational_vector_text(v.coords) << '\n';
  os << "minimal nonfaces:";
  for (const auto &s : f.minimal_nonfaces)
    os << ' ' << facet_set_text(s);
  os << "\nf-vector: " << covector_text(f.f_vector)
     << "\nh-vector: " << covector_text(h_vector(p)) << '\n';
  return os.str();
}

std::string roots_text(const RootSystem &r) {
  std::ostringstream os;
  os << "R(P): " << r.roots.size() << " roots\n";
  for (const auto &root : r.roots)
    os << "  " << covector_text(root.alpha) << "  witness (" << root.plus + 1
       << ", " << root.minus + 1 << ")\n";
  os << "factors:";
  if (r.factors.empty())
    os << " none";
  for (const auto &f : r.factors)
    os << ' ' << f.type() << ' ' << facet_set_text(f.index_set);
  os << "\nWeyl group order: " << weyl_order(r).get_str() << " ("
     << weyl_order_formula(r) << ")\n";
  os << "positivity rule: alpha > 0 iff its +1 facet index exceeds its -1 "
        "facet index\n";
  return os.str();
}

std::string aut_text(const std::vector<PolytopeAutomorphism> &aut,
                     const ComponentGroupReport &rep) {
  std::ostringstream os;
  os << "Aut(P): order " << aut.size() << '\n';
  for (std::size_t k = 0; k < aut.size(); ++k) {
    const auto &g = aut[k];
    os << "  #" << k + 1 << " sigma " << permutation_text(g.sigma)
       << "  rho_* on H_2 " << to_string(g.rho_star) << "  u0 "
       << rational_vector_text(g.u0) << '\n';
  }
  os << "Weyl image order: " << rep.weyl_image_order.get_str()
     << (rep.weyl_normal_in_aut ? " (normal)" : " (WARNING: not normal)") << '\n'
     << "component count |Aut(P)/W|: " << rep.component_count.get_str() << '\n'
     << "coset representatives:";
  for (auto c : rep.coset_representatives)
    os << " #" << c + 1;
  os << '\n';
  return os.str();
}

std::string cohomology_text(const DelzantPolytope &p, const CohomologyPresentation &c) {
  std::ostringstream os;
  const bool eq = c.mode == CohomologyMode::Equivariant;
  os << (eq ? "H_T^*(M)" : "H^*(M)") << " = Z[";
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    os << (i ? ", " : "") << c.generators[i];
  os << "] / I, generators of degree 2\n";
  os << "monomial relations:\n";
  for (const auto &s : c.monomial_relations) {
    os << "  ";
    for (std::size_t k = 0; k < s.size(); ++k)
      os << (k ? "*" : "") << c.generators[s[k]];
    os << " = 0\n";
  }
  if (!eq) {
    os << "linear relations:\n";
    for (std::size_t k = 0; k < c.linear_relations.rows(); ++k) {
      os << "  ";
      bool first = true;
      for (std::size_t i = 0; i < p.m(); ++i) {
        const Integer &x = c.linear_relations(k, i);
        if (x == 0)
          continue;
        if (first)
          os << (x < 0 ? "-" : "");
        else
          os << (x < 0 ? " - " : " + ");
        Integer ax = abs(x);
        if (ax != 1)
          os << ax.get_str() << '*';
        os << c.generators[i];
        first = false;
      }
      os << " = 0   (u = e" << k + 1 << "*)\n";
    }
    os << "Betti numbers b_0, b_2, ...: " << covector_text(c.betti) << '\n';
    if (!c.identified_generators.empty()) {
      os << "identified generators:";
      for (const auto &s : c.identified_generators)
        os << ' ' << facet_set_text(s);
      os << '\n';
    }
  }
  return os.str();
}

std::string moment_angle_text(const DelzantPolytope &p, const MomentAngleData &ma) {
  std::ostringstream os;
  os << "Ker pi_* basis (rank " << ma.kernel_basis.rows()
     << "): " << to_string(ma.kernel_basis) << '\n';
  os << "Z_P relations:\n";
  for (const auto &r : ma.zp_relations) {
    os << "  ";
    bool first = true;
    for (std::size_t i = 0; i < p.m(); ++i) {
      const Rational &q = r.quadratic[i];
      if (q == 0)
        continue;
      os << (first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + "));
      Rational aq = abs(q);
      if (aq != 1)
        os << aq.get_str() << '*';
      os << "|z" << i + 1 << "|^2";
      first = false;
    }
    os << " = " << r.constant.get_str() << '\n';
  }
  os << "Ker V = { g in (S^1)^" << p.m()
     << " : g = exp(2 pi i t B), t in R^" << ma.kerv_exponents.rows()
     << " }, a connected subtorus of rank " << ma.kerv_exponents.rows() << '\n';
  return os.str();
}

std::string gmax_text(const GmaxDescriptor &g) {
  std::ostringstream os;
  os << g.summary << '\n';
  os << "  free indices: " << facet_set_text(g.free_indices) << '\n';
  os << "  condition Delta(G_max) = R(P): "
     << (g.roots_realized ? "holds (by construction)" : "FAILS") << '\n';
  os << "  condition D surjective: "
     << (g.d_surjective ? "holds (Weyl embedding + Aut(P) coset count)" : "FAILS")
     << '\n';
  return os.str();
}

void emit(std::ostream &out, const RunConfig &cfg, const Json &doc,
          const std::string &text) {
  if (cfg.format == Format::Json)
    out << doc.dump(2) << '\n';
  else
    out << text;
}

int run_command(const RunConfig &cfg, std::ostream &out) {
  if (cfg.command == "corpus") {
    auto paths = write_corpus(cfg.corpus_dir);
    for (const auto &p : paths)
      out << p.string() << '\n';
    return kOk;
  }

  PolytopeDocument doc = read_polytope_file(cfg.input);
  Json json = document_header(cfg.command);
  json["polytope"] = polytope_json(doc.polytope);

  auto violations = check(doc.polytope);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid Delzant polytope"
       << (doc.polytope.name.empty() ? "" : " '" + doc.polytope.name + "'") << ":\n";
    for (const auto &v : violations)
      os << "  - [" << condition_name(v.kind) << "] " << v.message << '\n';
    json["validation"] = {{"valid", false}, {"violations", violations_json(violations)}};
    emit(out, cfg, json, os.str());
    return kInvalidPolytope;
  }
  const DelzantPolytope p = validate(doc.polytope);
  Analysis a(p, cfg);
  std::string text = polytope_text(p);
  json["validation"] = {{"valid", true}, {"violations", Json::array()}};

  const auto &c = cfg.command;
  const bool all = c == "report";
  if (c == "validate" || all) {
    json["faces"] = faces_json(p, a.faces());
    text += faces_text(p, a.faces());
    if (c == "validate")
      text += "valid Delzant polytope\n";
  }
  if (c == "roots" || all) {
    json["roots"] = roots_json(a.roots());
    json["factors"] = factors_json(a.roots());
    text += roots_text(a.roots());
  }
  if (c == "aut" || all) {
    json["aut"] = aut_json(a.aut(), a.report());
    text += aut_text(a.aut(), a.report());
  }
  if (c == "cohomology" || all) {
    auto mode = cfg.equivariant ? CohomologyMode::Equivariant : CohomologyMode::Ordinary;
    if (all) {
      Json both;
      both["equivariant"] = cohomology_json(a.cohomology_presentation(CohomologyMode::Equivariant));
      both["ordinary"] = cohomology_json(a.cohomology_presentation(CohomologyMode::Ordinary));
      json["cohomology"] = std::move(both);
      text += cohomology_text(p, a.cohomology_presentation(CohomologyMode::Equivariant));
      text += cohomology_text(p, a.cohomology_presentation(CohomologyMode::Ordinary));
    } else {
      auto pres = a.cohomology_presentation(mode);
      json["cohomology"] = cohomology_json(pres);
      text += cohomology_text(p, pres);
    }
  }
  if (c == "moment-angle" || all) {
    json["moment_angle"] = moment_angle_json(a.moment_angle_data());
    text += moment_angle_text(p, a.moment_angle_data());
  }
  if (c == "gmax" || all) {
    json["gmax"] = gmax_json(a.gmax());
    text += gmax_text(a.gmax());
  }
  emit(out, cfg, json, text);
  return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app{"Symmetry data of Delzant polytopes: roots, Weyl group, Aut(P), "
               "cohomology presentations and G_max"};
  app.name("toricsym");
  std::string format = "text";
  std::optional<std::string> cap_flag;
  app.add_option("command", cfg.command, "command to run")
      ->required()
      ->check(CLI::IsMember({"validate", "roots", "aut", "cohomology",
                             "moment-angle", "gmax", "report", "corpus"}));
  app.add_option("input", cfg.input, "polytope document (JSON)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "json-like"}));
  app.add_flag("--equivariant", cfg.equivariant,
               "cohomology: emit the equivariant presentation");
  app.add_option("--weyl-cap", cap_flag, "largest Weyl group order to enumerate");
  app.add_option("--out", cfg.corpus_dir, "corpus: output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;

  try {
    std::optional<std::string> cap_text = cap_flag;
    if (!cap_text)
      if (const char *env = std::getenv("TORICSYM_WEYL_CAP"))
        cap_text = env;
    if (cap_text) {
      Rational q = parse_rational(*cap_text);
      if (q.get_den() != 1 || q < 1)
        throw std::invalid_argument("bad Weyl cap");
      cfg.weyl_cap = q.get_num();
    }
  } catch (const std::invalid_argument &) {
    err << "toricsym: Weyl order cap must be a positive integer\n";
    return kMalformedInput;
  }
  if (cfg.command != "corpus" && cfg.input.empty()) {
    err << "toricsym: command '" << cfg.command << "' needs an input file\n";
    return kMalformedInput;
  }

  try {
    return run_command(cfg, out);
  } catch (const MalformedInput &e) {
    err << "toricsym: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const InvalidPolytope &e) {
    err << "toricsym: " << e.what() << '\n';
    return kInvalidPolytope;
  } catch (const InvariantViolation &e) {
    err << "toricsym: internal invariant violated: " << e.what() << '\n'
        << e.dump();
    return kInvariantViolation;
  } catch (const WeylOrderTooLarge &e) {
    err << "toricsym: " << e.what()
        << " (raise it with --weyl-cap or TORICSYM_WEYL_CAP)\n";
    return kWeylOrderTooLarge;
  }
}

} // namespace toricsym::cli
