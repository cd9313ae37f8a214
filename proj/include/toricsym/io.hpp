#pragma once

// Reading polytope documents and writing the structured / text reports.
//
// Structured documents use 0-based facet indices; text output uses 1-based
// indices.  Integers that fit in 64 bits are written as JSON numbers, larger
// ones as decimal strings.  Rationals with denominator 1 are written as
// integers, all others as "p/q" strings.

#include "toricsym/polytope.hpp"
#include "toricsym/rootsys.hpp"
#include "toricsym/symmetry.hpp"
#include "toricsym/topology.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace toricsym {

using Json = nlohmann::ordered_json;

/// Expected values a fixture document may carry under "expected".
struct ExpectedData {
  std::optional<bool> valid;
  std::optional<std::size_t> root_count;
  std::optional<std::vector<std::string>> factor_types;
  std::optional<std::size_t> aut_order;

  bool operator==(const ExpectedData &) const = default;
};

struct PolytopeDocument {
  RawPolytope polytope;
  ExpectedData expected;
};

/// Parses {"n", "normals", "offsets", ["name"], ["expected"]}.  Throws
/// MalformedInput on any shape or syntax problem.
PolytopeDocument parse_polytope_document(const Json &doc);
PolytopeDocument parse_polytope_text(const std::string &text);
PolytopeDocument read_polytope_file(const std::filesystem::path &path);

Json integer_json(const Integer &x);
Json rational_json(const Rational &q);
Json matrix_json(const IntMatrix &m);
Json facet_set_json(const FacetSet &s);

Json polytope_json(const RawPolytope &p);
Json expected_json(const ExpectedData &e);
Json violations_json(const std::vector<Violation> &violations);
Json faces_json(const DelzantPolytope &p, const FaceStructure &faces);
Json roots_json(const RootSystem &r);
Json factors_json(const RootSystem &r);
Json weyl_json(const std::vector<WeylElement> &weyl);
Json aut_json(const std::vector<PolytopeAutomorphism> &aut,
              const ComponentGroupReport &report);
Json cohomology_json(const CohomologyPresentation &c);
Json moment_angle_json(const MomentAngleData &ma);
Json gmax_json(const GmaxDescriptor &g);

/// Header fields shared by every structured document.
Json document_header(const std::string &command);

std::string facet_set_text(const FacetSet &s); // 1-based, "{1,3}"
std::string covector_text(std::span<const Integer> v);
std::string rational_vector_text(std::span<const Rational> v);
std::string permutation_text(const Permutation &s); // 1-based image list

} // namespace toricsym
