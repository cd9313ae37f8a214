#pragma once

// Bundled fixture polytopes.

#include "toricsym/io.hpp"
#include "toricsym/polytope.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace toricsym {

struct Fixture {
  std::string id;
  PolytopeDocument document;
};

/// Standard simplex: v_i = e_i, v_{n+1} = -(e_1 + ... + e_n), offsets
/// (0, ..., 0, -1).  M = CP^n.
RawPolytope simplex(std::size_t n);
/// Unit square / rectangle [0, w] x [0, h].
RawPolytope rectangle(long width, long height);
/// v = (e_1, e_2, -e_1 + a e_2, -e_2) with offsets (0, 0, -c, -1).
RawPolytope hirzebruch(long a, long c);
/// CP^2 blown up at two torus-fixed points.
RawPolytope pentagon();

std::vector<Fixture> bundled_corpus();
/// Only the fixtures expected to validate.
std::vector<Fixture> valid_corpus();

/// Writes one <id>.json per fixture; returns the paths written.
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path &dir);

} // namespace toricsym
