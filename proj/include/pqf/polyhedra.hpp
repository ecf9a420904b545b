#pragma once

#include <vector>

#include "pqf/rational.hpp"

namespace pqf {

/// Polyhedral cone given by generators (here: evaluation vectors of the
/// minimal vectors of a perfect form).  Full-dimensional and pointed in
/// every production use.
struct Cone {
  int ambient_dim = 0;
  std::vector<RatVec> generators;
};

/// Supporting hyperplane of a full-dimensional cone.  The normal is
/// primitive integral and points inward: normal.g >= 0 for every generator,
/// with equality exactly on the incident ones.
struct Facet {
  RatVec normal;
  std::vector<int> incident;
};

/// Complete irredundant facet list via the incremental double description
/// method, entirely in exact rational arithmetic; facets come back sorted
/// lexicographically by normal.  Throws std::domain_error when the cone is
/// not full-dimensional (upstream this means a non-perfect form).
std::vector<Facet> dual_description(const Cone& cone);

/// Point containment against a computed facet list.
bool cone_contains(const Cone& cone, const std::vector<Facet>& facets,
                   const RatVec& point);

/// Scales a nonzero rational vector to primitive integral entries without
/// flipping its direction.
RatVec primitive_direction(const RatVec& v);

}  // namespace pqf
