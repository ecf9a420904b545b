#pragma once

#include <string>

#include <json.hpp>

#include "pqf/formspace.hpp"
#include "pqf/seed.hpp"
#include "pqf/shortvec.hpp"
#include "pqf/voronoi.hpp"

namespace pqf {

using Json = nlohmann::json;

// Rationals render as exact "num" / "num/den" strings; a field element is
// the pair [a, b] of its {1, w} coordinates.

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json felem_to_json(const FElem& x);
FElem felem_from_json(const Field& f, const Json& j);

Json fvec_to_json(const FVec& v);
FVec fvec_from_json(const Field& f, const Json& j);

Json form_to_json(const FormOverF& f);
FormOverF form_from_json(const Field& fld, const Json& j);

Json gram_to_json(const RatMat& g);
RatMat gram_from_json(const Json& j);

Json minimal_to_json(const Field& fld, int n, const MinimalData& md);

Json seed_to_json(const SeedData& s);

/// The classes file: field, normalization tag, class records (form, minimal
/// vectors, fingerprint, conjugate-partner diagnostic), adjacency triples.
Json enumeration_to_json(const EnumerationResult& r);

Json checkpoint_to_json(const Checkpoint& c);
Checkpoint checkpoint_from_json(const Json& j);

/// Atomic file save (write to temp, rename over the target).
void save_json_file(const std::string& path, const Json& j);
Json load_json_file(const std::string& path);

}  // namespace pqf
