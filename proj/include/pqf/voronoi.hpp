#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqf/formspace.hpp"
#include "pqf/polyhedra.hpp"
#include "pqf/seed.hpp"
#include "pqf/shortvec.hpp"

namespace pqf {

/// Raised when the class cap is hit; enumeration never returns a silently
/// truncated result.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical representative of one equivalence class of perfect forms,
/// normalized to minimum 1, with its derived data.
struct PerfectClass {
  FormOverF form;
  RatVec coords;  // SymBasis coordinates of form
  MinimalData minimal;
  Cone cone;                  // generators c(v), one per minimal vector
  std::vector<Facet> facets;  // sorted, inward normals
  std::string fingerprint;
  int discovery_index = 0;
};

/// Serializable enumeration state: everything derived (minimal vectors,
/// cones, facets, fingerprints) is recomputed on resume.
struct Checkpoint {
  Field fld;
  int expanded = 0;  // classes [0, expanded) are fully explored
  std::vector<FormOverF> forms;
  std::vector<std::array<int, 3>> adjacency;
};

struct EnumerationOptions {
  int jobs = 1;
  int class_cap = 10000;
  bool progress = false;  // stderr progress lines
  /// Called after every class expansion when set.
  std::function<void(const Checkpoint&)> checkpoint_save;
  /// Resume state; must match the field being enumerated.
  std::optional<Checkpoint> resume;
};

struct EnumerationResult {
  Field fld;
  std::vector<PerfectClass> classes;
  std::vector<std::array<int, 3>> adjacency;  // (from, facet index, to)
  /// Diagnostic only: index of the class holding the entrywise Galois
  /// conjugate of each representative (self-paired classes map to
  /// themselves).  Conjugate classes are reported, never merged.
  std::vector<int> galois_partner;
};

/// Scales a positive-definite form so its minimum is exactly 1.
std::pair<FormOverF, MinimalData> normalize_min_one(const FormOverF& f);

/// Equivalence-class filter: number of minimal vectors plus the sorted
/// multiset of |bilinear value| over unordered pairs of minimal vectors.
/// Equal for equivalent forms; inequality proves inequivalence.
std::string fingerprint_of(const FormOverF& f, const MinimalData& md);

/// Builds the full class record; f must be normalized and perfect
/// (std::logic_error otherwise).  md, when supplied, must be f's minimal
/// data (recomputed when omitted).
PerfectClass make_class(const FormOverF& f, int index);
PerfectClass make_class(const FormOverF& f, MinimalData md, int index);

/// The unique perfect form on the far side of a facet of cls's cone,
/// normalized to minimum 1.  Walks coords + t * normal with exact rational
/// localization of the first new minimal vector.
FormOverF neighbor_form(const PerfectClass& cls, int facet_index);

/// U with entries in O and unit determinant such that U^T A_f U = A_g,
/// when one exists.  Both forms must be normalized to minimum 1 and the
/// minimal data must belong to them.
std::optional<FMat> equivalence_witness(const FormOverF& f,
                                        const MinimalData& mdf,
                                        const FormOverF& g,
                                        const MinimalData& mdg);

bool are_equivalent(const PerfectClass& f, const PerfectClass& g);

/// Breadth-first closure from the starting form; deterministic and
/// schedule-independent for any jobs value.
EnumerationResult enumerate_classes(const Field& fld,
                                    const EnumerationOptions& opt = {});

}  // namespace pqf
