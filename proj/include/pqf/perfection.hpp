#pragma once

#include "pqf/formspace.hpp"
#include "pqf/shortvec.hpp"

namespace pqf {

/// Outcome of the reconstruction-rank test: a positive-definite form is
/// perfect when the evaluation vectors of its minimal vectors span the full
/// coordinate space, i.e. (minimum, minimal vectors) pins the form down.
struct PerfectionReport {
  int rank = 0;
  int required = 0;
  bool is_perfect = false;
  RatMat evaluation_matrix;  // row c(v) per minimal vector
};

/// md must be the verified minimal data of f; every row is re-checked
/// against the form (c(v) . coords(f) = minimum) and any mismatch raises
/// std::logic_error.
PerfectionReport perfection_report(const FormOverF& f, const MinimalData& md);

}  // namespace pqf
