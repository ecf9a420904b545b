#include "pqf/perfection.hpp"

#include <stdexcept>

namespace pqf {

PerfectionReport perfection_report(const FormOverF& f, const MinimalData& md) {
  SymBasis basis(f.fld, f.n);
  RatVec fx = basis.coords(f);

  PerfectionReport rep;
  rep.required = basis.dim();
  rep.evaluation_matrix.reserve(md.vectors.size());
  for (const auto& flat : md.vectors) {
    FVec v = unflatten_vector(f.fld, f.n, flat);
    RatVec c = basis.evaluation_vector(v);
    if (dot(c, fx) != md.minimum)
      throw std::logic_error("minimal data inconsistent with form");
    rep.evaluation_matrix.push_back(std::move(c));
  }
  rep.rank = rat_rank(rep.evaluation_matrix);
  rep.is_perfect = (rep.rank == rep.required);
  return rep;
}

}  // namespace pqf
