#include "pqf/voronoi.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "pqf/perfection.hpp"

namespace pqf {

std::pair<FormOverF, MinimalData> normalize_min_one(const FormOverF& f) {
  MinimalData md = minimal_vectors(restriction_of_scalars(f));
  if (md.minimum == 1) return {f, std::move(md)};
  FormOverF g = (Rat(1) / md.minimum) * f;
  md.minimum = 1;
  return {std::move(g), std::move(md)};
}

std::string fingerprint_of(const FormOverF& f, const MinimalData& md) {
  RatMat g = restriction_of_scalars(f);
  std::vector<Rat> values;
  for (size_t i = 0; i < md.vectors.size(); ++i)
    for (size_t j = i; j < md.vectors.size(); ++j) {
      Rat b(0);
      const IntVec& x = md.vectors[i];
      const IntVec& y = md.vectors[j];
      for (size_t r = 0; r < x.size(); ++r) {
        if (x[r] == 0) continue;
        for (size_t c = 0; c < y.size(); ++c)
          if (y[c] != 0) b += g[r][c] * Rat(x[r]) * Rat(y[c]);
      }
      values.push_back(abs(b));  // sign depends on the +- representative
    }
  std::sort(values.begin(), values.end());
  std::ostringstream os;
  os << md.vectors.size() << ":";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << rat_str(values[i]);
  }
  return os.str();
}

PerfectClass make_class(const FormOverF& f, MinimalData md, int index) {
  if (md.minimum != 1)
    throw std::logic_error("class representative not normalized to min 1");
  PerfectClass cls;
  cls.form = f;
  SymBasis basis(f.fld, f.n);
  cls.coords = basis.coords(f);

  PerfectionReport rep = perfection_report(f, md);
  if (!rep.is_perfect)
    throw std::logic_error("class representative is not perfect");

  cls.cone.ambient_dim = basis.dim();
  cls.cone.generators = std::move(rep.evaluation_matrix);
  cls.facets = dual_description(cls.cone);
  cls.fingerprint = fingerprint_of(f, md);
  cls.minimal = std::move(md);
  cls.discovery_index = index;
  return cls;
}

PerfectClass make_class(const FormOverF& f, int index) {
  MinimalData md = minimal_vectors(restriction_of_scalars(f));
  return make_class(f, std::move(md), index);
}

namespace {

/// Values and slopes along the pencil coords + t * direction.
struct Walker {
  const PerfectClass& cls;
  SymBasis basis;
  const RatVec& dir;

  Walker(const PerfectClass& c, int facet_index)
      : cls(c), basis(c.form.fld, c.form.n),
        dir(c.facets[facet_index].normal) {}

  RatVec coords_at(const Rat& t) const {
    RatVec x = cls.coords;
    for (size_t i = 0; i < x.size(); ++i) x[i] += t * dir[i];
    return x;
  }

  /// Crossing times of every vector of value <= 1 at pencil time t, for
  /// vectors moving downward; empty when none (all value-1 vectors tight
  /// on the facet).  nullopt when the form at t is not positive-definite.
  std::optional<std::vector<Rat>> crossings(const Rat& t) const {
    RatVec x = coords_at(t);
    RatMat g = restriction_of_scalars(basis.form(x));
    if (!ldlt(g)) return std::nullopt;
    std::vector<Rat> times;
    for (auto& [v, val] : vectors_below(g, Rat(1))) {
      FVec fv = unflatten_vector(basis.fld, basis.n, v);
      RatVec c = basis.evaluation_vector(fv);
      Rat slope = dot(c, dir);
      if (slope >= 0) continue;  // tight on the facet (slope 0, value 1)
      // value at time s is dot(c, coords) + s*slope = 1 at the crossing
      times.push_back((dot(c, cls.coords) - 1) / -slope);
    }
    return times;
  }
};

}  // namespace

FormOverF neighbor_form(const PerfectClass& cls, int facet_index) {
  if (facet_index < 0 ||
      facet_index >= static_cast<int>(cls.facets.size()))
    throw std::domain_error("facet index out of range");
  Walker w(cls, facet_index);

  const int kMaxSteps = 512;
  Rat t_lo(0);     // positive-definite, no downward vector at or below 1
  Rat t(1);
  std::vector<Rat> found;
  bool have = false;
  for (int step = 0; step < kMaxSteps && !have; ++step) {
    auto times = w.crossings(t);
    if (times && times->empty()) {
      t_lo = t;
      t *= 2;
      continue;
    }
    if (times) {
      found = std::move(*times);
      have = true;
      break;
    }
    // Lost definiteness: bisect back toward t_lo until a definite point
    // with downward vectors appears.
    Rat t_hi = t;
    for (int b = 0; b < kMaxSteps && !have; ++b) {
      Rat mid = (t_lo + t_hi) / 2;
      auto mtimes = w.crossings(mid);
      if (!mtimes) {
        t_hi = mid;
      } else if (mtimes->empty()) {
        t_lo = mid;
      } else {
        found = std::move(*mtimes);
        have = true;
      }
    }
    break;
  }
  if (!have)
    throw std::logic_error(
        "neighbor walk found no crossing; facet appears to border the "
        "positivity boundary");

  Rat t_star = *std::min_element(found.begin(), found.end());
  if (t_star <= 0)
    throw std::logic_error("neighbor crossing time not positive");
  SymBasis basis(cls.form.fld, cls.form.n);
  FormOverF g = basis.form(w.coords_at(t_star));
  MinimalData md = minimal_vectors(restriction_of_scalars(g));
  if (md.minimum != 1)
    throw std::logic_error("neighbor form does not have minimum 1");
  return g;
}

std::optional<FMat> equivalence_witness(const FormOverF& f,
                                        const MinimalData& mdf,
                                        const FormOverF& g,
                                        const MinimalData& mdg) {
  if (!(f.fld == g.fld) || f.n != g.n) return std::nullopt;
  if (f.n != 2)
    throw std::domain_error("equivalence search implemented for rank 2");
  if (mdf.vectors.size() != mdg.vectors.size()) return std::nullopt;
  const Field& fld = f.fld;

  // An F-independent pair of minimal vectors of g (exists: perfect forms
  // are well-rounded).
  std::vector<FVec> gv, fv;
  for (const auto& x : mdg.vectors)
    gv.push_back(unflatten_vector(fld, 2, x));
  for (const auto& x : mdf.vectors)
    fv.push_back(unflatten_vector(fld, 2, x));

  int i1 = -1, i2 = -1;
  for (size_t i = 0; i < gv.size() && i1 < 0; ++i)
    for (size_t j = i + 1; j < gv.size(); ++j) {
      FMat m{{gv[i][0], gv[j][0]}, {gv[i][1], gv[j][1]}};
      if (!fmat_det2(m).is_zero()) {
        i1 = static_cast<int>(i);
        i2 = static_cast<int>(j);
        break;
      }
    }
  if (i1 < 0) throw std::logic_error("minimal vectors do not span F^2");

  FMat v{{gv[i1][0], gv[i2][0]}, {gv[i1][1], gv[i2][1]}};
  FMat vinv = fmat_inverse2(v);

  // Any witness maps this pair into the minimal vectors of f (up to sign;
  // the global sign is absorbed into the witness).
  for (const auto& w1 : fv)
    for (const auto& w2 : fv)
      for (int s = 0; s < 2; ++s) {
        FElem s2 = FElem(fld, s == 0 ? 1 : -1);
        FMat wm{{w1[0], s2 * w2[0]}, {w1[1], s2 * w2[1]}};
        FMat u = fmat_mul(wm, vinv);
        bool integral = true;
        for (const auto& row : u)
          for (const auto& e : row) integral = integral && e.is_integral();
        if (!integral) continue;
        if (!fmat_det2(u).is_unit()) continue;
        if (transform(f, u) == g) return u;
      }
  return std::nullopt;
}

bool are_equivalent(const PerfectClass& f, const PerfectClass& g) {
  return equivalence_witness(f.form, f.minimal, g.form, g.minimal)
      .has_value();
}

namespace {

struct Candidate {
  FormOverF form;
  MinimalData md;
  std::string fingerprint;
};

Candidate make_candidate(const PerfectClass& cls, int facet_index) {
  Candidate c;
  c.form = neighbor_form(cls, facet_index);
  c.md = minimal_vectors(restriction_of_scalars(c.form));
  c.fingerprint = fingerprint_of(c.form, c.md);
  return c;
}

}  // namespace

EnumerationResult enumerate_classes(const Field& fld,
                                    const EnumerationOptions& opt) {
  if (opt.class_cap < 1) throw std::domain_error("class cap must be >= 1");
  EnumerationResult res;
  res.fld = fld;
  std::map<std::string, std::vector<int>> registry;

  auto add_class = [&](const FormOverF& form, MinimalData md) {
    int index = static_cast<int>(res.classes.size());
    if (index >= opt.class_cap)
      throw truncation_error("class cap " + std::to_string(opt.class_cap) +
                             " reached; enumeration truncated");
    res.classes.push_back(make_class(form, std::move(md), index));
    registry[res.classes.back().fingerprint].push_back(index);
    return index;
  };

  int expanded = 0;
  if (opt.resume) {
    if (!(opt.resume->fld == fld))
      throw std::domain_error("checkpoint belongs to a different field");
    for (const auto& form : opt.resume->forms) {
      auto [norm, md] = normalize_min_one(form);
      add_class(norm, std::move(md));
    }
    res.adjacency = opt.resume->adjacency;
    expanded = opt.resume->expanded;
    if (expanded < 0 || expanded > static_cast<int>(res.classes.size()))
      throw std::domain_error("checkpoint expansion index out of range");
  } else {
    auto [norm, md] = normalize_min_one(initial_perfect_form(fld, 2));
    add_class(norm, std::move(md));
  }

  while (expanded < static_cast<int>(res.classes.size())) {
    const PerfectClass& cls = res.classes[expanded];
    const int nf = static_cast<int>(cls.facets.size());

    // Candidates per facet, computed concurrently; merged in facet order so
    // the discovery sequence is independent of scheduling.
    std::vector<Candidate> cands(nf);
    if (opt.jobs <= 1 || nf <= 1) {
      for (int j = 0; j < nf; ++j) cands[j] = make_candidate(cls, j);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(
          std::min(opt.jobs, nf), nullptr);
      for (int w = 0; w < std::min(opt.jobs, nf); ++w)
        pool.emplace_back([&, w] {
          try {
            for (int j = next.fetch_add(1); j < nf; j = next.fetch_add(1))
              cands[j] = make_candidate(cls, j);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    for (int j = 0; j < nf; ++j) {
      Candidate& cand = cands[j];
      int to = -1;
      auto it = registry.find(cand.fingerprint);
      if (it != registry.end())
        for (int idx : it->second) {
          const PerfectClass& known = res.classes[idx];
          if (equivalence_witness(cand.form, cand.md, known.form,
                                  known.minimal)) {
            to = idx;
            break;
          }
        }
      if (to < 0) to = add_class(cand.form, std::move(cand.md));
      res.adjacency.push_back({expanded, j, to});
    }
    ++expanded;

    if (opt.progress)
      std::cerr << "expanded " << expanded << "/" << res.classes.size()
                << " classes\n";
    if (opt.checkpoint_save) {
      Checkpoint ck;
      ck.fld = fld;
      ck.expanded = expanded;
      for (const auto& c : res.classes) ck.forms.push_back(c.form);
      ck.adjacency = res.adjacency;
      opt.checkpoint_save(ck);
    }
  }

  // Diagnostic pass: locate each representative's Galois conjugate among
  // the classes.  A completed enumeration must contain it.
  res.galois_partner.assign(res.classes.size(), -1);
  for (size_t i = 0; i < res.classes.size(); ++i) {
    if (fld.rational_mode) {
      res.galois_partner[i] = static_cast<int>(i);
      continue;
    }
    auto [cf, cmd] = normalize_min_one(conj_form(res.classes[i].form));
    std::string fp = fingerprint_of(cf, cmd);
    auto it = registry.find(fp);
    if (it != registry.end())
      for (int idx : it->second)
        if (equivalence_witness(cf, cmd, res.classes[idx].form,
                                res.classes[idx].minimal)) {
          res.galois_partner[i] = idx;
          break;
        }
    if (res.galois_partner[i] < 0)
      throw std::logic_error("conjugate class missing from enumeration");
  }
  return res;
}

}  // namespace pqf
