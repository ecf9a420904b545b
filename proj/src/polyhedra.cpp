#include "pqf/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace pqf {

RatVec primitive_direction(const RatVec& v) {
  Int lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Int gcd = 0;
  std::vector<Int> scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    scaled.push_back(Int(x.get_num() * (lcm / x.get_den())));
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), scaled.back().get_mpz_t());
  }
  if (gcd == 0) throw std::domain_error("zero vector has no direction");
  RatVec out;
  out.reserve(v.size());
  for (const auto& z : scaled) out.emplace_back(z / gcd);
  return out;
}

namespace {

using Bits = std::vector<uint64_t>;

bool bit_test(const Bits& b, int i) {
  return (b[i / 64] >> (i % 64)) & 1u;
}

void bit_set(Bits& b, int i) { b[i / 64] |= uint64_t(1) << (i % 64); }

int popcount_and(const Bits& x, const Bits& y) {
  int c = 0;
  for (size_t i = 0; i < x.size(); ++i)
    c += __builtin_popcountll(x[i] & y[i]);
  return c;
}

// true iff (x & y) is a subset of z
bool and_subset_of(const Bits& x, const Bits& y, const Bits& z) {
  for (size_t i = 0; i < x.size(); ++i)
    if ((x[i] & y[i]) & ~z[i]) return false;
  return true;
}

struct Ray {
  RatVec dir;  // primitive integral
  Bits zero;   // processed constraints this ray is tight on
};

}  // namespace

std::vector<Facet> dual_description(const Cone& cone) {
  const int dim = cone.ambient_dim;
  const int ng = static_cast<int>(cone.generators.size());
  for (const auto& g : cone.generators)
    if (static_cast<int>(g.size()) != dim)
      throw std::domain_error("generator dimension mismatch");

  // Greedy independent subset seeding a simplicial subcone.
  std::vector<int> basis;
  RatMat rows;
  for (int i = 0; i < ng && static_cast<int>(basis.size()) < dim; ++i) {
    rows.push_back(cone.generators[i]);
    if (rat_rank(rows) == static_cast<int>(rows.size()))
      basis.push_back(i);
    else
      rows.pop_back();
  }
  if (static_cast<int>(basis.size()) != dim)
    throw std::domain_error("cone is not full-dimensional");

  // Dual of {y : g_i . y >= 0, i in basis} is spanned by columns of the
  // inverse of the matrix with rows g_i.
  auto inv = rat_inverse(rows);
  if (!inv) throw std::logic_error("independent rows not invertible");

  const size_t words = (ng + 63) / 64;
  std::vector<Ray> rays;
  for (int c = 0; c < dim; ++c) {
    Ray r;
    RatVec col(dim);
    for (int i = 0; i < dim; ++i) col[i] = (*inv)[i][c];
    r.dir = primitive_direction(col);
    r.zero.assign(words, 0);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(ng, false);
  auto mark_tight = [&](Ray& r, int c) {
    if (dot(r.dir, cone.generators[c]) == 0) bit_set(r.zero, c);
  };
  for (int c : basis) {
    processed[c] = true;
    for (auto& r : rays) mark_tight(r, c);
  }

  for (int c = 0; c < ng; ++c) {
    if (processed[c]) continue;
    const RatVec& g = cone.generators[c];
    std::vector<Rat> s(rays.size());
    std::vector<int> pos, neg, zer;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(rays[i].dir, g);
      int sg = sgn(s[i]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(static_cast<int>(i));
    }
    if (neg.empty()) {
      processed[c] = true;
      for (int i : zer) bit_set(rays[i].zero, c);
      continue;
    }

    std::vector<Ray> newcomers;
    for (int p : pos)
      for (int m : neg) {
        // combinatorial adjacency: enough shared tight constraints and no
        // third ray tight on all of them
        if (popcount_and(rays[p].zero, rays[m].zero) < dim - 2) continue;
        bool adjacent = true;
        for (size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (static_cast<int>(r) == p || static_cast<int>(r) == m) continue;
          if (and_subset_of(rays[p].zero, rays[m].zero, rays[r].zero))
            adjacent = false;
        }
        if (!adjacent) continue;
        RatVec v(dim);
        for (int k = 0; k < dim; ++k)
          v[k] = s[p] * rays[m].dir[k] - s[m] * rays[p].dir[k];
        Ray nr;
        nr.dir = primitive_direction(v);
        nr.zero.assign(words, 0);
        for (int pc = 0; pc < ng; ++pc)
          if (processed[pc] || pc == c) mark_tight(nr, pc);
        newcomers.push_back(std::move(nr));
      }

    std::vector<Ray> next;
    for (int i : pos) next.push_back(std::move(rays[i]));
    for (int i : zer) {
      bit_set(rays[i].zero, c);
      next.push_back(std::move(rays[i]));
    }
    for (auto& nr : newcomers) next.push_back(std::move(nr));
    processed[c] = true;
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  facets.reserve(rays.size());
  for (auto& r : rays) {
    Facet f;
    f.normal = std::move(r.dir);
    RatMat tight;
    for (int i = 0; i < ng; ++i)
      if (dot(f.normal, cone.generators[i]) == 0) {
        f.incident.push_back(i);
        tight.push_back(cone.generators[i]);
      }
    if (rat_rank(tight) != dim - 1)
      throw std::logic_error("facet incidence rank is not dim-1");
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  for (size_t i = 1; i < facets.size(); ++i)
    if (facets[i].normal == facets[i - 1].normal)
      throw std::logic_error("duplicate facet normals");
  return facets;
}

bool cone_contains(const Cone& cone, const std::vector<Facet>& facets,
                   const RatVec& point) {
  if (static_cast<int>(point.size()) != cone.ambient_dim)
    throw std::domain_error("point dimension mismatch");
  for (const auto& f : facets)
    if (dot(f.normal, point) < 0) return false;
  return true;
}

}  // namespace pqf
