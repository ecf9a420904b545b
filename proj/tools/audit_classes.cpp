// Out-of-band audit of an `enumerate --out` file: re-derive every class's
// minimal vectors from its form, certify perfection rank at minimum 1,
// recompute fingerprints, exhaustively re-test pairwise inequivalence inside
// fingerprint buckets, and verify the conjugation pairing.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "pqf/formspace.hpp"
#include "pqf/json_io.hpp"
#include "pqf/perfection.hpp"
#include "pqf/shortvec.hpp"
#include "pqf/voronoi.hpp"

using namespace pqf;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: pqf-audit CLASSES_JSON\n");
    return 2;
  }
  const Json j = load_json_file(argv[1]);
  const Field fld = field_from_json(j.at("field"));
  std::printf("field: d=%ld D=%ld\n", fld.d, fld.D);

  std::vector<FormOverF> forms;
  std::vector<MinimalData> mds;
  std::map<std::string, std::vector<int>> buckets;

  int idx = 0;
  for (const auto& rec : j.at("classes")) {
    FormOverF f = form_from_json(fld, rec.at("form"));
    MinimalData md = minimal_vectors(restriction_of_scalars(f));
    if (md.minimum != 1) {
      std::printf("FAIL class %d: minimum %s != 1\n", idx,
                  rat_str(md.minimum).c_str());
      return 1;
    }
    PerfectionReport pr = perfection_report(f, md);
    if (!pr.is_perfect || pr.rank != pr.required) {
      std::printf("FAIL class %d: rank %d/%d\n", idx, pr.rank, pr.required);
      return 1;
    }
    std::string fp = fingerprint_of(f, md);
    if (fp != rec.at("fingerprint").get<std::string>()) {
      std::printf("FAIL class %d: fingerprint mismatch\n", idx);
      return 1;
    }
    buckets[fp].push_back(idx);
    forms.push_back(std::move(f));
    mds.push_back(std::move(md));
    ++idx;
  }
  std::printf("classes: %d, all perfect at minimum 1\n", idx);

  long pairs = 0;
  std::size_t biggest = 0;
  for (const auto& [fp, members] : buckets) {
    biggest = std::max(biggest, members.size());
    for (std::size_t a = 0; a + 1 < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const int ia = members[a], ib = members[b];
        if (equivalence_witness(forms[ia], mds[ia], forms[ib], mds[ib])) {
          std::printf("FAIL: classes %d and %d are equivalent\n", ia, ib);
          return 1;
        }
        ++pairs;
      }
    }
  }
  std::printf("buckets: %zu (largest %zu), %ld same-bucket pairs inequivalent\n",
              buckets.size(), biggest, pairs);

  int self_paired = 0;
  for (int i = 0; i < idx; ++i) {
    const int p = j.at("classes")[i].at("galois_partner").get<int>();
    if (p < 0 || p >= idx) {
      std::printf("FAIL class %d: partner %d out of range\n", i, p);
      return 1;
    }
    auto [cn, cmd] = normalize_min_one(conj_form(forms[i]));
    if (!equivalence_witness(cn, cmd, forms[p], mds[p])) {
      std::printf("FAIL class %d: conjugate not equivalent to partner %d\n", i,
                  p);
      return 1;
    }
    if (p == i) ++self_paired;
  }
  std::printf("conjugation pairing verified (%d self-paired)\n", self_paired);
  std::printf("ALL CHECKS PASSED\n");
  return 0;
}
