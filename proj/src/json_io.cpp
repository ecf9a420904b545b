#include "pqf/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace pqf {

Json field_to_json(const Field& f) {
  if (f.rational_mode) return Json{{"rational_mode", true}, {"d", 0}, {"D", 1}};
  return Json{{"d", f.d}, {"D", f.D}};
}

Field field_from_json(const Json& j) {
  if (j.value("rational_mode", false)) return Field::rationals();
  return Field::quadratic(j.at("d").get<long>());
}

Json felem_to_json(const FElem& x) {
  return Json::array({rat_str(x.a), rat_str(x.b)});
}

FElem felem_from_json(const Field& f, const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("field element must be a pair");
  return FElem(f, parse_rat(j[0].get<std::string>()),
               parse_rat(j[1].get<std::string>()));
}

Json fvec_to_json(const FVec& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(felem_to_json(e));
  return a;
}

FVec fvec_from_json(const Field& f, const Json& j) {
  FVec v;
  for (const auto& e : j) v.push_back(felem_from_json(f, e));
  return v;
}

Json form_to_json(const FormOverF& f) {
  Json entries = Json::array();
  for (const auto& row : f.entries) entries.push_back(fvec_to_json(row));
  return Json{{"n", f.n}, {"entries", entries}};
}

FormOverF form_from_json(const Field& fld, const Json& j) {
  int n = j.at("n").get<int>();
  FormOverF f(fld, n);
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("entry row count mismatch");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      f.entries[i][k] = felem_from_json(fld, entries[i][k]);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (!(f.entries[i][k] == f.entries[k][i]))
        throw std::invalid_argument("form entries not symmetric");
  return f;
}

Json gram_to_json(const RatMat& g) {
  Json rows = Json::array();
  for (const auto& row : g) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    rows.push_back(r);
  }
  return rows;
}

RatMat gram_from_json(const Json& j) {
  RatMat g;
  for (const auto& row : j) {
    RatVec r;
    for (const auto& x : row) r.push_back(parse_rat(x.get<std::string>()));
    g.push_back(std::move(r));
  }
  for (const auto& row : g)
    if (row.size() != g.size())
      throw std::invalid_argument("gram matrix must be square");
  return g;
}

Json minimal_to_json(const Field& fld, int n, const MinimalData& md) {
  Json vecs = Json::array();
  for (const auto& v : md.vectors)
    vecs.push_back(fvec_to_json(unflatten_vector(fld, n, v)));
  return Json{{"minimum", rat_str(md.minimum)},
              {"vectors", vecs},
              {"count", md.vectors.size()}};
}

Json seed_to_json(const SeedData& s) {
  auto [p, q] = s.alpha.sqrt_coords();
  return Json{{"field", field_to_json(s.fld)},
              {"alpha", Json{{"coords", felem_to_json(s.alpha)},
                             {"sqrt_coords",
                              Json::array({rat_str(p), rat_str(q)})}}},
              {"n_tilde", s.n_tilde},
              {"eta", felem_to_json(s.eta)},
              {"x0", rat_str(s.x0)},
              {"geodesic", s.geodesic_tag}};
}

Json enumeration_to_json(const EnumerationResult& r) {
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json vecs = Json::array();
    for (const auto& v : c.minimal.vectors)
      vecs.push_back(fvec_to_json(unflatten_vector(r.fld, c.form.n, v)));
    classes.push_back(
        Json{{"index", c.discovery_index},
             {"form", form_to_json(c.form)},
             {"min_vectors", vecs},
             {"num_min_vectors", c.minimal.vectors.size()},
             {"fingerprint", c.fingerprint},
             {"galois_partner", r.galois_partner[c.discovery_index]}});
  }
  Json adj = Json::array();
  for (const auto& e : r.adjacency)
    adj.push_back(Json::array({e[0], e[1], e[2]}));
  return Json{{"field", field_to_json(r.fld)},
              {"normalization", "min=1"},
              {"classes", classes},
              {"adjacency", adj}};
}

Json checkpoint_to_json(const Checkpoint& c) {
  Json forms = Json::array();
  for (const auto& f : c.forms) forms.push_back(form_to_json(f));
  Json adj = Json::array();
  for (const auto& e : c.adjacency)
    adj.push_back(Json::array({e[0], e[1], e[2]}));
  return Json{{"field", field_to_json(c.fld)},
              {"expanded", c.expanded},
              {"forms", forms},
              {"adjacency", adj}};
}

Checkpoint checkpoint_from_json(const Json& j) {
  Checkpoint c;
  c.fld = field_from_json(j.at("field"));
  c.expanded = j.at("expanded").get<int>();
  for (const auto& f : j.at("forms"))
    c.forms.push_back(form_from_json(c.fld, f));
  for (const auto& e : j.at("adjacency"))
    c.adjacency.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
  return c;
}

void save_json_file(const std::string& path, const Json& j) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace pqf
