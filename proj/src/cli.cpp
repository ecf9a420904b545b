#include "pqf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pqf/json_io.hpp"
#include "pqf/perfection.hpp"

namespace pqf {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kTruncated = 3;

Field field_from_config(const RunConfig& cfg) {
  if (cfg.rational) return Field::rationals();
  return Field::quadratic(cfg.d);
}

void emit_json(const RunConfig& cfg, const Json& j, bool to_stdout) {
  if (!cfg.out_path.empty()) save_json_file(cfg.out_path, j);
  if (to_stdout && cfg.out_path.empty()) std::cout << j.dump(2) << "\n";
}

std::string default_checkpoint_path(const RunConfig& cfg) {
  if (!cfg.checkpoint_path.empty()) return cfg.checkpoint_path;
  const char* dir = std::getenv("PQF_CHECKPOINT_DIR");
  if (!dir || !*dir) return {};
  std::string tag = cfg.rational ? "rational" : "d" + std::to_string(cfg.d);
  return std::string(dir) + "/pqf_enumerate_" + tag + ".json";
}

struct CsvRow {
  long D;
  std::string nd;  // count or ERROR marker
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int cmd_seed(const RunConfig& cfg) {
  Field fld = field_from_config(cfg);
  SeedData s = initial_alpha(fld);
  auto [gram, md] = seed_trace_form(fld);
  FormOverF form = initial_perfect_form(fld, cfg.n);
  MinimalData fmd = minimal_vectors(restriction_of_scalars(form));
  Json j{{"seed", seed_to_json(s)},
         {"trace_gram", gram_to_json(gram)},
         {"trace_minimal", minimal_to_json(fld, 1, md)},
         {"form", form_to_json(form)},
         {"form_minimal", minimal_to_json(fld, cfg.n, fmd)}};
  if (cfg.n >= 2) {
    PerfectionReport rep = perfection_report(form, fmd);
    j["perfection"] = Json{{"rank", rep.rank},
                           {"required", rep.required},
                           {"perfect", rep.is_perfect}};
  }
  emit_json(cfg, j, true);
  return kOk;
}

int cmd_minvec(const RunConfig& cfg) {
  RatMat gram;
  Field fld = Field::rationals();
  int n = cfg.n;
  bool field_vectors = false;
  if (!cfg.gram_path.empty()) {
    Json j = load_json_file(cfg.gram_path);
    gram = gram_from_json(j.is_object() ? j.at("gram") : j);
  } else {
    fld = field_from_config(cfg);
    field_vectors = true;
    gram = restriction_of_scalars(initial_perfect_form(fld, n));
  }
  MinimalData md = minimal_vectors(gram);
  Json vecs = Json::array();
  for (const auto& v : md.vectors) {
    if (field_vectors) {
      vecs.push_back(fvec_to_json(unflatten_vector(fld, n, v)));
    } else {
      Json a = Json::array();
      for (long c : v) a.push_back(c);
      vecs.push_back(a);
    }
  }
  Json j{{"minimum", rat_str(md.minimum)},
         {"count", md.vectors.size()},
         {"vectors", vecs}};
  emit_json(cfg, j, true);
  return kOk;
}

int cmd_perfect_check(const RunConfig& cfg) {
  Field fld = field_from_config(cfg);
  FormOverF form = initial_perfect_form(fld, cfg.n);
  MinimalData md = minimal_vectors(restriction_of_scalars(form));
  PerfectionReport rep = perfection_report(form, md);
  std::cout << "perfect: " << (rep.is_perfect ? "true" : "false")
            << ", rank " << rep.rank << "/" << rep.required << "\n";
  Json j{{"field", field_to_json(fld)},
         {"form", form_to_json(form)},
         {"rank", rep.rank},
         {"required", rep.required},
         {"perfect", rep.is_perfect}};
  emit_json(cfg, j, false);
  return kOk;
}

namespace {

EnumerationResult run_enumeration(const Field& fld, const RunConfig& cfg,
                                  const std::string& ckpath) {
  EnumerationOptions opt;
  opt.jobs = cfg.jobs;
  opt.class_cap = cfg.class_cap;
  opt.progress = cfg.progress;
  if (!ckpath.empty()) {
    std::ifstream probe(ckpath);
    if (probe.good())
      opt.resume = checkpoint_from_json(load_json_file(ckpath));
    opt.checkpoint_save = [ckpath](const Checkpoint& ck) {
      save_json_file(ckpath, checkpoint_to_json(ck));
    };
  }
  return enumerate_classes(fld, opt);
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg) {
  Field fld = field_from_config(cfg);
  std::string ckpath = default_checkpoint_path(cfg);
  EnumerationResult res;
  try {
    res = run_enumeration(fld, cfg, ckpath);
  } catch (const truncation_error& e) {
    std::cout << "TRUNCATED: " << e.what() << "\n";
    return kTruncated;
  }
  if (!ckpath.empty()) std::remove(ckpath.c_str());

  Json j = enumeration_to_json(res);
  if (!cfg.out_path.empty()) save_json_file(cfg.out_path, j);
  if (!cfg.adjacency_path.empty())
    save_json_file(cfg.adjacency_path, Json{{"adjacency", j.at("adjacency")}});
  if (fld.rational_mode)
    std::cout << "N=" << res.classes.size() << "\n";
  else
    std::cout << "D=" << fld.D << " N_D=" << res.classes.size() << "\n";
  return kOk;
}

int cmd_table(const RunConfig& cfg) {
  if (cfg.dmin < 2 && cfg.dmin <= cfg.dmax)
    throw std::domain_error("d range must start at 2 or above");
  std::vector<CsvRow> rows;
  bool any_error = false;
  for (long d = cfg.dmin; d <= cfg.dmax; ++d) {
    if (!is_square_free(d)) continue;
    Field fld = Field::quadratic(d);
    CsvRow row{fld.D, ""};
    try {
      RunConfig sub = cfg;
      sub.d = d;
      sub.rational = false;
      EnumerationResult res = run_enumeration(fld, sub, "");
      row.nd = std::to_string(res.classes.size());
    } catch (const std::exception& e) {
      row.nd = "ERROR";
      any_error = true;
      std::cerr << "d=" << d << " failed: " << e.what() << "\n";
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const CsvRow& a, const CsvRow& b) { return a.D < b.D; });

  std::ostringstream csv;
  csv << "D,N_D\n";
  for (const auto& r : rows) csv << r.D << "," << r.nd << "\n";
  if (cfg.csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(cfg.csv_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + cfg.csv_path);
    out << csv.str();
  }
  if (!cfg.plot_path.empty()) {
    std::ofstream plot(cfg.plot_path, std::ios::trunc);
    if (!plot) throw std::runtime_error("cannot write " + cfg.plot_path);
    for (const auto& r : rows) plot << r.D << " " << r.nd << "\n";
  }
  return any_error ? kFailure : kOk;
}

namespace {

/// Reads a CSV with a header line; returns D -> N_D by column name.
std::map<long, std::string> read_counts_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("empty CSV " + path);
  auto header = split_csv_line(line);
  int dcol = -1, ncol = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "D") dcol = static_cast<int>(i);
    if (header[i] == "N_D") ncol = static_cast<int>(i);
  }
  if (dcol < 0 || ncol < 0)
    throw std::invalid_argument(path + ": header must contain D and N_D");
  std::map<long, std::string> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto parts = split_csv_line(line);
    if (static_cast<int>(parts.size()) <= std::max(dcol, ncol))
      throw std::invalid_argument(path + ": short row: " + line);
    rows[std::stol(parts[dcol])] = parts[ncol];
  }
  return rows;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  std::map<long, std::string> computed, reference;
  try {
    computed = read_counts_csv(cfg.computed_path);
    reference = read_counts_csv(cfg.reference_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  int matched = 0, total = 0;
  bool ok = true;
  for (const auto& [D, nd] : computed) {
    ++total;
    auto it = reference.find(D);
    if (it == reference.end()) {
      std::cout << "D=" << D << " computed=" << nd
                << " reference=absent MISMATCH\n";
      ok = false;
    } else if (it->second != nd) {
      std::cout << "D=" << D << " computed=" << nd
                << " reference=" << it->second << " MISMATCH\n";
      ok = false;
    } else {
      std::cout << "D=" << D << " computed=" << nd
                << " reference=" << it->second << " match\n";
      ++matched;
    }
  }
  std::cout << matched << "/" << total << " match\n";
  return ok ? kOk : kFailure;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"perfect binary quadratic forms over real quadratic fields"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_field_opts = [&](CLI::App* sub, bool allow_rational) {
    auto* dopt = sub->add_option("--d", cfg.d, "square-free d >= 2");
    if (allow_rational) {
      auto* r = sub->add_flag("--rational", cfg.rational,
                              "degenerate rational field (cross-check mode)");
      dopt->excludes(r);
    } else {
      dopt->required();
    }
    return dopt;
  };

  auto* seed = app.add_subcommand("seed", "starting form data for Q(sqrt d)");
  add_field_opts(seed, false);
  seed->add_option("--n", cfg.n, "form rank (default 2)");
  seed->add_option("--out", cfg.out_path, "write JSON here instead of stdout");

  auto* minvec =
      app.add_subcommand("minvec", "minimum and minimal vectors of a Gram");
  minvec->add_option("--gram", cfg.gram_path,
                     "JSON file with a rational Gram matrix");
  minvec->add_option("--d", cfg.d, "use the starting form of Q(sqrt d)");
  minvec->add_option("--n", cfg.n, "form rank (with --d)");
  minvec->add_option("--out", cfg.out_path, "write JSON here");

  auto* pc = app.add_subcommand("perfect-check",
                                "perfection test of the starting form");
  add_field_opts(pc, true);
  pc->add_option("--n", cfg.n, "form rank (default 2)");
  pc->add_option("--out", cfg.out_path, "write JSON here");

  auto* en = app.add_subcommand("enumerate",
                                "all equivalence classes of perfect forms");
  add_field_opts(en, true);
  en->add_option("--jobs", cfg.jobs, "parallel workers (default 1)");
  en->add_option("--cap", cfg.class_cap, "class cap (default 10000)");
  en->add_option("--checkpoint", cfg.checkpoint_path,
                 "checkpoint file (default from PQF_CHECKPOINT_DIR)");
  en->add_option("--out", cfg.out_path, "classes JSON file");
  en->add_option("--adjacency", cfg.adjacency_path, "adjacency JSON file");
  en->add_flag("--progress", cfg.progress, "progress lines on stderr");

  auto* tab = app.add_subcommand("table", "counts for a range of fields");
  tab->add_option("--dmin", cfg.dmin, "first d")->required();
  tab->add_option("--dmax", cfg.dmax, "last d")->required();
  tab->add_option("--jobs", cfg.jobs, "parallel workers");
  tab->add_option("--cap", cfg.class_cap, "class cap");
  tab->add_option("--csv", cfg.csv_path, "CSV output file (default stdout)");
  tab->add_option("--plot", cfg.plot_path, "plot data file (D N_D lines)");

  auto* ver = app.add_subcommand("verify", "compare a computed CSV against "
                                            "a reference CSV (N_D only)");
  ver->add_option("--computed", cfg.computed_path, "computed CSV")->required();
  ver->add_option("--reference", cfg.reference_path, "reference CSV")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!cfg.rational && (seed->parsed() || pc->parsed() || en->parsed()) &&
        (cfg.d < 2 || !is_square_free(cfg.d))) {
      std::cerr << "error: d must be square-free and >= 2, got " << cfg.d
                << "\n";
      return kUsage;
    }
    if (seed->parsed()) return cmd_seed(cfg);
    if (minvec->parsed()) {
      if (cfg.gram_path.empty() && (cfg.d < 2 || !is_square_free(cfg.d))) {
        std::cerr << "error: minvec needs --gram or a square-free --d\n";
        return kUsage;
      }
      cfg.command = "minvec";
      return cmd_minvec(cfg);
    }
    if (pc->parsed()) return cmd_perfect_check(cfg);
    if (en->parsed()) return cmd_enumerate(cfg);
    if (tab->parsed()) return cmd_table(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    return kUsage;
  } catch (const truncation_error& e) {
    std::cout << "TRUNCATED: " << e.what() << "\n";
    return kTruncated;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace pqf
