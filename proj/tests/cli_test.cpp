#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

using Json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("PQF_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PQF_BIN must point at the pqf binary");
  return bin;
}

/// Runs the tool with the given arguments, capturing stdout; stderr is
/// dropped unless the command string redirects it.
RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args;
  if (cmd.find("2>") == std::string::npos) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("seed command") {
  RunResult r = run("seed --d 5");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["seed"]["alpha"]["sqrt_coords"] == Json::array({"1/2", "-1/10"}));
  CHECK(j["seed"]["n_tilde"] == 0);
  CHECK(j["trace_gram"] ==
        Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}));
  CHECK(j["form_minimal"]["count"] == 6);
  CHECK(j["form_minimal"]["minimum"] == "1");
  CHECK(j["perfection"]["rank"] == 6);
  CHECK(j["perfection"]["perfect"] == true);
}

TEST_CASE("seed rejects non-square-free d") {
  CHECK(run("seed --d 4").code == 2);
  CHECK(run("seed --d 12").code == 2);
  CHECK(run("seed --d 1").code == 2);
}

TEST_CASE("perfect-check command") {
  RunResult r = run("perfect-check --d 5");
  CHECK(r.code == 0);
  CHECK(r.out == "perfect: true, rank 6/6\n");
  RunResult q = run("perfect-check --rational");
  CHECK(q.code == 0);
  CHECK(q.out == "perfect: true, rank 3/3\n");
}

TEST_CASE("minvec on an explicit gram file") {
  std::string path = "pqf_cli_test_gram.json";
  write_file(path, R"({"gram": [["1", "1/2"], ["1/2", "1"]]})");
  RunResult r = run("minvec --gram " + path);
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["minimum"] == "1");
  CHECK(j["count"] == 3);
  CHECK(j["vectors"] == Json::array({Json::array({0, 1}), Json::array({1, -1}),
                                     Json::array({1, 0})}));
  std::remove(path.c_str());
}

TEST_CASE("minvec on the starting form") {
  RunResult r = run("minvec --d 5");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["minimum"] == "1");
  CHECK(run("minvec").code == 2);
}

TEST_CASE("enumerate summary lines") {
  RunResult r5 = run("enumerate --d 5");
  CHECK(r5.code == 0);
  CHECK(r5.out == "D=5 N_D=2\n");
  RunResult r2 = run("enumerate --d 2");
  CHECK(r2.code == 0);
  CHECK(r2.out == "D=8 N_D=2\n");
  RunResult rq = run("enumerate --rational");
  CHECK(rq.code == 0);
  CHECK(rq.out == "N=1\n");
}

TEST_CASE("enumerate classes file") {
  std::string path = "pqf_cli_test_classes.json";
  RunResult r = run("enumerate --d 5 --out " + path);
  REQUIRE(r.code == 0);
  Json j = Json::parse(read_file(path));
  CHECK(j["field"]["d"] == 5);
  CHECK(j["field"]["D"] == 5);
  CHECK(j["normalization"] == "min=1");
  REQUIRE(j["classes"].size() == 2);
  for (const auto& c : j["classes"]) {
    CHECK(c.contains("index"));
    CHECK(c.contains("form"));
    CHECK(c.contains("min_vectors"));
    CHECK(c.contains("num_min_vectors"));
    CHECK(c.contains("fingerprint"));
    CHECK(c["min_vectors"].size() == c["num_min_vectors"].get<size_t>());
  }
  CHECK(j["classes"][0]["index"] == 0);
  CHECK(j["adjacency"].is_array());
  CHECK(!j["adjacency"].empty());
  std::remove(path.c_str());
}

TEST_CASE("enumerate respects the class cap") {
  RunResult r = run("enumerate --d 13 --cap 3");
  CHECK(r.code == 3);
  CHECK(r.out.rfind("TRUNCATED", 0) == 0);
}

TEST_CASE("checkpointed enumeration resumes and cleans up") {
  std::string ck = "pqf_cli_test_ck.json";
  std::remove(ck.c_str());
  RunResult first = run("enumerate --d 13 --cap 3 --checkpoint " + ck);
  CHECK(first.code == 3);
  // the partial state is on disk
  CHECK(std::ifstream(ck).good());
  RunResult second = run("enumerate --d 13 --checkpoint " + ck);
  CHECK(second.code == 0);
  CHECK(second.out == "D=13 N_D=9\n");
  // consumed on success
  CHECK(!std::ifstream(ck).good());
}

TEST_CASE("table over a small range") {
  RunResult r = run("table --dmin 2 --dmax 5");
  CHECK(r.code == 0);
  CHECK(r.out == "D,N_D\n5,2\n8,2\n12,3\n");
}

TEST_CASE("table files") {
  std::string csv = "pqf_cli_test_table.csv";
  std::string plot = "pqf_cli_test_table.dat";
  RunResult r = run("table --dmin 2 --dmax 3 --csv " + csv + " --plot " + plot);
  CHECK(r.code == 0);
  CHECK(read_file(csv) == "D,N_D\n8,2\n12,3\n");
  CHECK(read_file(plot) == "8 2\n12 3\n");
  std::remove(csv.c_str());
  std::remove(plot.c_str());
}

TEST_CASE("verify compares computed counts to a reference") {
  std::string computed = "pqf_cli_test_computed.csv";
  std::string reference = "pqf_cli_test_reference.csv";
  write_file(reference, "D,h_D,N_D\n5,1,2\n8,1,2\n12,1,3\n");

  write_file(computed, "D,N_D\n5,2\n8,2\n");
  RunResult ok = run("verify --computed " + computed + " --reference " +
                     reference);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("D=5 computed=2 reference=2 match") != std::string::npos);
  CHECK(ok.out.find("2/2 match") != std::string::npos);

  write_file(computed, "D,N_D\n5,3\n8,2\n");
  RunResult bad = run("verify --computed " + computed + " --reference " +
                      reference);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);

  write_file(computed, "D,count\n5,2\n");
  CHECK(run("verify --computed " + computed + " --reference " + reference)
            .code == 2);

  std::remove(computed.c_str());
  std::remove(reference.c_str());
}

TEST_CASE("job count changes nothing observable") {
  std::string a = "pqf_cli_test_jobs1.json";
  std::string b = "pqf_cli_test_jobs8.json";
  RunResult r1 = run("enumerate --d 13 --jobs 1 --out " + a);
  RunResult r8 = run("enumerate --d 13 --jobs 8 --out " + b);
  CHECK(r1.code == 0);
  CHECK(r8.code == 0);
  CHECK(r1.out == r8.out);
  CHECK(read_file(a) == read_file(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("enumerate").code == 2);        // no field given
  CHECK(run("enumerate --d 9").code == 2);  // 9 is not square-free
}
