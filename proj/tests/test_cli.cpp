#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "../tools/cli.hpp"
#include "ccs/serialize.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ccs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("ccs-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str(const char* sub = "") const { return (path / sub).string(); }
};

}  // namespace

TEST_CASE("generate writes the artifacts and prints the summary") {
  TempDir d;
  const auto r = run({"generate", "--p", "5", "--out", d.str()});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 100, rank 40") != std::string::npos);
  for (const char* f : {"group.json", "partition.json", "constants.json", "scheme.json", "tensor.json"})
    CHECK(fs::exists(d.path / f));
  const auto s = ccs::read_json_file(d.path / "scheme.json");
  CHECK(s["rank"] == 40);
  const auto t = ccs::read_json_file(d.path / "tensor.json");
  CHECK(t["rank"] == 40);
  CHECK(t["entries"].size() == 2500);
}

TEST_CASE("generate p = 7 and a fusion") {
  TempDir d;
  const auto r = run({"generate", "--p", "7", "--fusion", "12", "--out", d.str()});
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 196, rank 70") != std::string::npos);
  CHECK(fs::exists(d.path / "scheme-12.json"));
  CHECK(ccs::read_json_file(d.path / "scheme-12.json")["rank"] == 58);
}

TEST_CASE("identical runs write byte-identical files") {
  TempDir a, b;
  REQUIRE(run({"generate", "--p", "5", "--out", a.str()}).code == 0);
  REQUIRE(run({"generate", "--p", "5", "--out", b.str()}).code == 0);
  for (const auto& e : fs::directory_iterator(a.path))
    CHECK(slurp(e.path()) == slurp(b.path / e.path().filename()));
  REQUIRE(run({"verify", "--p", "5", "--lemma", "separable", "--out", a.str()}).code == 0);
  REQUIRE(run({"verify", "--p", "5", "--lemma", "separable", "--out", b.str()}).code == 0);
  CHECK(slurp(a.path / "report.json") == slurp(b.path / "report.json"));
  CHECK(slurp(a.path / "audit.json") == slurp(b.path / "audit.json"));
  const auto audit = ccs::read_json_file(a.path / "audit.json");
  CHECK(audit["algebraic_automorphism_count"] == 24);
  CHECK(audit["induced_count"] == 24);
  CHECK(audit["inconclusive_count"] == 0);
  CHECK(audit["witnesses"].size() == 24);
}

TEST_CASE("usage and input errors exit with 3") {
  TempDir d;
  CHECK(run({"generate", "--p", "4", "--out", d.str()}).code == 3);
  CHECK(run({"generate", "--p", "17", "--out", d.str()}).code == 3);
  CHECK(run({"generate", "--out", d.str()}).code == 3);
  CHECK(run({"generate", "--p", "5", "--fusion", "4"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({}).code == 3);
  CHECK(run({"verify", "--p", "5", "--lemma", "nosuch", "--out", d.str()}).code == 3);
  CHECK(run({"generate", "--p", "5", "--lines", "1,0;2,0;1,1", "--out", d.str()}).code == 3);
  CHECK(run({"generate", "--p", "5", "--lines", "garbage", "--out", d.str()}).code == 3);
  fs::create_directories(d.path);
  std::ofstream(d.path / "bad.json") << "{\"degree\": 2, \"colors\": [0, 1]}";
  CHECK(run({"wl", "--in", d.str("bad.json"), "--out", d.str()}).code == 3);
  CHECK(run({"aut", "--in", d.str("missing.json"), "--out", d.str()}).code == 3);
  CHECK(run({"tensor", "--in", d.str("bad.json"), "--p", "5", "--out", d.str()}).code == 3);
  // output path that is a file
  std::ofstream(d.path / "file") << "x";
  CHECK(run({"generate", "--p", "5", "--out", d.str("file")}).code == 3);
}

TEST_CASE("help and version exit with 0") {
  CHECK(run({"--help"}).code == 0);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == std::string(CCS_VERSION) + "\n");
}

TEST_CASE("verify exit codes") {
  TempDir d;
  const auto ok = run({"verify", "--p", "5", "--lemma", "orderscheme", "--out", d.str()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  const auto rep = ccs::read_json_file(d.path / "report.json");
  CHECK(rep["status"] == "pass");
  CHECK(rep["stages"][0]["checks"].size() == 6);
  const auto inc = run({"verify", "--p", "5", "--fusion", "0", "--lemma", "separable", "--budget", "1", "--out", d.str()});
  CHECK(inc.code == 2);
  CHECK(ccs::read_json_file(d.path / "report.json")["status"] == "inconclusive");
  const auto f0 = run({"verify", "--p", "5", "--fusion", "0", "--lemma", "schurity", "--out", d.str()});
  CHECK(f0.code == 0);
  CHECK(ccs::read_json_file(d.path / "report.json")["summary"]["schurity.schurian"] == true);
}

TEST_CASE("aut, tensor and wl commands") {
  TempDir d;
  const auto a = run({"aut", "--p", "5", "--out", d.str()});
  CHECK(a.code == 0);
  CHECK(a.out.find("order 100, regular") != std::string::npos);
  const auto a1 = run({"aut", "--p", "5", "--fusion", "1", "--out", d.str()});
  CHECK(a1.code == 0);
  CHECK(a1.out.find("order 2500") != std::string::npos);
  CHECK(ccs::read_json_file(d.path / "aut.json")["order"] == "2500");

  REQUIRE(run({"generate", "--p", "5", "--out", d.str()}).code == 0);
  const auto w = run({"wl", "--in", d.str("scheme.json"), "--out", d.str()});
  CHECK(w.code == 0);
  CHECK(w.out.find("rank 40 -> 40 (delta 0)") != std::string::npos);
  CHECK(slurp(d.path / "wl.json") == slurp(d.path / "scheme.json"));

  // an arbitrary coloring: the 6-cycle
  ccs::Json c;
  c["degree"] = 6;
  std::vector<int> colors(36, 2);
  for (int i = 0; i < 6; ++i) {
    colors[i * 6 + i] = 0;
    colors[i * 6 + (i + 1) % 6] = colors[((i + 1) % 6) * 6 + i] = 1;
  }
  c["colors"] = colors;
  ccs::write_json_file(d.path / "cycle.json", c);
  const auto wc = run({"wl", "--in", d.str("cycle.json"), "--out", d.str()});
  CHECK(wc.code == 0);
  CHECK(wc.out.find("rank 3 -> 4 (delta 1)") != std::string::npos);
  const auto ac = run({"aut", "--in", d.str("wl.json"), "--out", d.str()});
  CHECK(ac.code == 0);
  CHECK(ac.out.find("order 12") != std::string::npos);

  const auto t = run({"tensor", "--in", d.str("scheme.json"), "--out", d.str()});
  CHECK(t.code == 0);
  CHECK(t.out.find("rank 40, 2500 nonzero entries, commutative, identities hold") != std::string::npos);
}
