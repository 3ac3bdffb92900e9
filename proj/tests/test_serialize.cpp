#include "doctest.h"

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "ccs/automorphism.hpp"
#include "ccs/serialize.hpp"

using namespace ccs;

namespace {

Scheme paper_scheme(int p) { return cayley_scheme(paper_partition(build_paper_group(p))); }

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / ("ccs-serialize-" + std::to_string(::getpid()));
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("scheme round trip") {
  const Scheme x = paper_scheme(5);
  const Json j = scheme_to_json(x);
  CHECK(j["degree"] == 100);
  CHECK(j["rank"] == 40);
  CHECK(j["colors"].size() == 10'000);
  CHECK(scheme_from_json(j) == x);
  CHECK(scheme_from_json(Json::parse(j.dump())) == x);
}

TEST_CASE("tensor round trip recovers the fibers") {
  const Scheme x = paper_scheme(5);
  const auto t = intersection_tensor(x);
  const Json j = tensor_to_json(t);
  CHECK(j["entries"].size() == 2500);
  CHECK(j["entries"][0] == Json::array({0, 0, 0, 1}));
  CHECK(tensor_from_json(j) == t);
  const Scheme w = wl_stabilize(3, std::vector<int>{0, 1, 2, 1, 0, 2, 2, 2, 3});
  const auto tw = intersection_tensor(w);
  CHECK(tensor_from_json(tensor_to_json(tw)) == tw);
}

TEST_CASE("group, partition and permutation group round trips") {
  const auto b = build_paper_group(5);
  const GroupTable g = group_from_json(group_to_json(*b.group));
  CHECK(std::equal(g.table().begin(), g.table().end(), b.group->table().begin()));
  const auto s = paper_partition(b);
  CHECK(partition_from_json(partition_to_json(s, "group.json"), b.group) == s);
  const auto pg = right_translations(*b.group);
  const Json pj = perm_group_to_json(pg);
  CHECK(pj["order"] == "100");
  CHECK(perm_group_from_json(pj).order() == 100);
  CHECK(constants_to_json(structure_constants(s)).front().size() == 4);
}

TEST_CASE("malformed inputs raise InputError") {
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"({"degree": 2})")), InputError);
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"({"degree": 2, "colors": [0, 1, 1]})")), InputError);
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"({"degree": 2, "colors": [0, "a", 1, 0]})")), InputError);
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"([1, 2])")), InputError);
  // a coloring that is not WL-stable is not a scheme
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"({"degree": 3, "colors": [0,1,2, 1,0,2, 2,2,0]})")), InputError);
  CHECK(coloring_from_json(Json::parse(R"({"degree": 3, "colors": [0,1,2, 1,0,2, 2,2,0]})")).degree == 3);
  CHECK_THROWS_AS(scheme_from_json(Json::parse(R"({"degree": 2, "rank": 3, "colors": [0,1,1,0]})")), InputError);
  CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"rank": 1, "valencies": [1], "transpose": [0], "entries": [[0,0,1,1]]})")),
                  InputError);
  CHECK_THROWS_AS(perm_group_from_json(Json::parse(R"({"degree": 3, "generators": [[0, 0, 1]]})")), InputError);
  CHECK_THROWS_AS(perm_group_from_json(Json::parse(R"({"degree": 3, "order": "5", "generators": [[1, 2, 0]]})")),
                  InputError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [0, 1, 1, 1]})")), InputError);
}

TEST_CASE("file helpers") {
  const auto dir = temp_dir();
  const auto path = dir / "x.json";
  write_json_file(path, Json{{"a", 1}});
  CHECK(read_json_file(path)["a"] == 1);
  std::ofstream(dir / "bad.json") << "{not json";
  CHECK_THROWS_AS(read_json_file(dir / "bad.json"), InputError);
  CHECK_THROWS_AS(read_json_file(dir / "missing.json"), InputError);
  CHECK_THROWS(write_json_file(dir / "no" / "such" / "dir.json", Json{}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("report serialization keeps order and details") {
  Report r;
  r.add("first", true);
  r.add("second", false, "why");
  const Json j = report_to_json(r);
  CHECK(j.size() == 2);
  CHECK(j[0]["name"] == "first");
  CHECK_FALSE(j[0].contains("detail"));
  CHECK(j[1]["detail"] == "why");
}
