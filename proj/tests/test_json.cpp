#include <doctest.h>

#include "fixtures.hpp"
#include "subfit/json_io.hpp"

using namespace subfit;

TEST_CASE("poset serialization is canonical and stable") {
  auto p = fixtures::nonideal6();
  std::vector<std::string> labels = {"0", "a", "b", "t", "s", "1"};
  auto j = poset_to_json(p, labels);
  CHECK(j.dump() ==
        R"({"n":6,"covers":[[0,1],[0,2],[0,3],[1,5],[2,5],[3,4],[4,5]],"labels":["0","a","b","t","s","1"]})");
  auto back = poset_from_json(j);
  CHECK(back.poset == p);
  REQUIRE(back.labels.has_value());
  CHECK(*back.labels == labels);
  // dump . load . dump is the identity on canonical files
  CHECK(poset_to_json(back.poset, back.labels).dump() == j.dump());
}

TEST_CASE("unlabelled files omit the label field") {
  auto j = poset_to_json(fixtures::chain(2));
  CHECK(j.dump() == R"({"n":2,"covers":[[0,1]]})");
  CHECK_FALSE(poset_from_json(j).labels.has_value());
}

TEST_CASE("covers in any order load to the same poset") {
  ojson a = {{"n", 3}, {"covers", {{0, 1}, {1, 2}}}};
  ojson b = {{"n", 3}, {"covers", {{1, 2}, {0, 1}}}};
  CHECK(poset_from_json(a).poset == poset_from_json(b).poset);
  // re-serialization sorts them
  CHECK(poset_to_json(poset_from_json(b).poset).dump() == R"({"n":3,"covers":[[0,1],[1,2]]})");
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(poset_from_json(ojson::array()), Error);
  CHECK_THROWS_AS(poset_from_json(ojson{{"n", "x"}}), Error);
  CHECK_THROWS_AS(poset_from_json(ojson{{"n", 2}, {"covers", {{0}}}}), Error);
  CHECK_THROWS_AS(poset_from_json(ojson{{"n", 2}, {"covers", {{0, 9}}}}), Error);
  CHECK_THROWS_AS(poset_from_json(ojson{{"n", 2}, {"covers", ojson::array()}, {"labels", {"x"}}}),
                  Error);
  CHECK_THROWS_AS(load_poset_file("/nonexistent/file.json"), Error);
}

TEST_CASE("file digests are stable") {
  std::string path = std::string(TEST_DATA_DIR) + "/nonideal6.json";
  CHECK(file_digest(path) == file_digest(path));
  CHECK(file_digest(path).size() == 16);
  auto pf = load_poset_file(path);
  CHECK(pf.poset == fixtures::nonideal6());
}
