// Copyright The onelap Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The shared-library interface, used the way a C caller would.

#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "onelap/onelap.h"

using Json = nlohmann::ordered_json;

namespace {

struct Owned {
  onelap_complex* k = nullptr;
  ~Owned() { onelap_complex_free(k); }
};

Json take(char* text) {
  REQUIRE(text != nullptr);
  Json j = Json::parse(text);
  onelap_string_free(text);
  return j;
}

Json strings(std::initializer_list<const char*> list) {
  Json j = Json::array();
  for (const char* s : list) j.push_back(s);
  return j;
}

const onelap_problem kTetUp{2, ONELAP_UP, ONELAP_NORMALIZED};

}  // namespace

TEST_CASE("complex handles") {
  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  CHECK(onelap_complex_num_faces(tet.k, 0) == 4);
  CHECK(onelap_complex_num_faces(tet.k, 1) == 6);
  CHECK(onelap_complex_num_faces(tet.k, 4) == 0);
  char* text = nullptr;
  REQUIRE(onelap_complex_faces(tet.k, 2, &text) == ONELAP_OK);
  CHECK(take(text) == strings({"1,2,3", "1,2,4", "1,3,4", "2,3,4"}));

  REQUIRE(onelap_complex_to_json(tet.k, &text) == ONELAP_OK);
  const Json j = take(text);
  CHECK(j["maximal_faces"] == Json::parse("[[1,2,3,4]]"));
  Owned back;
  REQUIRE(onelap_complex_from_json(j.dump().c_str(), &back.k) == ONELAP_OK);
  CHECK(onelap_complex_num_faces(back.k, 3) == 1);

  Owned isolated;
  REQUIRE(onelap_complex_from_json(R"({"vertices":[1,2,3],"maximal_faces":[[1,2]]})", &isolated.k) ==
          ONELAP_OK);
  CHECK(onelap_complex_num_faces(isolated.k, 0) == 3);

  Owned bad;
  CHECK(onelap_complex_from_json(R"({"maximal_faces":[[1,1]]})", &bad.k) == ONELAP_INPUT_ERROR);
  CHECK(bad.k == nullptr);
  CHECK(std::strstr(onelap_last_error(), "DuplicateVertexInFace") != nullptr);
  CHECK(onelap_complex_from_json("not json", &bad.k) == ONELAP_INPUT_ERROR);
  CHECK(onelap_complex_builtin("sphere", &bad.k) == ONELAP_INPUT_ERROR);
  CHECK(onelap_complex_builtin(nullptr, &bad.k) == ONELAP_INPUT_ERROR);
  CHECK(std::string(onelap_version()).size() > 0);
  onelap_complex_free(nullptr);
  onelap_string_free(nullptr);
}

TEST_CASE("spectrum report") {
  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  char* text = nullptr;
  REQUIRE(onelap_spectrum(tet.k, kTetUp, nullptr, &text) == ONELAP_OK);
  const Json r = take(text);
  CHECK(r["eigenvalues"] == strings({"0", "1"}));
  CHECK(r["problem"]["faces"].size() == 4);
  CHECK(r["witnesses"]["1"].size() == 4);
  CHECK(r["stats"]["accepted"] == r["stats"]["verifier_calls"]);

  onelap_spectrum_options one{1, 1, 0};
  REQUIRE(onelap_spectrum(tet.k, kTetUp, &one, &text) == ONELAP_OK);
  CHECK(take(text)["witnesses"]["0"].size() == 1);

  Owned path;
  REQUIRE(onelap_complex_builtin("path", &path.k) == ONELAP_OK);
  const onelap_problem up{1, ONELAP_UP, ONELAP_NORMALIZED};
  CHECK(onelap_spectrum(path.k, up, nullptr, &text) == ONELAP_DEGENERATE);
  CHECK(text == nullptr);
  const onelap_problem down{1, ONELAP_DOWN, ONELAP_NORMALIZED};
  REQUIRE(onelap_spectrum(path.k, down, nullptr, &text) == ONELAP_OK);
  CHECK(take(text)["eigenvalues"] == strings({"1/2", "1"}));
  const onelap_problem high{5, ONELAP_UP, ONELAP_UNNORMALIZED};
  CHECK(onelap_spectrum(path.k, high, nullptr, &text) == ONELAP_INPUT_ERROR);
  CHECK(text == nullptr);
}

TEST_CASE("verify") {
  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  const char* e1 = R"({"1,2,3":"1"})";
  char* text = nullptr;
  REQUIRE(onelap_verify(tet.k, kTetUp, "1", e1, &text) == ONELAP_OK);
  Json r = take(text);
  CHECK(r["accepted"] == true);
  CHECK(r["certificate"]["1,2,3,4"] == "1");

  REQUIRE(onelap_verify(tet.k, kTetUp, "1/2", e1, &text) == ONELAP_REJECTED);
  r = take(text);
  CHECK(r["reason"] == "WrongValue");
  CHECK(r["rayleigh_quotient"] == "1");

  const char* alt = R"({"1,2,3":1,"1,2,4":-1,"1,3,4":"1","2,3,4":"-1"})";
  CHECK(onelap_verify(tet.k, kTetUp, "0", alt, &text) == ONELAP_OK);
  onelap_string_free(text);

  CHECK(onelap_verify(tet.k, kTetUp, "1/0", e1, &text) == ONELAP_INPUT_ERROR);
  CHECK(onelap_verify(tet.k, kTetUp, "1", R"({"1,2":"1"})", &text) == ONELAP_INPUT_ERROR);
  CHECK(onelap_verify(tet.k, kTetUp, "0", "{}", &text) == ONELAP_INPUT_ERROR);
}

TEST_CASE("invariants and bounds") {
  Owned remark;
  REQUIRE(onelap_complex_builtin("remark5", &remark.k) == ONELAP_OK);
  char* text = nullptr;
  REQUIRE(onelap_invariants(remark.k, &text) == ONELAP_OK);
  const Json inv = take(text);
  CHECK(inv["alpha"] == 3);
  CHECK(inv["alpha_s"]["2"] == 4);
  CHECK(inv["f_vector"] == Json::parse("[5,5,1]"));

  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  REQUIRE(onelap_bounds(tet.k, 2, ONELAP_VOLUME_UPDEGREE, &text) == ONELAP_OK);
  const Json b = take(text);
  bool sharp = false;
  for (const auto& l : b["lines"]) {
    CHECK(l["holds"] == true);
    if (l["name"].get<std::string>().rfind("c_1", 0) == 0) {
      sharp = l["left"] == "0" && l["right"] == "0";
    }
  }
  CHECK(sharp);
  CHECK(onelap_bounds(tet.k, 7, ONELAP_VOLUME_UPDEGREE, &text) == ONELAP_INPUT_ERROR);
}

TEST_CASE("nodal") {
  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  char* text = nullptr;
  const char* x = R"({"1,2,3":"1","1,2,4":"-1","1,3,4":"1","2,3,4":"-1"})";
  REQUIRE(onelap_nodal(tet.k, kTetUp, "0", x, &text) == ONELAP_OK);
  const Json r = take(text);
  CHECK(r["input"]["accepted"] == true);
  CHECK(r["count"] == 1);
  CHECK(r["all_accepted"] == true);
  // not an eigenpair: reported, not a failure of the property
  REQUIRE(onelap_nodal(tet.k, kTetUp, "1/3", x, &text) == ONELAP_OK);
  CHECK(take(text)["input"]["accepted"] == false);
}

TEST_CASE("wedge and duplication") {
  Owned tri;
  REQUIRE(onelap_complex_builtin("simplex:2", &tri.k) == ONELAP_OK);
  Owned w;
  REQUIRE(onelap_wedge(tri.k, "1,2", tri.k, "1,2", &w.k) == ONELAP_OK);
  CHECK(onelap_complex_num_faces(w.k, 0) == 4);
  CHECK(onelap_complex_num_faces(w.k, 1) == 5);
  CHECK(onelap_complex_num_faces(w.k, 2) == 2);
  Owned bad;
  CHECK(onelap_wedge(tri.k, "1,2", tri.k, "1", &bad.k) == ONELAP_INPUT_ERROR);
  CHECK(onelap_wedge(tri.k, "1,4", tri.k, "1,2", &bad.k) == ONELAP_INPUT_ERROR);

  char* text = nullptr;
  const onelap_problem edges{1, ONELAP_UP, ONELAP_NORMALIZED};
  REQUIRE(onelap_wedge_check(tri.k, "1", tri.k, "1", edges, &text) == ONELAP_OK);
  const Json c = take(text);
  CHECK(c["holds"] == true);
  CHECK(c["wedge_spectrum"] == c["union"]);
  const onelap_problem vertices{0, ONELAP_UP, ONELAP_NORMALIZED};
  CHECK(onelap_wedge_check(tri.k, "1", tri.k, "1", vertices, &text) == ONELAP_INPUT_ERROR);

  Owned path;
  REQUIRE(onelap_complex_builtin("path", &path.k) == ONELAP_OK);
  Owned dup;
  REQUIRE(onelap_duplicate(path.k, "1,2", &dup.k, &text) == ONELAP_OK);
  const Json d = take(text);
  CHECK(d["complex"]["maximal_faces"] == Json::parse("[[1,2],[2,3],[3,5],[4,5]]"));
  CHECK(d["primed"] == Json::parse(R"({"1":4,"2":5})"));
  CHECK(onelap_complex_num_faces(dup.k, 1) == 4);

  REQUIRE(onelap_duplicate_check(path.k, "1,2", ONELAP_NORMALIZED, &text) == ONELAP_OK);
  const Json dc = take(text);
  CHECK(dc["holds"] == true);
  CHECK(dc["lifted_checked"].get<int>() > 0);

  Owned tri2;
  REQUIRE(onelap_complex_builtin("simplex:2", &tri2.k) == ONELAP_OK);
  // two edges of one triangle share a coface outside the motif
  CHECK(onelap_duplicate(tri2.k, "1,2;1,3", &bad.k, &text) == ONELAP_INPUT_ERROR);
}

TEST_CASE("oracle") {
  Owned tet;
  REQUIRE(onelap_complex_builtin("simplex:3", &tet.k) == ONELAP_OK);
  char* text = nullptr;
  REQUIRE(onelap_oracle(tet.k, kTetUp, 0, 0, &text) == ONELAP_OK);
  const Json r = take(text);
  CHECK(r["grid_bound"] == 6);
  CHECK(r["oracle"] == r["engine"]);
  CHECK(onelap_oracle(tet.k, kTetUp, 50, 1000, &text) == ONELAP_BUDGET);
}
