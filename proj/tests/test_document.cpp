#include "cla/document.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cla;
using namespace fx;

namespace {
const std::string kFixtures = CLA_FIXTURE_DIR;
}

TEST_CASE("document round trip is canonical-form idempotent") {
  StructureDocument doc =
      StructureDocument::load(kFixtures + "/sl2_golden.json");
  nlohmann::json once = doc.to_json();
  StructureDocument doc2 = StructureDocument::from_json(once);
  CHECK(doc2.to_json() == once);
  CHECK(doc.reps.count("fundamental_so") == 1);
  CHECK(doc.reps.at("fundamental_so").rep.validate().pass);
}

TEST_CASE("alt-map wire format round trip") {
  GradedSpace v = odd_k2();
  OrthRep rep =
      fundamental_rep(so_eps(v, symplectic_form(v)), symplectic_form(v));
  AltMap mu = moment_map(rep);
  nlohmann::json j = altmap_to_json(mu);
  AltMap back = altmap_from_json(j, mu.domain(), mu.codomain(), 2);
  CHECK(back == mu);
}

TEST_CASE("document reference errors") {
  nlohmann::json j;
  j["field"] = {{"kind", "rational"}};
  j["group"] = {{"free_rank", 0},
                {"torsion", nlohmann::json::array({2})},
                {"epsilon", {{"-1"}}}};
  j["forms"] = {{"B", {{"space", "nope"}, {"gram", {{"1"}}}}}};
  CHECK_THROWS_AS(StructureDocument::from_json(j), Error);

  nlohmann::json j2 = j;
  j2.erase("forms");
  j2["spaces"] = {{"V", {{"basis", nlohmann::json::array()}}}};
  CHECK_THROWS_AS(StructureDocument::from_json(j2), Error);  // empty basis
}

TEST_CASE("phi blocks load against their representation") {
  StructureDocument doc =
      StructureDocument::load(kFixtures + "/sl2_golden.json");
  nlohmann::json j = doc.to_json();
  j["phis"] = {{"phi0",
                {{"rep", "fundamental_so"},
                 {"values", nlohmann::json::array()}}}};
  StructureDocument with_phi = StructureDocument::from_json(j);
  CHECK(with_phi.phis.at("phi0").phi.is_zero());
}
