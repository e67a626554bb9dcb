#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "strange/catalog.hpp"
#include "test_support.hpp"

using namespace strange;

namespace {

std::set<std::string> dual_names(const char* name) {
  std::set<std::string> out;
  for (const auto* r : Catalog::builtin().dual_of(name)) out.insert(r->name);
  return out;
}

nlohmann::json builtin_json() {
  nlohmann::json doc;
  doc["schema_version"] = Catalog::builtin().schema_version();
  doc["singularities"] = nlohmann::json::array();
  for (const auto& r : Catalog::builtin().records()) doc["singularities"].push_back(record_to_json(r));
  doc["table8"] = nlohmann::json::array();
  for (const auto& row : Catalog::builtin().table8()) doc["table8"].push_back(table8_row_to_json(row));
  doc["kondo_extras"] = nlohmann::json::array();
  for (const auto& k : Catalog::builtin().kondo_extras())
    doc["kondo_extras"].push_back({{"frame", k.frame.to_string()}, {"class_label", k.class_label}});
  return doc;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("record counts") {
    const auto& c = Catalog::builtin();
    CHECK(c.records().size() == 33);
    CHECK(c.family(Family::ExceptionalUnimodal).size() == 14);
    CHECK(c.family(Family::TriangleIcis).size() == 8);
    CHECK(c.family(Family::QuadrilateralHypersurface).size() == 6);
    CHECK(c.family(Family::QuadrilateralIcis).size() == 5);
    CHECK(c.table8().size() == 22);
    CHECK(c.kondo_extras().size() == 3);
    CHECK(c.validate().ok());
  }

  TEST_CASE("lookup") {
    const auto& e12 = Catalog::builtin().lookup("E12");
    CHECK(e12.mu == 12);
    CHECK(e12.d == 1);
    CHECK(e12.dol == std::vector<std::int64_t>{2, 3, 7});
    CHECK(e12.gab_variants.at(0).numbers == std::vector<std::int64_t>{2, 3, 7});
    CHECK(e12.weights.degrees == std::vector<std::int64_t>{42});

    const auto& j9 = Catalog::builtin().lookup("J'9");
    CHECK(j9.mu == 9);
    CHECK(j9.d == -4);
    CHECK(j9.dol == std::vector<std::int64_t>{2, 3, 10});
    CHECK(j9.gab_variants.at(0).numbers == std::vector<std::int64_t>{2, 2, 2, 3});
    CHECK(j9.weights.degrees == std::vector<std::int64_t>{16, 18});

    CHECK_ERROR(Catalog::builtin().lookup("X99"), UnknownName);
    CHECK(Catalog::builtin().find("X99") == nullptr);
  }

  TEST_CASE("dual_of") {
    CHECK(dual_names("E13") == std::set<std::string>{"Z11"});
    CHECK(dual_names("W1,0") == std::set<std::string>{"K'10", "L10"});
    CHECK(dual_names("L1,0") == std::set<std::string>{"L1,0", "K'1,0"});
    CHECK(Catalog::builtin().dual_pairs().size() == 24);
  }

  TEST_CASE("Gabrielov symbols") {
    auto v = parse_gab_variant("2 _6_ _6_");
    CHECK(v.type == GabSymbolType::HypersurfaceTwo);
    CHECK(v.numbers == std::vector<std::int64_t>{2, 6, 6});
    CHECK(v.to_string() == "2 _6_ _6_");
    CHECK(parse_gab_variant("2 3 7").type == GabSymbolType::Plain);
    CHECK(parse_gab_variant("2 2 2 _3_").type == GabSymbolType::IcisOne);
    CHECK(parse_gab_variant("2 _4_ 2 _4_").type == GabSymbolType::IcisThree);
    CHECK(parse_gab_variant("_3_ _3_ _3_ _3_").type == GabSymbolType::AllUnderlined);
    CHECK_ERROR(parse_gab_variant("_2_ 3 7"), Malformed);
    CHECK_ERROR(parse_gab_variant("2 3"), Malformed);
  }

  TEST_CASE("determinant formulas") {
    CHECK(quad_determinant_formula(parse_gab_variant("2 3 _10_")) == 4);
    CHECK(quad_determinant_formula(parse_gab_variant("4 _4_ _5_")) == 27);
    CHECK(quad_determinant_formula(parse_gab_variant("2 _4_ 2 _4_")) == 32);
    CHECK_ERROR(quad_determinant_formula(parse_gab_variant("2 3 7")), NoFormula);
    CHECK_ERROR(quad_determinant_formula(parse_gab_variant("_3_ _3_ _3_ _3_")), NoFormula);
    for (const auto& r : Catalog::builtin().records()) {
      if (r.family != Family::QuadrilateralHypersurface && r.family != Family::QuadrilateralIcis) continue;
      for (const auto& g : r.gab_variants)
        if (g.type != GabSymbolType::AllUnderlined) CHECK(quad_determinant_formula(g) == std::abs(r.d));
    }
  }

  TEST_CASE("duality verifiers") {
    auto arnold = verify_arnold(Catalog::builtin());
    CHECK(arnold.checks.size() > 0);
    CHECK(arnold.ok());
    auto ext = verify_extension(Catalog::builtin());
    CHECK(ext.checks.size() > 0);
    CHECK(ext.ok());
  }

  TEST_CASE("E13 and Z11") {
    const auto& e13 = Catalog::builtin().lookup("E13");
    const auto& z11 = Catalog::builtin().lookup("Z11");
    CHECK(e13.dol == z11.gab_variants[0].numbers);
    CHECK(e13.mu + z11.mu == 24);
    CHECK(e13.d == z11.d);
  }

  TEST_CASE("extension data J'9 and I1,0") {
    const auto& j9 = Catalog::builtin().lookup("J'9");
    const auto& j30 = Catalog::builtin().lookup("J3,0");
    CHECK(j9.mu + j30.mu == 25);
    CHECK(*j9.mu_flat + j30.mu == 24);
    CHECK(*j9.d_flat == j30.d);
    CHECK(saito_dual(*j30.frame) == *j9.frame_flat);
    const auto& i10 = Catalog::builtin().lookup("I1,0");
    CHECK(2 * i10.mu == 26);
    auto dol = i10.dol;
    std::sort(dol.begin(), dol.end());
    CHECK(dol == std::vector<std::int64_t>{3, 3, 3, 3});
  }

  TEST_CASE("leech matching") {
    const auto& c = Catalog::builtin();
    const auto& e12 = *c.lookup("E12").frame;
    auto row = c.table8_match(concatenate(e12, saito_dual(e12)));
    REQUIRE(row);
    CHECK(row->atlas_label == "21A");
    auto row9 = c.table8_match(concatenate(*c.lookup("J3,0").frame, *c.lookup("J'9").frame_flat));
    REQUIRE(row9);
    CHECK(row9->atlas_label == "9C");
    auto row10 = c.table8_match(parse_frame("5^2*10^2/1^2*2^2"));
    REQUIRE(row10);
    CHECK(row10->atlas_label == "10A");
    CHECK(row10->duality_pairs.empty());
    CHECK_FALSE(c.table8_match(parse_frame("3/1")));
  }

  TEST_CASE("JSON round trip of the whole catalog") {
    auto doc = builtin_json();
    auto again = Catalog::from_json(doc);
    REQUIRE(again.records().size() == Catalog::builtin().records().size());
    for (std::size_t i = 0; i < again.records().size(); ++i)
      CHECK(record_to_json(again.records()[i]) == record_to_json(Catalog::builtin().records()[i]));
  }

  TEST_CASE("loader rejects inconsistent data") {
    auto doc = builtin_json();
    doc["singularities"][0]["mu"] = 13;
    CHECK_ERROR(Catalog::from_json(doc), InvalidCatalog);

    doc = builtin_json();
    doc["singularities"][0]["duals"] = {"Q10"};
    CHECK_ERROR(Catalog::from_json(doc), InvalidCatalog);

    CHECK_ERROR(Catalog::from_text("{"), InvalidCatalog);
  }
}
