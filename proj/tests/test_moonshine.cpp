#include <doctest.h>

#include <algorithm>

#include "strange/catalog.hpp"
#include "strange/moonshine.hpp"

using namespace strange;

TEST_SUITE("moonshine") {
  TEST_CASE("small bounds") {
    CHECK(search_sequences(1).empty());
    auto s13 = search_sequences(13);
    CHECK(std::count(s13.begin(), s13.end(), parse_frame("13^2/1^2")) == 1);
    CHECK(std::count(s13.begin(), s13.end(), parse_frame("5^2*10^2/1^2*2^2")) == 1);
  }

  TEST_CASE("search conditions hold for every hit") {
    for (const auto& pi : search_sequences(60)) {
      CHECK(is_self_dual(pi));
      CHECK(degree(pi) == 24);
      auto t = trace_power(pi, 1);
      CHECK((t == -2 || t == -3 || t == -4));
      CHECK(product_of_keys(pi) > 0);
    }
  }

  TEST_CASE("monotone in the bound") {
    auto small = search_sequences(30);
    auto large = search_sequences(60);
    for (const auto& pi : small) CHECK(std::find(large.begin(), large.end(), pi) != large.end());
  }

  TEST_CASE("labels") {
    auto hits = label_search(Catalog::builtin(), 119);
    CHECK(hits.size() == 25);
    CHECK(std::count_if(hits.begin(), hits.end(), [](const SearchHit& h) { return h.table8_label.has_value(); }) == 22);
    CHECK(std::count_if(hits.begin(), hits.end(), [](const SearchHit& h) { return h.extra_class.has_value(); }) == 3);
  }

  TEST_CASE("pairings") {
    auto rep = classify_pairings(Catalog::builtin());
    CHECK(rep.checks.ok());
    auto it = std::find_if(rep.pairings.begin(), rep.pairings.end(),
                           [](const Pairing& p) { return p.left == "J'10" && p.right == "Z1,0"; });
    REQUIRE(it != rep.pairings.end());
    CHECK(it->table8_label == std::optional<std::string>("7B"));
    CHECK(it->product == parse_frame("2^3*14^3/1^3*7^3"));
    auto unmatched = rep.unmatched_rows;
    std::sort(unmatched.begin(), unmatched.end());
    CHECK(unmatched == std::vector<std::string>{"10A", "12A", "15A"});
  }
}
