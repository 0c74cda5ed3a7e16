#include <doctest.h>

#include <random>

#include "fracnet/entity_extraction.hpp"

using namespace fracnet;

TEST_CASE("country is the last segment") {
  CHECK(extract_country("Univ Amsterdam, NL-1001 Amsterdam, Netherlands.") == "NETHERLANDS");
  CHECK(extract_country("Yeungnam Univ, 214-1 Dae Dong, Gyongsan 712749, South Korea.") ==
        "SOUTH KOREA");
  CHECK(extract_country("Leiden Univ, CWTS, Leiden, Netherlands") == "NETHERLANDS");
}

TEST_CASE("trailing USA token wins") {
  CHECK(extract_country("Texas A&M Univ, College Stn, TX 77843 USA") == "USA");
  CHECK(extract_country("Harvard Univ, Cambridge, MA USA.") == "USA");
  CHECK(extract_country("NIH, USA") == "USA");
  CHECK(extract_country("Univ Sydney, Sydney, NSW 2006, Australia") == "AUSTRALIA");
}

TEST_CASE("institution is the first segment") {
  CHECK(extract_institution("Univ Amsterdam, NL-1001 Amsterdam, Netherlands.") ==
        "UNIV AMSTERDAM");
  CHECK(extract_institution("Yeungnam Univ, Gyongsan, South Korea.") == "YEUNGNAM UNIV");
  CHECK(extract_institution("  Max  Planck Gesell , Munich") == "MAX PLANCK GESELL");
}

TEST_CASE("empty addresses yield no entity") {
  CHECK_FALSE(extract_institution(""));
  CHECK_FALSE(extract_country(""));
  CHECK_FALSE(extract_country("   .  "));
  CHECK_FALSE(extract_institution(", Paris, France"));
  CHECK_FALSE(extract_country("Univ X, ."));
}

TEST_CASE("author level deduplicates and sorts") {
  PublicationRecord r;
  r.authors = {"B", "A", "B"};
  const auto e = extract_entities(r, AggregationLevel(Level::Author));
  CHECK(e == std::vector<EntityCount>{{"A", 1}, {"B", 1}});
}

TEST_CASE("anonymous authors contribute no entity") {
  PublicationRecord r;
  r.authors = {std::string(kAnonymousAuthor)};
  CHECK(extract_entities(r, AggregationLevel(Level::Author)).empty());
}

TEST_CASE("valued and binary country counts") {
  PublicationRecord r;
  r.addresses = {"Harvard Univ, Cambridge, MA 02138 USA", "MIT, Cambridge, MA 02139 USA",
                 "Univ Amsterdam, Amsterdam, Netherlands."};
  CHECK(extract_entities(r, AggregationLevel(Level::Country, Mode::Valued)) ==
        std::vector<EntityCount>{{"NETHERLANDS", 1}, {"USA", 2}});
  CHECK(extract_entities(r, AggregationLevel(Level::Country, Mode::Binary)) ==
        std::vector<EntityCount>{{"NETHERLANDS", 1}, {"USA", 1}});
}

TEST_CASE("skipped addresses are counted") {
  PublicationRecord r;
  r.addresses = {"", "Univ X, Spain", ", , "};
  ExtractionStats stats;
  const auto e = extract_entities(r, AggregationLevel(Level::Institution), &stats);
  CHECK(e == std::vector<EntityCount>{{"UNIV X", 1}});
  CHECK(stats.skipped_addresses == 2);
}

TEST_CASE("author level is always binary") {
  constexpr AggregationLevel agg(Level::Author, Mode::Valued);
  static_assert(agg.mode() == Mode::Binary);
  CHECK(AggregationLevel(Level::Country).mode() == Mode::Valued);
}

TEST_CASE("property: binary output is valued output with unit counts") {
  const std::vector<std::string> pool = {
      "Univ A, X, Spain.", "Univ B, Y, Spain", "Univ A, Z, France.", "Lab C, W, MD 20892 USA",
      "Lab C, V, Germany", "", "Inst D, Paris, France"};
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), len(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    PublicationRecord r;
    for (auto n = len(rng); n > 0; --n) r.addresses.push_back(pool[pick(rng)]);
    for (auto level : {Level::Institution, Level::Country}) {
      const auto valued = extract_entities(r, AggregationLevel(level, Mode::Valued));
      const auto binary = extract_entities(r, AggregationLevel(level, Mode::Binary));
      REQUIRE(valued.size() == binary.size());
      int total = 0;
      for (std::size_t i = 0; i < valued.size(); ++i) {
        CHECK(valued[i].label == binary[i].label);
        CHECK(binary[i].count == 1);
        CHECK(valued[i].count >= 1);
        if (i > 0) CHECK(valued[i - 1].label < valued[i].label);
        total += valued[i].count;
      }
      ExtractionStats stats;
      extract_entities(r, AggregationLevel(level), &stats);
      CHECK(static_cast<std::size_t>(total) + stats.skipped_addresses == r.addresses.size());
    }
  }
}
