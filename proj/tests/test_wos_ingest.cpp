#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "fracnet/wos_ingest.hpp"

using namespace fracnet;

namespace {

std::vector<PublicationRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_wos_export(in);
}

}  // namespace

TEST_CASE("single author line") {
  const auto recs = parse("AU Garfield, E\nER\nEF");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].authors == std::vector<std::string>{"GARFIELD, E"});
  CHECK(recs[0].seq_id == 0);
  CHECK(recs[0].addresses.empty());
}

TEST_CASE("author continuation lines append authors") {
  const auto recs = parse("AU A, B\n   C, D\nER\nEF");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].authors == std::vector<std::string>{"A, B", "C, D"});
}

TEST_CASE("records are numbered in file order") {
  const auto recs = parse("AU A\nER\n\nAU B\nER\nEF\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].seq_id == 0);
  CHECK(recs[1].seq_id == 1);
  CHECK(recs[1].authors == std::vector<std::string>{"B"});
}

TEST_CASE("bracketed author list is stripped from C1") {
  const auto recs = parse("C1 [Smith, J] Univ X, Amsterdam, Netherlands.\nER\nEF");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].addresses == std::vector<std::string>{"Univ X, Amsterdam, Netherlands."});
  CHECK(recs[0].authors.empty());
}

TEST_CASE("seq ids continue from an offset") {
  std::istringstream in("AU A\nER\nAU B\nER\nEF");
  const auto recs = parse_wos_export(in, 7);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].seq_id == 7);
  CHECK(recs[1].seq_id == 8);
}

TEST_CASE("author normalization") {
  CHECK(normalize_author("  van   Dijk,\tNJ.. ") == "VAN DIJK, NJ");
  CHECK(normalize_author("Dekker, L.") == "DEKKER, L");
  CHECK(normalize_author("[Anonymous]") == "[ANONYMOUS]");
  CHECK(normalize_author("Kovač, M") == "KOVAč, M");
  CHECK(normalize_author(" . ").empty());
}

TEST_CASE("reprint addresses drop the author prefix") {
  const auto recs = parse(
      "RP Smith, J (reprint author), Univ X, City, Netherlands.\n"
      "ER\n"
      "RP Jones, K (corresponding author), Univ Y, Town, Spain.; Brown, L (corresponding "
      "author), Univ Z, Paris, France.\n"
      "ER\n"
      "RP Univ W, Rome, Italy.\nER\nEF\n");
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].addresses == std::vector<std::string>{"Univ X, City, Netherlands."});
  CHECK(recs[1].addresses ==
        std::vector<std::string>{"Univ Y, Town, Spain.", "Univ Z, Paris, France."});
  CHECK(recs[2].addresses == std::vector<std::string>{"Univ W, Rome, Italy."});
}

TEST_CASE("year and accession") {
  const auto recs = parse("PT J\nAU A\nPY 2016\nUT WOS:000123\nER\nAU B\nPY n/a\nER\nEF");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].year == 2016);
  CHECK(recs[0].accession == "WOS:000123");
  CHECK_FALSE(recs[1].year.has_value());
  CHECK_FALSE(recs[1].accession.has_value());
}

TEST_CASE("continuations of unretained fields are ignored") {
  const auto recs = parse("AU A\nAB First line\n   Second, line\nC1 Univ X, Spain.\n   Univ Y, Italy.\nER\nEF");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].authors == std::vector<std::string>{"A"});
  CHECK(recs[0].addresses == std::vector<std::string>{"Univ X, Spain.", "Univ Y, Italy."});
}

TEST_CASE("BOM, CRLF line endings and blank lines are tolerated") {
  const auto recs = parse("\xEF\xBB\xBF" "FN Clarivate\r\nVR 1.0\r\n\r\nAU A\r\n   B\r\nER\r\n\r\nEF\r\n");
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].authors == std::vector<std::string>{"A", "B"});
}

TEST_CASE("empty exports") {
  CHECK(parse("EF\n").empty());
  CHECK(parse("").empty());
  CHECK(parse("FN Clarivate\nVR 1.0\nEF").empty());
}

TEST_CASE("a record without ER is malformed and names the line") {
  try {
    parse("AU A\nER\nAU B\nPY 2001\n");
    FAIL("expected MalformedRecord");
  } catch (const MalformedRecord& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("AU A\nEF\n"), MalformedRecord);
}

TEST_CASE("binary input is a decode error") {
  CHECK_THROWS_AS(parse(std::string("AU A\nER\n\x00\x01\x02\xff", 12)), DecodeError);
  CHECK_THROWS_AS(parse("AU \xC3\x28\nER\nEF"), DecodeError);
  CHECK_NOTHROW(parse("AU M\xC3\xBCller, K\nER\nEF"));
}

TEST_CASE("reader is incremental") {
  std::istringstream in("AU A\nER\nAU B\nER\nAU C\n");
  WosReader reader(in);
  auto first = reader.next();
  REQUIRE(first);
  CHECK(first->authors[0] == "A");
  CHECK(reader.lines_read() == 2);
  CHECK(reader.next()->authors[0] == "B");
  CHECK(reader.records_read() == 2);
  CHECK_THROWS_AS(reader.next(), MalformedRecord);
}

TEST_CASE("record count equals ER count on the parser fixture") {
  std::ifstream f(fracnet::testing::data_path("parser10.wos"), std::ios::binary);
  REQUIRE(f);
  const auto recs = parse_wos_export(f);
  CHECK(recs.size() == 10);
  for (std::size_t k = 0; k < recs.size(); ++k) CHECK(recs[k].seq_id == k);
}

TEST_CASE("property: serialize then parse is the identity on retained fields") {
  std::mt19937_64 rng(20161017);
  const std::vector<std::string> names = {"SMITH, J", "VAN DIJK, NJ", "MüLLER, K", "[ANONYMOUS]",
                                          "LI, X", "O'BRIEN, P"};
  const std::vector<std::string> places = {"Univ X, Amsterdam, Netherlands.",
                                           "Texas A&M Univ, College Stn, TX 77843 USA",
                                           "CNRS, Paris, France", "Leiden Univ, CWTS, Leiden"};
  std::uniform_int_distribution<int> count(0, 4), pick(0, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PublicationRecord> recs(static_cast<std::size_t>(count(rng)));
    for (std::size_t k = 0; k < recs.size(); ++k) {
      recs[k].seq_id = k;
      for (int a = count(rng); a > 0; --a) recs[k].authors.push_back(names[pick(rng) % names.size()]);
      for (int a = count(rng); a > 0; --a) recs[k].addresses.push_back(places[pick(rng) % places.size()]);
      if (pick(rng) % 2) recs[k].year = 1990 + pick(rng) % 30;
    }
    std::istringstream in(to_wos_text(recs));
    const auto back = parse_wos_export(in);
    REQUIRE(back == recs);
  }
}
