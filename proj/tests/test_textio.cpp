#include "doctest.h"

#include "core/factorization.hpp"
#include "core/textio.hpp"
#include "helpers.hpp"

using namespace relcat;

namespace {

const char* kTau1Text =
    "# running example\n"
    "relation tau1\n"
    "dom 2 3\n"
    "cod 2 3 5 7 11\n"
    "pairs\n"
    "2 -> 2\n"
    "2 -> 3\n"
    "3 -> 5\n"
    "3 -> 7\n"
    "end\n";

}  // namespace

TEST_CASE("parsing the running example") {
  RelationFile file = parse_file(kTau1Text, true);
  REQUIRE(file.relations.size() == 1);
  CHECK(file.relations[0].first == "tau1");
  CHECK(file.relations[0].second == rtest::tau1());
  CHECK(file.find("tau1") != nullptr);
  CHECK(file.find("nope") == nullptr);
  CHECK_THROWS_WITH_AS(file.require("nope"), doctest::Contains("UnknownRelation"), Error);
}

TEST_CASE("empty input parses to an empty file") {
  CHECK(parse_file("", true).relations.empty());
  CHECK(parse_file("# only a comment\n\n", true).relations.empty());
}

TEST_CASE("pair outside the codomain is a semantic error with a line number") {
  const char* text =
      "relation r\n"
      "dom 2\n"
      "cod 3\n"
      "pairs\n"
      "2 -> 9\n"
      "end\n";
  try {
    parse_file(text, true);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pair_out_of_carrier);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("strict label validation points at the offending line") {
  const char* zero =
      "relation r\n"
      "dom 0 2\n"
      "cod 3\n"
      "pairs\n"
      "end\n";
  try {
    parse_file(zero, true);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_label);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  const char* unit =
      "relation r\n"
      "dom 1 2\n"
      "cod 3\n"
      "pairs\n"
      "end\n";
  CHECK_THROWS_AS(parse_file(unit, true), Error);
  // The same text is fine outside strict mode.
  CHECK(parse_file(unit, false).relations.size() == 1);
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_WITH_AS(parse_file("relation\n", true), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(parse_file("dom 2\n", true), doctest::Contains("relation"), Error);
  CHECK_THROWS_WITH_AS(parse_file("relation r\ndom 2\ncod 3\npairs\n", true),
                       doctest::Contains("not closed"), Error);
  CHECK_THROWS_WITH_AS(parse_file("relation r\npairs\n", true),
                       doctest::Contains("requires 'dom'"), Error);
  CHECK_THROWS_WITH_AS(parse_file("relation r\ndom x\n", true),
                       doctest::Contains("integer"), Error);
  const char* dup =
      "relation r\ndom 2\ncod 3\npairs\nend\n"
      "relation r\ndom 2\ncod 3\npairs\nend\n";
  CHECK_THROWS_WITH_AS(parse_file(dup, true), doctest::Contains("duplicate"), Error);
}

TEST_CASE("serialize/parse round trip") {
  const char* text =
      "relation tau1\n"
      "dom 2 3\n"
      "cod 2 3 5 7 11\n"
      "pairs\n"
      "2 -> 2\n"
      "2 -> 3\n"
      "3 -> 5\n"
      "3 -> 7\n"
      "end\n"
      "\n"
      "relation nothing\n"
      "dom\n"
      "cod 2\n"
      "pairs\n"
      "end\n";
  RelationFile file = parse_file(text, true);
  std::string serialized = serialize_file(file);
  RelationFile again = parse_file(serialized, true);
  REQUIRE(again.relations.size() == file.relations.size());
  for (std::size_t i = 0; i < again.relations.size(); ++i) {
    CHECK(again.relations[i].first == file.relations[i].first);
    CHECK(again.relations[i].second == file.relations[i].second);
  }
  // Serialization is a fixed point.
  CHECK(serialize_file(again) == serialized);
}

TEST_CASE("classify report for tau1 is frozen") {
  std::string report = classify_report("tau1", rtest::tau1());
  CHECK(report ==
        "relation: tau1\n"
        "dom: {2,3}\n"
        "cod: {2,3,5,7,11}\n"
        "image: {2,3,5,7}\n"
        "coimage: {2,3}\n"
        "row_cardinalities: {2:2,3:2}\n"
        "correspondence: true\n"
        "partial_function: false\n"
        "injective: true\n"
        "surjective: false\n"
        "function: false\n"
        "bijective: false\n"
        "section: true\n"
        "retraction: false\n"
        "mono: true\n"
        "epi: false\n"
        "iso: false\n"
        "extremal_epi: false\n");
}

TEST_CASE("oracle report for tau1") {
  OracleOutcome out = oracle_report("tau1", rtest::tau1(), 12);
  CHECK(out.agreement);
  CHECK(out.text ==
        "relation: tau1\n"
        "mono fast=true oracle=true\n"
        "epi fast=false oracle=false witness={2}\n"
        "agreement: true\n");
}

TEST_CASE("oracle report exposes the empty-image collision") {
  OracleOutcome out = oracle_report("hollow", rtest::rel({2}, {3}, {}), 12);
  CHECK(out.agreement);
  CHECK(out.text.find("mono fast=false oracle=false witness=({},{2})") !=
        std::string::npos);
}

TEST_CASE("classify report flags the identity as an iso") {
  std::string report = classify_report("id2", Relation::identity(rtest::car({2, 3})));
  CHECK(report.find("iso: true") != std::string::npos);
  CHECK(report.find("extremal_epi: true") != std::string::npos);
  CHECK(report.find("section: true") != std::string::npos);
  CHECK(report.find("retraction: true") != std::string::npos);
}

TEST_CASE("factor report for the identity") {
  std::string report = factor_report("id2", Relation::identity(rtest::car({2})), 1,
                                     ClassSpec::parse("all"), ClassSpec::parse("iso"),
                                     kDefaultBudget);
  CHECK(report.find("factorizations: 1") != std::string::npos);
  CHECK(report.find("unique_up_to_iso: true") != std::string::npos);
}
