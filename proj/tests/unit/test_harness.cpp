#include "doctest.h"

#include <sstream>

#include "../oracles.hpp"
#include "support.hpp"

#include "hessfano/error.hpp"
#include "hessfano/harness.hpp"

using namespace hessfano;

TEST_CASE("classify_one")
{
  const ClassReport weak = classify_one(hf({3, 3, 4, 4}), true);
  CHECK(weak.nef);
  CHECK(weak.weak_fano);
  CHECK_FALSE(weak.fano);
  REQUIRE(weak.degree);
  CHECK(*weak.degree > 0);
  CHECK(weak.degree_positive == true);
  REQUIRE(weak.witness_u);
  CHECK(weak.witness_conditions == std::array<bool, 4>{true, true, true, true});

  const ClassReport flag = classify_one(hf(full(5)), false);
  CHECK(flag.fano);
  CHECK_FALSE(flag.degree);

  const ClassReport neither = classify_one(hf({2, 5, 5, 5, 5}), true);
  CHECK_FALSE(neither.nef);
  CHECK_FALSE(neither.witness_u);
  CHECK_FALSE(neither.degree);
  CHECK_FALSE(neither.degree_positive);
}

TEST_CASE("survey counts")
{
  const Survey three = survey(3, false);
  CHECK(three.reports.size() == 2);
  CHECK(three.summary.fano == 2);
  const Survey four = survey(4, false);
  CHECK(four.reports.size() == 5);
  CHECK(four.summary.fano == 2);
  const Survey two = survey(2, false);
  CHECK(two.reports.size() == 1);
  CHECK(two.summary.fano == 1);
  CHECK_THROWS_AS(survey(6, false, 5), Error);
}

TEST_CASE("export formats")
{
  CHECK(export_reports({}, Format::Json) == "{\"n\":null,\"reports\":[]}\n");
  const std::string json = export_reports({classify_one(hf({2, 3, 3}), false)}, Format::Json);
  CHECK(json.find("\"w_h\":\"2 3 1\"") != std::string::npos);

  const std::string csv = export_reports(survey(4, false).reports, Format::Csv);
  std::istringstream lines(csv);
  std::string line;
  int count = 0;
  std::getline(lines, line);
  CHECK(line.rfind("n,h,h_star,dim,xi,", 0) == 0);
  while (std::getline(lines, line))
    ++count;
  CHECK(count == 5);
  CHECK(csv.find("\"3 3 4 4\"") != std::string::npos);

  const std::string text = export_reports(survey(3, false).reports, Format::Text);
  CHECK(text.rfind("h ", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);

  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("export rejects contradictory reports")
{
  ClassReport r = classify_one(hf({3, 3, 4, 4}), false);
  r.fano = true;
  try {
    export_reports({r}, Format::Json);
    FAIL("invariant not checked");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvariantViolation);
  }
  r = classify_one(hf({3, 3, 4, 4}), false);
  r.weak_fano = false;
  CHECK_THROWS_AS(export_reports({r}, Format::Csv), Error);
}

TEST_CASE("JSON round trip")
{
  std::vector<ClassReport> reports = survey(5, true).reports;
  for (ClassReport &r : survey(4, false).reports)
    reports.push_back(r);
  reports.push_back(classify_one(hf({2, 5, 5, 5, 5}), true));
  const std::string text = export_reports(reports, Format::Json);
  CHECK(parse_json_reports(text) == reports);
  CHECK(export_reports(parse_json_reports(text), Format::Json) == text);
  CHECK_THROWS_AS(parse_json_reports("{"), Error);
}

TEST_CASE("determinism")
{
  CHECK(export_reports(survey(5, true).reports, Format::Json) ==
        export_reports(survey(5, true).reports, Format::Json));
}
