#include <doctest.h>

#include "hilbk3/report.hpp"

using namespace hilbk3;
using report::json;

TEST_CASE("betti report") {
  const json r = report::betti(2, SurfaceBetti::k3());
  CHECK(r["schema"] == report::kSchema);
  CHECK(r["command"] == "betti");
  CHECK(r["result"]["betti"] == json({1, 0, 23, 0, 276, 0, 23, 0, 1}));
  CHECK(r["result"]["euler_characteristic"] == 324);
  CHECK(r["result"]["ledger"].size() == 2);
  CHECK(report::succeeded(r));
  CHECK(report::betti(1, SurfaceBetti::k3())["result"]["betti"] == json({1, 0, 22, 0, 1}));
  CHECK(report::betti(3, SurfaceBetti::k3())["result"]["betti"].size() == 13);
  CHECK(report::betti(3, SurfaceBetti::k3(), 4)["result"]["betti"].size() == 5);
  CHECK_THROWS(report::betti(0, SurfaceBetti::k3()));
}

TEST_CASE("reports are deterministic") {
  CHECK(report::certify(6).dump() == report::certify(6).dump());
  CHECK(report::certify(6, std::nullopt, 3)["result"]["candidates"] == report::certify(6)["result"]["candidates"]);
  CHECK(report::frobenius(3, 2, std::nullopt, 5).dump() == report::frobenius(3, 2, std::nullopt, 5).dump());
}

TEST_CASE("certify report") {
  const json six = report::certify(6);
  CHECK(report::succeeded(six));
  const auto& c = six["result"]["candidates"];
  REQUIRE(c.size() == 4);
  CHECK(c[0]["diagram"] == "(6)");
  CHECK(c[0]["h4"] == true);
  CHECK(c[1]["obstruction"] == "1/5");
  CHECK(c[2]["product_flag"] == true);
  CHECK(six["result"]["product_flags"] == 1);
  CHECK(report::certify(2)["result"]["verdict"] == "no proper candidates");
  const json three = report::certify(3, std::nullopt, 1);
  CHECK(three["result"]["candidates"][0]["h4"] == true);
  CHECK(three["result"]["cross_check"][0]["obstructed"] == true);
  for (const auto& step : six["audit"]) CHECK(step.contains("formula"));
}

TEST_CASE("other reports") {
  const json p = report::punctual(10);
  CHECK(p["result"]["fixed_points"].size() == 1);
  CHECK(p["result"]["fixed_points"][0]["ideal"] == "m^4");
  CHECK(report::punctual(11)["result"]["fixed_points"].empty());
  CHECK(report::succeeded(report::punctual(11)));
  CHECK(report::strata(4)["result"]["codims"] == json({0, 2, 4, 4, 6}));
  CHECK(report::ideals(5)["result"]["ideals"].size() == 4);
  const json f = report::frobenius(3, 2, std::nullopt, 1);
  CHECK(f["result"]["dims"] == json({1, 3, 6, 3, 1}));
  CHECK(f["result"]["pairing_nondegenerate"] == true);
  CHECK(report::succeeded(f));
  const json big = report::frobenius(23, 2);
  CHECK(big["result"]["mode"] == "generators only");
  CHECK(big["result"]["harmonic_generators"] == 2300 - 23);
  CHECK(report::succeeded(big));
  CHECK_THROWS(report::frobenius(std::nullopt, 2));
  CHECK_THROWS(report::frobenius(2, 2, Matrix::identity(3)));
}

TEST_CASE("gram parsing") {
  const json ok = json::parse(R"({"dim": 2, "rows": [["0/1", "1/2"], ["1/2", "-3"]]})");
  const Matrix g = report::parse_gram(ok);
  CHECK(g(0, 1) == Rational(1, 2));
  CHECK(g(1, 1) == -3);
  CHECK_THROWS(report::parse_gram(json::parse(R"({"dim": 2, "rows": [["1", "2"], ["3", "1"]]})")));
  CHECK_THROWS(report::parse_gram(json::parse(R"({"dim": 2, "rows": [["1", "0"]]})")));
  CHECK_THROWS(report::parse_gram(json::parse(R"({"dim": 1, "rows": [["x"]]})")));
  CHECK_THROWS(report::parse_gram(json::parse(R"({"dim": 1, "rows": [[0.5]]})")));
  CHECK_THROWS(report::parse_gram(json::parse(R"({"rows": [["1"]]})")));
  CHECK_THROWS(report::parse_gram(json::parse(R"({"dim": 0, "rows": []})")));
  CHECK_THROWS(report::parse_gram(json::array()));
  CHECK_THROWS(report::load_gram_file("/nonexistent/gram.json"));
}

TEST_CASE("surface parsing") {
  CHECK(report::parse_surface("1,22,1").b2 == 22);
  CHECK(report::parse_surface("1,10,1").b2 == 10);
  CHECK_THROWS(report::parse_surface("1,22"));
  CHECK_THROWS(report::parse_surface("1,x,1"));
  CHECK_THROWS(report::parse_surface("2,22,1"));
  CHECK_THROWS(report::parse_surface("1,2.5,1"));
}

TEST_CASE("error payload and table rendering") {
  const json e = report::error("betti", {{"n", "0"}}, "bad");
  CHECK(e["status"] == "error");
  CHECK(e["schema"] == report::kSchema);
  CHECK_FALSE(report::succeeded(e));
  CHECK(report::render_table(e).find("error: bad") != std::string::npos);
  const std::string t = report::render_table(report::strata(3));
  CHECK(t.find("codims: [0, 2, 4]") != std::string::npos);
  CHECK(t.find("PASS") != std::string::npos);
}

TEST_CASE("split form") {
  const Matrix s = report::split_form(3);
  CHECK(s(0, 1) == 1);
  CHECK(s(2, 2) == 1);
  CHECK(determinant(s) == -1);
  CHECK_THROWS(report::split_form(0));
}
