// test_serialize.cpp - JSON emitters, CSV, digests, and manifest lines:
// exact bytes for the simple shapes, byte-identical round-trips for the
// report documents, and digest stability for determinism.

#include <catch2/catch_amalgamated.hpp>

#include <gaplab/gaplab.hpp>

#include "oracles.hpp"

using namespace gaplab;

TEST_CASE("json integers cross the 2^53 boundary as strings") {
  CHECK(json_int(Int(5)).dump() == "5");
  CHECK(json_int(Int(-3)).dump() == "-3");
  Int exact = pow2_int(53);
  CHECK(json_int(exact).dump() == "9007199254740992");
  CHECK(json_int(exact + 1).dump() == "\"9007199254740993\"");
  CHECK(json_int(-(exact + 1)).dump() == "\"-9007199254740993\"");
  CHECK(json_int(pow10_int(30)).dump() == "\"1000000000000000000000000000000\"");
}

TEST_CASE("rationals and log-scale reals") {
  CHECK(json_rat(make_rat(3, 4)).dump() == "\"3/4\"");
  CHECK(json_rat(make_rat(10, 2)).dump() == "\"5/1\"");
  CHECK(json_rat(make_rat(-1, 8)).dump() == "\"-1/8\"");
  ordered_json j = json_logreal(LogReal::from_value(-100.0));
  CHECK(j["sign"] == -1);
  CHECK(j["log10_magnitude"].get<double>() == Catch::Approx(2.0).epsilon(1e-14));
  CHECK(json_logreal(LogReal::zero())["log10_magnitude"].is_null());
}

TEST_CASE("hit serialization is the documented object shape") {
  DivisibilityHit hit{Family::CubicTriple, Int(3), Int(4), 1, Int(2)};
  CHECK(to_json(hit).dump() == R"({"a":3,"b":4,"t":2})");
  std::vector<std::pair<Int, Int>> pairs = {{Int(2), Int(3)}, {Int(14), Int(20)}};
  CHECK(pairs_to_json(pairs).dump() == "[[2,3],[14,20]]");
}

TEST_CASE("report documents round-trip byte-identically") {
  std::vector<std::string> dumps;
  dumps.push_back(to_json(verify_theorem1()).dump());
  dumps.push_back(to_json(cubic_field_bounds(Int(12))).dump());
  dumps.push_back(to_json(quartic_field_bounds(Int(24))).dump());
  dumps.push_back(to_json(bugeaud_measure(4, Int(12))).dump());
  dumps.push_back(to_json(cutoff_cubic(Int(2), 1)).dump());
  dumps.push_back(to_json(cutoff_quartic(Int(7), -2)).dump());
  SearchConfig cfg;
  cfg.l = 1;
  cfg.a_min = 2;
  cfg.a_max = 30;
  cfg.b_max = 300;
  cfg.worker_count = 1;
  std::vector<DivisibilityHit> hits = search_divisible(cfg);
  dumps.push_back(to_json(hits).dump());
  dumps.push_back(to_json(gap_report(hits)).dump());
  DivisibilityHit qhit{Family::Quartic, Int(2), Int(12), 1, Int(0)};
  dumps.push_back(to_json(reduce_quartic(qhit)).dump());
  dumps.push_back(to_json(reduce_cubic({Family::CubicTriple, Int(3), Int(4), 1, Int(0)})).dump());
  dumps.push_back(to_json(verify_divisor_chain(Int(4), Int(5), Int(2), 1)).dump());
  dumps.push_back(to_json(thm4_report({qhit})).dump());
  for (const std::string& text : dumps) {
    CHECK(ordered_json::parse(text).dump() == text);
  }
}

TEST_CASE("csv rendering") {
  std::vector<std::pair<Int, Int>> pairs = {{Int(2), Int(3)}, {Int(14), Int(20)}};
  CHECK(to_csv(pairs_to_json(pairs)) == "2,3\n14,20\n");
  std::vector<DivisibilityHit> hits = {{Family::CubicTriple, Int(3), Int(4), 1, Int(2)}};
  CHECK(to_csv(to_json(hits)) == "a,b,t\n3,4,2\n");
  ordered_json obj;
  obj["name"] = "x,y";
  obj["quoted"] = "say \"hi\"";
  obj["n"] = 7;
  CHECK(to_csv(obj) == "key,value\nname,\"x,y\"\nquoted,\"say \"\"hi\"\"\"\nn,7\n");
  // nested values are embedded as JSON text
  ordered_json rows = ordered_json::array();
  rows.push_back({{"id", 1}, {"inner", {{"k", 2}}}});
  CHECK(to_csv(rows) == "id,inner\n1,\"{\"\"k\"\":2}\"\n");
}

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
  CHECK(digest_hex("") == "fnv1a64:cbf29ce484222325");
}

TEST_CASE("manifest lines and digest stability") {
  RunManifest m;
  m.subcommand = "search";
  m.parameters = {{"l", 1}, {"a_min", 2}};
  m.version = "0.1.0";
  m.wall_ms = 1.25;
  m.digest = digest_hex("payload");
  std::string line = manifest_line(m);
  REQUIRE(line.back() == '\n');
  ordered_json parsed = ordered_json::parse(line);
  CHECK(parsed["subcommand"] == "search");
  CHECK(parsed["parameters"]["a_min"] == 2);
  CHECK(parsed["digest"] == m.digest);

  // worker count must not leak into the serialized census
  SearchConfig cfg;
  cfg.l = 1;
  cfg.a_min = 2;
  cfg.a_max = 80;
  cfg.b_max = 800;
  cfg.worker_count = 1;
  std::string once = to_json(search_divisible(cfg)).dump();
  cfg.worker_count = 16;
  std::string again = to_json(search_divisible(cfg)).dump();
  CHECK(once == again);
  CHECK(digest_hex(once) == digest_hex(again));
}
