#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "legnet/error.hpp"
#include "legnet/report.hpp"

using namespace legnet;
using nlohmann::json;

TEST_CASE("nine significant digits") {
  CHECK(sig9(1.0 / 3) == 0.333333333);
  CHECK(sig9(123456789012.0) == 123456789000.0);
  CHECK(sig9(0.0) == 0.0);
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(1.0 / 3) == "0.333333333");
  CHECK(format_number(std::nan("")) == "");
  CHECK(number(std::nan("")).is_null());
  CHECK(number(std::numeric_limits<double>::infinity()).is_null());
  CHECK(json(number(0.1)).dump() == "0.1");
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("manifest and normalization") {
  RunManifest m;
  m.command = "metrics";
  m.input_digest = "sha256:00";
  m.seed = 42;
  m.config = {{"network", "LN"}};
  m.started = utc_timestamp();
  m.finished = utc_timestamp();
  CHECK(m.started.size() == 20);
  CHECK(m.started.back() == 'Z');
  const auto doc = make_document(m, {{"value", 1}});
  CHECK(doc["manifest"]["command"] == "metrics");
  CHECK(doc["manifest"]["tool_version"] == std::string(kToolVersion));
  CHECK(doc["manifest"]["seed"] == 42);
  CHECK(doc["report"]["value"] == 1);
  const auto n = normalized(doc);
  CHECK_FALSE(n["manifest"].contains("started"));
  CHECK_FALSE(n["manifest"].contains("finished"));
  RunManifest later = m;
  later.started = "2000-01-01T00:00:00Z";
  CHECK(normalized(make_document(later, {{"value", 1}})) == n);
  CHECK(dump(n).back() == '\n');
}

TEST_CASE("csv tables quote and use CRLF") {
  CsvTable t({"a", "b"});
  t.add({"1", "x,y"});
  t.add({"say \"hi\"", ""});
  CHECK(t.str() == "a,b\r\n1,\"x,y\"\r\n\"say \"\"hi\"\"\",\r\n");
}

TEST_CASE("report shapes") {
  DegreeStats s;
  s.n = 3;
  s.mean = 1.0 / 3;
  s.histogram = {{0, 2}, {1, 1}};
  const auto j = to_json(s);
  CHECK(j["mean"] == 0.333333333);
  CHECK(degree_histogram_csv(s).str() == "degree,nodes\r\n0,2\r\n1,1\r\n");

  ResilienceCurve c;
  c.points = {{0, 1, 1}, {0.5, 0.5, 0.25}};
  c.averaged_over = 3;
  const auto r = to_json(c);
  CHECK(r["points"].size() == 2);
  CHECK(r["area_under_curve"] == doctest::Approx(0.3125));

  PowerLawFit fit;
  fit.gamma = 2.5;
  fit.x_min = 2;
  fit.n_tail = 2;
  fit.n = 4;
  const std::vector<std::uint64_t> values = {0, 1, 2, 4, 8};
  const auto table = powerlaw_ccdf_csv(values, fit).str();
  CHECK(table.rfind("k,", 0) == 0);
  CHECK(table.find("\r\n1,1,") != std::string::npos);
}

TEST_CASE("write_file creates directories and replaces atomically") {
  const auto dir = std::filesystem::temp_directory_path() / "legnet_report_test";
  std::filesystem::remove_all(dir);
  const auto path = dir / "nested" / "out.json";
  write_file(path, "first");
  write_file(path, "second");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "second");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}
