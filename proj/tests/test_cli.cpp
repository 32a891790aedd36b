#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include "zeroloc/cli/job.hpp"
#include "zeroloc/cli/run.hpp"

using namespace zeroloc;
using namespace zeroloc::cli;

namespace {

Json fig3_job() {
  return Json::parse(R"({
    "schema_version": "1",
    "kind": "structured",
    "payload": {"f0": 60, "b": [2, 2.5, 3, 4], "g0": [5, 5], "j": 0, "a": [1, 5]},
    "analyses": ["roots", "verdict", "locus", "grommer"],
    "options": {"r_min": 0.1, "r_max": 6}
  })");
}

int exit_of(const Json& doc) {
  try {
    return execute(parse_job(doc)).exit_code;
  } catch (const Error& e) {
    return exit_code_for(e.kind());
  }
}

struct Run {
  int status;
  std::string out;
};

Run run_tool(const std::string& args) {
  const std::string cmd = std::string(ZEROLOC_TOOL_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("zeroloc_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(ParseJob, InputErrors) {
  Json bad = fig3_job();
  bad["payload"]["f0"] = 0;
  EXPECT_EQ(exit_of(bad), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"nope","payload":{}})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"structured"})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"kind":"series","payload":{"coeffs":[1,1]}})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"7","kind":"series","payload":{"coeffs":[1,1]}})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"qexp","payload":{"q":1.5}})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"qexp","payload":{"q":0.5,"N":4}})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"series","payload":{"coeffs":[1,2]},"analyses":["bogus"]})")), 2);
  EXPECT_EQ(exit_of(Json::parse(R"({"schema_version":"1","kind":"structured","payload":{"f0":1,"g0":1,"b":[-2]}})")), 2);
}

TEST(ParseJob, Defaults) {
  const auto s = parse_job(Json::parse(R"({"schema_version":"1","kind":"structured","payload":{"f0":1,"g0":-1,"b":[2]}})"));
  EXPECT_TRUE(s.wants("roots") && s.wants("verdict"));
  const auto q = parse_job(Json::parse(R"({"schema_version":"1","kind":"qexp","payload":{"q":-0.5,"N":100}})"));
  EXPECT_TRUE(q.wants("sokal"));
  EXPECT_EQ(q.options.truncation, 100u);
  const auto c = parse_job(Json::parse(R"({"schema_version":"1","kind":"series","payload":{"coeffs":[1,[0,1],2]}})"));
  ASSERT_EQ(c.series_coeffs.size(), 3u);
  EXPECT_EQ(c.series_coeffs[1], Complex(0, 1));
}

TEST(Execute, Fig3) {
  const auto o = execute(parse_job(fig3_job()), true, true);
  EXPECT_EQ(o.exit_code, 0);
  const auto& a = o.report["analyses"];
  EXPECT_EQ(a["roots"]["zeros"].size(), 8u);
  EXPECT_EQ(a["verdict"]["case"], 1);
  EXPECT_TRUE(a["verdict"]["overall"].get<bool>());
  EXPECT_TRUE(a["locus"]["pass"].get<bool>());
  EXPECT_TRUE(a["grommer"]["pass"].get<bool>());
  ASSERT_TRUE(o.csv && o.svg);
  EXPECT_EQ(o.csv->rfind("r,phi,u_residual,arg_unwrapped\n", 0), 0u);
  EXPECT_NE(o.svg->find("class=\"zero\""), std::string::npos);
}

TEST(Execute, NegativeQSuite) {
  const auto o = execute(parse_job(Json::parse(R"({"schema_version":"1","kind":"qexp","payload":{"q":-0.5,"N":100}})")));
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_TRUE(o.report["analyses"]["sokal"]["pass"].get<bool>());
  EXPECT_TRUE(o.report["status"]["passed"].get<bool>());
}

TEST(Execute, SeriesAndQPoly) {
  const auto s = execute(parse_job(Json::parse(R"({"schema_version":"1","kind":"series","payload":{"coeffs":[1,1,1]}})")));
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_EQ(s.report["analyses"]["verdict"]["case"], 3);
  const auto p = execute(parse_job(Json::parse(R"({"schema_version":"1","kind":"qpoly","payload":{"q":0.5,"N":6},"analyses":["roots"]})")));
  EXPECT_EQ(p.exit_code, 0);
  EXPECT_EQ(p.report["analyses"]["roots"]["count_with_multiplicity"], 6);
}

TEST(Execute, ImaginaryUnitQJob) {
  // F(z) = cosh(mu z) + mu sinh(z / mu), mu^2 = i, is the q-exponential at q = i.
  const auto o = execute(parse_job(Json::parse(
                             R"({"schema_version":"1","kind":"qexp","payload":{"q":[0,1],"N":120},"options":{"max_zeros":12}})")),
                         false, true);
  EXPECT_EQ(o.exit_code, 0);
  // The analysis runs on the rotated function; unrotated_zeros are those of F.
  const auto& zs = o.report["analyses"]["roots"]["unrotated_zeros"];
  ASSERT_EQ(zs.size(), 12u);
  const Complex mu = std::polar(1.0, std::numbers::pi / 4);
  for (const auto& z : zs) {
    const Complex w{z["re"].get<double>(), z["im"].get<double>()};
    EXPECT_LT(std::abs(std::cosh(mu * w) + mu * std::sinh(w / mu)), 1e-8 * std::max(1.0, std::exp(std::abs(w))));
  }
  ASSERT_TRUE(o.svg);
}

TEST(Execute, Deterministic) {
  const auto job = parse_job(fig3_job());
  EXPECT_EQ(dump(execute(job).report), dump(execute(job).report));
  const auto ids = parse_job(Json::parse(R"({"schema_version":"1","kind":"qexp","payload":{"q":0.7},"analyses":["identities"]})"));
  EXPECT_EQ(dump(execute(ids).report), dump(execute(ids).report));
}

TEST(Dump, SortedKeysAndFullPrecision) {
  Json j{{"b", 0.1}, {"a", Json::array({1, "x"})}, {"c", number(std::numeric_limits<double>::infinity())}};
  const std::string s = dump(j);
  EXPECT_LT(s.find("\"a\""), s.find("\"b\""));
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos);
  EXPECT_NE(s.find("\"inf\""), std::string::npos);
}

TEST(Tool, AnalyzeFig3) {
  const auto job = temp_file("fig3.json", fig3_job().dump());
  const auto r1 = run_tool("analyze --input " + job.string());
  EXPECT_EQ(r1.status, 0);
  const auto rep = Json::parse(r1.out);
  EXPECT_EQ(rep["analyses"]["roots"]["zeros"].size(), 8u);
  const auto r2 = run_tool("analyze --input " + job.string());
  EXPECT_EQ(r1.out, r2.out);
}

TEST(Tool, WritesFiles) {
  const auto job = temp_file("fig3b.json", fig3_job().dump());
  const auto dir = std::filesystem::temp_directory_path() / "zeroloc_test_out";
  std::filesystem::remove_all(dir);
  const auto r = run_tool("locus --input " + job.string() + " --out " + dir.string() + " -f json -f csv -f svg");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "locus.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "locus.svg"));
}

TEST(Tool, ExitCodes) {
  const auto bad = temp_file("bad.json", R"({"schema_version":"1","kind":"structured","payload":{"f0":0,"g0":1}})");
  const auto r = run_tool("analyze --input " + bad.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(Json::parse(r.out)["status"]["error"]["kind"], "ZeroLeadingCoefficient");
  EXPECT_EQ(run_tool("analyze --input /nonexistent/job.json").status, 2);
  const auto neg = temp_file("neg.json", R"({"schema_version":"1","kind":"qexp","payload":{"q":-0.5,"N":100}})");
  EXPECT_EQ(run_tool("sokal --input " + neg.string()).status, 0);
  EXPECT_EQ(run_tool("identities").status, 0);
}
