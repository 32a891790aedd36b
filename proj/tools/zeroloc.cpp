// zeroloc: zero-location analyses for F(z) = f(z^2) + z g(z^2) and the
// q-exponential, driven by a JSON job file.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeroloc/cli/job.hpp"
#include "zeroloc/cli/run.hpp"

namespace fs = std::filesystem;
using namespace zeroloc;
using namespace zeroloc::cli;

namespace {

struct Flags {
  std::string input;
  std::string out;
  std::vector<std::string> formats;
  std::optional<std::size_t> truncation;
  std::optional<std::size_t> max_zeros;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, Flags& f, bool input_required) {
  auto* in = sub->add_option("--input,-i", f.input, "job file (JSON)");
  if (input_required) in->required();
  sub->add_option("--out,-o", f.out, "output directory (default: stdout for JSON only)");
  sub->add_option("--format,-f", f.formats, "json, csv or svg; repeatable")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  sub->add_option("--truncation,-N", f.truncation, "series truncation order");
  sub->add_option("--max-zeros,-m", f.max_zeros, "number of zeros to report for entire functions");
  sub->add_option("--tol", f.tol, "verdict tolerance");
  sub->add_option("--seed", f.seed, "seed for randomized suites");
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::SchemaError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    raise(ErrorKind::SchemaError, std::string("invalid JSON: ") + e.what());
  }
}

bool wants(const Flags& f, const char* fmt) {
  if (f.formats.empty()) return std::string(fmt) == "json";
  return std::find(f.formats.begin(), f.formats.end(), fmt) != f.formats.end();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) raise(ErrorKind::SchemaError, "cannot write " + p.string());
  out << text;
}

int run(const std::string& command, const Flags& f) {
  Json doc;
  if (!f.input.empty()) {
    doc = read_json(f.input);
  } else {
    doc = {{"schema_version", kSchemaVersion}, {"kind", "qexp"}, {"payload", {{"q", 0.7}}}};
  }
  if (doc.is_object()) {
    Json& opts = doc["options"];
    if (opts.is_null()) opts = Json::object();
    if (f.truncation) {
      opts["truncation"] = *f.truncation;
      if (doc.contains("payload") && doc["payload"].is_object() && doc.value("kind", "") == "qexp")
        doc["payload"]["N"] = *f.truncation;
    }
    if (f.max_zeros) opts["max_zeros"] = *f.max_zeros;
    if (f.tol) opts["tol"] = *f.tol;
    if (f.seed) opts["seed"] = *f.seed;
    if (command != "analyze") doc["analyses"] = Json::array({command});
  }
  JobSpec job = parse_job(doc);
  if (command == "locus") job.analyses.insert("roots");

  const bool csv = wants(f, "csv"), svg = wants(f, "svg"), json = wants(f, "json");
  if ((csv || svg) && f.out.empty()) raise(ErrorKind::SchemaError, "--out is required for csv and svg output");
  Outcome o = execute(job, csv, svg);
  const std::string text = dump(o.report);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    fs::create_directories(f.out);
    if (json) write_file(fs::path(f.out) / "report.json", text);
    if (csv && o.csv) write_file(fs::path(f.out) / "locus.csv", *o.csv);
    if (svg && o.svg) write_file(fs::path(f.out) / "locus.svg", *o.svg);
    if (csv && !o.csv) std::cerr << "zeroloc: no CSV produced (locus analysis did not run)\n";
  }
  if (o.report["status"].contains("error"))
    std::cerr << "zeroloc: " << o.report["status"]["error"]["message"].get<std::string>() << '\n';
  return o.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-location analyses for F(z) = f(z^2) + z g(z^2) and the q-exponential"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "run the analyses listed in the job"},
      {"locus", "trace the level curve and locate the c-points"},
      {"grommer", "negativity of zeros via leading minors"},
      {"sokal", "zero checks for the q-exponential"},
      {"identities", "Gauss sums and representation identities"},
  };
  for (const auto& [name, help] : commands)
    add_common(app.add_subcommand(name, help), flags, std::string(name) != "identities");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const Error& e) {
    Json report{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"status", {{"exit_code", exit_code_for(e.kind())}, {"passed", false}, {"error", error_json(e, "input")}}}};
    std::cout << dump(report);
    std::cerr << "zeroloc: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}
