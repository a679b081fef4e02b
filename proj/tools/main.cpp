#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "hnnkit/error.hpp"
#include "pipelines.hpp"

using namespace hnnkit::cli;

namespace {

int emit(const std::vector<Report>& reports, const std::string& json_path, bool timings) {
  bool ok = true;
  for (const auto& r : reports) {
    r.print(std::cout);
    ok = ok && r.ok();
  }
  if (!json_path.empty()) {
    Json j;
    if (reports.size() == 1) {
      j = reports[0].to_json(timings);
    } else {
      j["command"] = "all";
      j["verdict"] = ok ? "PASS" : "FAIL";
      j["reports"] = Json::array();
      for (const auto& r : reports) j["reports"].push_back(r.to_json(timings));
    }
    if (json_path == "-") {
      std::cout << j.dump(2) << '\n';
    } else {
      std::ofstream out(json_path);
      if (!out) throw hnnkit::Error("cannot write " + json_path);
      out << j.dump(2) << '\n';
    }
  }
  std::cout << (ok ? "all claims passed" : "some claims failed") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hnnkit: verify a triangulated 2-knot exterior and the HNN-extension knot groups around it"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string json_path;
  bool timings = false;
  app.add_option("--json", json_path, "Write a JSON report to PATH ('-' for stdout)");
  app.add_option("--budget", opt.budget, "Cell limit for group homology computations")->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs, "Worker threads for the census")->check(CLI::Range(1, 256));
  app.add_flag("--timings", timings, "Include stage runtimes in the JSON report");

  using Pipeline = std::function<Report(const Options&)>;
  std::vector<std::pair<CLI::App*, std::vector<Pipeline>>> commands;
  auto add = [&](const char* name, const char* help, std::vector<Pipeline> steps, bool takes_input) {
    auto* sub = app.add_subcommand(name, help);
    if (takes_input) sub->add_option("--input", opt.input, "Triangulation file, or builtin / unknot");
    commands.emplace_back(sub, std::move(steps));
  };
  add("verify-tri", "Check the triangulation: faces, link, symmetry, fixed points", {verify_triangulation}, true);
  add("pi1", "Fundamental group and its identification with the HNN model", {pi1}, true);
  add("analyze", "Knot-group certificate, satellite obstruction, Mayer-Vietoris", {analyze}, false);
  add("census", "Enumerate HNN knot groups over bases of order at most 16", {census}, false);
  add("out", "Outer automorphisms generated by f, g, h", {out}, false);
  add("all", "Run every pipeline on the bundled data", {verify_triangulation, pi1, analyze, census, out}, false);

  CLI11_PARSE(app, argc, argv);
  try {
    for (auto& [sub, steps] : commands) {
      if (!sub->parsed()) continue;
      std::vector<Report> reports;
      for (const auto& step : steps) reports.push_back(step(opt));
      return emit(reports, json_path, timings);
    }
  } catch (const hnnkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
