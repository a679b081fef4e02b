#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace hnnkit::cli {

using Json = nlohmann::ordered_json;

enum class Provenance { computed, imported };

struct Claim {
  std::string id;
  std::string statement;
  Json expected;
  Json observed;
  Provenance provenance = Provenance::computed;
  bool pass = false;
};

struct Value {
  std::string name;
  Json value;
  Provenance provenance = Provenance::computed;
};

/// Output of one subcommand. Claims are checked statements; values are
/// reported without a verdict.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, Json value) { inputs_[key] = std::move(value); }
  void value(std::string name, Json v, Provenance p = Provenance::computed) {
    values_.push_back({std::move(name), std::move(v), p});
  }
  bool claim(std::string id, std::string statement, Json expected, Json observed, bool pass,
             Provenance p = Provenance::computed) {
    claims_.push_back({std::move(id), std::move(statement), std::move(expected), std::move(observed), p, pass});
    return pass;
  }
  /// Convenience: observed must equal expected.
  bool expect(std::string id, std::string statement, const Json& expected, const Json& observed,
              Provenance p = Provenance::computed) {
    return claim(std::move(id), std::move(statement), expected, observed, expected == observed, p);
  }
  void imported(std::string fact) { imported_.push_back(std::move(fact)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void timing(const std::string& stage, double ms) { runtimes_.push_back({stage, ms}); }

  const std::string& command() const { return command_; }
  bool ok() const;
  Json to_json(bool with_timings) const;
  void print(std::ostream& os) const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  std::vector<Value> values_;
  std::vector<Claim> claims_;
  std::vector<std::string> imported_, notes_;
  std::vector<std::pair<std::string, double>> runtimes_;
};

/// Times a stage and records it on destruction.
class Stopwatch {
 public:
  Stopwatch(Report& r, std::string stage) : report_(r), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    report_.timing(stage_, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count());
  }
  Stopwatch(const Stopwatch&) = delete;
  Stopwatch& operator=(const Stopwatch&) = delete;

 private:
  Report& report_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

std::string to_string(Provenance p);

}  // namespace hnnkit::cli
