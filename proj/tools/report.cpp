#include "report.hpp"

#include <iomanip>
#include <ostream>

namespace hnnkit::cli {

std::string to_string(Provenance p) { return p == Provenance::computed ? "computed" : "imported-fact"; }

bool Report::ok() const {
  for (const auto& c : claims_)
    if (!c.pass) return false;
  return true;
}

Json Report::to_json(bool with_timings) const {
  Json j;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["verdict"] = ok() ? "PASS" : "FAIL";
  Json claims = Json::array();
  for (const auto& c : claims_)
    claims.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"provenance", to_string(c.provenance)},
                      {"verdict", c.pass ? "PASS" : "FAIL"}});
  j["claims"] = claims;
  Json values = Json::array();
  for (const auto& v : values_)
    values.push_back({{"name", v.name}, {"value", v.value}, {"provenance", to_string(v.provenance)}});
  j["values"] = values;
  j["imported_facts"] = imported_;
  j["notes"] = notes_;
  if (with_timings) {
    Json t = Json::object();
    for (const auto& [stage, ms] : runtimes_) t[stage] = ms;
    j["runtimes_ms"] = t;
  }
  return j;
}

namespace {

std::string show(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

void Report::print(std::ostream& os) const {
  os << "== " << command_ << " ==\n";
  for (const auto& v : values_)
    os << "  " << v.name << ": " << show(v.value) << (v.provenance == Provenance::imported ? "  [imported-fact]" : "")
       << '\n';
  for (const auto& c : claims_) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.statement;
    if (!c.pass) os << "  (expected " << show(c.expected) << ", observed " << show(c.observed) << ')';
    os << "  [" << to_string(c.provenance) << "]\n";
  }
  for (const auto& f : imported_) os << "  imported: " << f << '\n';
  for (const auto& n : notes_) os << "  note: " << n << '\n';
  for (const auto& [stage, ms] : runtimes_)
    os << "  time " << stage << ": " << std::fixed << std::setprecision(1) << ms << " ms\n";
  os << "  verdict: " << (ok() ? "PASS" : "FAIL") << '\n';
}

}  // namespace hnnkit::cli
