#include "s4cover/report.hpp"

#include <json.hpp>

namespace s4cover {

std::string Report::to_json_line() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["samples"] = samples;
  j["seed"] = seed;
  j["max_error"] = max_error;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json rec;
    rec["input"] = f.input;
    rec["observed"] = f.observed;
    rec["expected"] = f.expected;
    fs.push_back(rec);
  }
  j["failures"] = fs;
  return j.dump();
}

Report Report::from_json_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.samples = j.at("samples").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.max_error = j.at("max_error").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  for (const auto& rec : j.at("failures"))
    r.failures.push_back({rec.at("input").get<std::string>(),
                          rec.at("observed").get<std::string>(),
                          rec.at("expected").get<std::string>()});
  return r;
}

}  // namespace s4cover
