#pragma once

// JSON form of a WorkloadSpec:
//
//   {
//     "processors": 3,
//     "phases": [
//       {"type": "sequential", "duration": 1.5},
//       {"type": "parallel", "dispatch": 0.5, "collect": 1.0, "chunks": [2.5, 2.0, 3.0]},
//       {"type": "sequential", "duration": 1.0}
//     ]
//   }
//
// "dispatch" and "collect" default to 0 when omitted.

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "amdahl/error.hpp"
#include "amdahl/workload.hpp"

namespace amdahl {

inline WorkloadSpec workload_from_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& why) { throw ModelError(ErrorKind::InvalidWorkload, why); };
  if (!doc.is_object()) fail("workload document must be an object");
  if (!doc.contains("processors") || !doc["processors"].is_number_integer()) {
    fail("field 'processors' must be an integer");
  }
  if (!doc.contains("phases") || !doc["phases"].is_array()) fail("field 'phases' must be an array");

  auto number = [&](const nlohmann::json& obj, const char* key, double fallback, bool required) {
    if (!obj.contains(key)) {
      if (required) fail(std::string("missing field '") + key + "'");
      return fallback;
    }
    if (!obj[key].is_number()) fail(std::string("field '") + key + "' must be a number");
    return obj[key].get<double>();
  };

  WorkloadSpec w;
  w.processors = doc["processors"].get<Cores>();
  for (const auto& ph : doc["phases"]) {
    if (!ph.is_object() || !ph.contains("type") || !ph["type"].is_string()) {
      fail("each phase needs a string 'type'");
    }
    const auto type = ph["type"].get<std::string>();
    if (type == "sequential") {
      w.phases.emplace_back(SequentialPhase{number(ph, "duration", 0.0, true)});
    } else if (type == "parallel") {
      ParallelPhase p;
      p.dispatch_overhead = number(ph, "dispatch", 0.0, false);
      p.collect_overhead = number(ph, "collect", 0.0, false);
      if (!ph.contains("chunks") || !ph["chunks"].is_array()) fail("parallel phase needs 'chunks' array");
      for (const auto& c : ph["chunks"]) {
        if (!c.is_number()) fail("chunk durations must be numbers");
        p.chunks.push_back(c.get<double>());
      }
      w.phases.emplace_back(std::move(p));
    } else {
      fail("unknown phase type '" + type + "'");
    }
  }
  validate(w);
  return w;
}

inline WorkloadSpec read_workload(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(ErrorKind::InvalidWorkload, std::string("workload is not valid JSON: ") + e.what());
  }
  return workload_from_json(doc);
}

inline nlohmann::json to_json(const WorkloadSpec& w) {
  nlohmann::json phases = nlohmann::json::array();
  for (const auto& ph : w.phases) {
    if (const auto* s = std::get_if<SequentialPhase>(&ph)) {
      phases.push_back({{"type", "sequential"}, {"duration", s->duration}});
    } else {
      const auto& p = std::get<ParallelPhase>(ph);
      phases.push_back({{"type", "parallel"},
                        {"dispatch", p.dispatch_overhead},
                        {"collect", p.collect_overhead},
                        {"chunks", p.chunks}});
    }
  }
  return {{"processors", w.processors}, {"phases", phases}};
}

}  // namespace amdahl
