#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "manetsim/aomsr.hpp"
#include "manetsim/blackhole.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/topology.hpp"

namespace manet {

enum class Protocol : std::uint8_t { Aodv, Aomsr };
const char* toString(Protocol p);

/// A complete, seedable experiment description. Parsed from a flat
/// key = value file; any numeric key (and protocol) may carry a comma list,
/// and the Cartesian product of the lists defines the run matrix.
struct ScenarioConfig {
  std::string scenarioId = "v0";

  double areaWidth = 1000.0;
  double areaHeight = 1000.0;
  int nodeCount = 20;
  double radioRange = 250.0;
  std::int64_t bandwidthBps = 2'000'000;
  int payloadBytes = 512;
  double simTimeS = 300.0;
  double maxSpeed = 0.0;
  double pauseTimeS = 30.0;
  double cbrIntervalS = 0.25;
  Protocol protocol = Protocol::Aomsr;
  int kMax = 3;
  double deltaS = 0.05;
  double ackTimeoutS = 0.0;  // 0 = auto (derived from delay budget)
  std::vector<NodeId> attackerIds;  // explicit placement
  int attackerCount = 0;            // drawn at random when ids are empty
  std::uint64_t seed = 1;
  int repetitions = 1;
  int extraFlows = -1;  // -1 = auto: nodeCount / 10 background flows
  PermPolicy permPolicy = PermPolicy::BackwardShift;
  bool allowOverlap = false;
  int retryLimit = 3;
  AttackerProfile attackerProfile;

  // Test hooks, not part of the file format.
  std::optional<std::vector<Position>> fixedPositions;
  std::optional<std::vector<std::pair<NodeId, NodeId>>> explicitFlows;

  int backgroundFlows() const {
    return extraFlows >= 0 ? extraFlows : nodeCount / 10;
  }

  /// Empty when the config is well-formed; otherwise one line per violation,
  /// each naming the offending field.
  std::vector<std::string> validate() const;
};

struct ConfigError : std::runtime_error {
  ConfigError(std::string fieldName, const std::string& message)
      : std::runtime_error(message), field(std::move(fieldName)) {}
  std::string field;
};

/// Parses scenario text (one key = value per line, '#' comments) and expands
/// swept keys into the full variant list, in canonical key order.
std::vector<ScenarioConfig> parseScenarioText(const std::string& text);

std::vector<ScenarioConfig> loadScenarioFile(const std::string& path);

}  // namespace manet
