#include "manetsim/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace manet {

const char* toString(Protocol p) {
  return p == Protocol::Aodv ? "aodv" : "aomsr";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> splitList(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream iss(value);
  std::string item;
  while (std::getline(iss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

double parseDouble(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) {
      throw std::invalid_argument(v);
    }
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, key + ": not a number: '" + v + "'");
  }
}

long long parseInt(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long n = std::stoll(v, &used);
    if (used != v.size()) {
      throw std::invalid_argument(v);
    }
    return n;
  } catch (const std::exception&) {
    throw ConfigError(key, key + ": not an integer: '" + v + "'");
  }
}

// Keys that take part in sweep expansion, in canonical expansion order.
const std::vector<std::string> kSweepOrder = {
    "protocol",   "node_count", "max_speed",     "pause_time",
    "sim_time",   "k_max",      "delta",         "cbr_interval",
    "radio_range", "attacker_count", "extra_flows",
};

void applyKey(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "area_width") {
    cfg.areaWidth = parseDouble(key, value);
  } else if (key == "area_height") {
    cfg.areaHeight = parseDouble(key, value);
  } else if (key == "node_count") {
    cfg.nodeCount = static_cast<int>(parseInt(key, value));
  } else if (key == "radio_range") {
    cfg.radioRange = parseDouble(key, value);
  } else if (key == "bandwidth") {
    cfg.bandwidthBps = parseInt(key, value);
  } else if (key == "payload_bytes") {
    cfg.payloadBytes = static_cast<int>(parseInt(key, value));
  } else if (key == "sim_time") {
    cfg.simTimeS = parseDouble(key, value);
  } else if (key == "max_speed") {
    cfg.maxSpeed = parseDouble(key, value);
  } else if (key == "pause_time") {
    cfg.pauseTimeS = parseDouble(key, value);
  } else if (key == "cbr_interval") {
    cfg.cbrIntervalS = parseDouble(key, value);
  } else if (key == "protocol") {
    if (value == "aodv") {
      cfg.protocol = Protocol::Aodv;
    } else if (value == "aomsr") {
      cfg.protocol = Protocol::Aomsr;
    } else {
      throw ConfigError(key, "protocol: expected aodv or aomsr, got '" + value + "'");
    }
  } else if (key == "k_max") {
    cfg.kMax = static_cast<int>(parseInt(key, value));
  } else if (key == "delta") {
    cfg.deltaS = parseDouble(key, value);
  } else if (key == "ack_timeout") {
    cfg.ackTimeoutS = value == "auto" ? 0.0 : parseDouble(key, value);
  } else if (key == "attacker_ids") {
    cfg.attackerIds.clear();
    for (const auto& id : splitList(value)) {
      cfg.attackerIds.push_back(static_cast<NodeId>(parseInt(key, id)));
    }
  } else if (key == "attacker_count") {
    cfg.attackerCount = static_cast<int>(parseInt(key, value));
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parseInt(key, value));
  } else if (key == "repetitions") {
    cfg.repetitions = static_cast<int>(parseInt(key, value));
  } else if (key == "extra_flows") {
    cfg.extraFlows = static_cast<int>(parseInt(key, value));
  } else if (key == "permutation") {
    if (value == "shift") {
      cfg.permPolicy = PermPolicy::BackwardShift;
    } else if (value == "random") {
      cfg.permPolicy = PermPolicy::SeededRandom;
    } else {
      throw ConfigError(key, "permutation: expected shift or random");
    }
  } else if (key == "allow_overlap") {
    cfg.allowOverlap = parseInt(key, value) != 0;
  } else if (key == "retry_limit") {
    cfg.retryLimit = static_cast<int>(parseInt(key, value));
  } else if (key == "forged_hop_count") {
    cfg.attackerProfile.forgedHopCount = static_cast<std::uint32_t>(parseInt(key, value));
  } else if (key == "seq_inflation") {
    cfg.attackerProfile.seqInflation = static_cast<std::uint32_t>(parseInt(key, value));
  } else {
    throw ConfigError(key, "unknown configuration key '" + key + "'");
  }
}

}  // namespace

std::vector<std::string> ScenarioConfig::validate() const {
  std::vector<std::string> violations;
  auto positive = [&](double v, const char* field) {
    if (v <= 0.0) {
      violations.push_back(std::string(field) + " must be > 0");
    }
  };
  positive(areaWidth, "area_width");
  positive(areaHeight, "area_height");
  positive(radioRange, "radio_range");
  positive(static_cast<double>(bandwidthBps), "bandwidth");
  positive(static_cast<double>(payloadBytes), "payload_bytes");
  positive(simTimeS, "sim_time");
  positive(cbrIntervalS, "cbr_interval");
  if (nodeCount < 3) {
    violations.push_back("node_count must be >= 3");
  }
  if (maxSpeed < 0.0) {
    violations.push_back("max_speed must be >= 0");
  }
  if (pauseTimeS < 0.0) {
    violations.push_back("pause_time must be >= 0");
  }
  if (kMax < 2) {
    violations.push_back("k_max must be >= 2");
  }
  if (deltaS < 0.0) {
    violations.push_back("delta must be >= 0");
  }
  if (ackTimeoutS < 0.0) {
    violations.push_back("ack_timeout must be positive or auto");
  }
  if (repetitions < 1) {
    violations.push_back("repetitions must be >= 1");
  }
  if (retryLimit < 0) {
    violations.push_back("retry_limit must be >= 0");
  }
  int attackers = attackerIds.empty() ? attackerCount
                                      : static_cast<int>(attackerIds.size());
  if (attackers < 0) {
    violations.push_back("attacker_count must be >= 0");
  }
  if (nodeCount >= 3 && attackers >= nodeCount) {
    violations.push_back("attacker count must be < node_count");
  }
  for (NodeId id : attackerIds) {
    if (id >= static_cast<NodeId>(nodeCount)) {
      violations.push_back("attacker_ids: node id out of range");
      break;
    }
  }
  for (NodeId id : attackerIds) {
    if (id == 0 || id + 1 == static_cast<NodeId>(nodeCount)) {
      violations.push_back(
          "attacker_ids: the primary flow endpoints (node 0 and node "
          "node_count-1) cannot be attackers");
      break;
    }
  }
  if (attackerProfile.forgedHopCount < 1) {
    violations.push_back("forged_hop_count must be >= 1");
  }
  if (attackerProfile.seqInflation < 1) {
    violations.push_back("seq_inflation must be >= 1");
  }
  if (extraFlows >= 0 && nodeCount >= 3 &&
      extraFlows > nodeCount * (nodeCount - 1)) {
    violations.push_back("extra_flows: more flows than node pairs");
  }
  return violations;
}

std::vector<ScenarioConfig> parseScenarioText(const std::string& text) {
  std::map<std::string, std::vector<std::string>> values;
  std::istringstream stream(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(stream, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineNo) +
                                ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(key, "line " + std::to_string(lineNo) +
                                 ": empty key or value");
    }
    values[key] = key == "attacker_ids" ? std::vector<std::string>{value}
                                        : splitList(value);
    if (values[key].empty()) {
      values[key] = {value};
    }
  }

  // Single-valued keys form the base; swept keys expand as an odometer in
  // canonical order so the matrix ordering never depends on file layout.
  ScenarioConfig base;
  std::vector<std::pair<std::string, std::vector<std::string>>> sweeps;
  for (const auto& key : kSweepOrder) {
    auto it = values.find(key);
    if (it != values.end() && it->second.size() > 1) {
      sweeps.emplace_back(key, it->second);
    }
  }
  for (const auto& [key, list] : values) {
    if (list.size() > 1 &&
        std::find(kSweepOrder.begin(), kSweepOrder.end(), key) ==
            kSweepOrder.end()) {
      throw ConfigError(key, key + ": this key cannot carry a sweep list");
    }
    if (list.size() == 1) {
      applyKey(base, key, list.front());
    }
  }

  std::vector<ScenarioConfig> variants;
  std::size_t total = 1;
  for (const auto& [key, list] : sweeps) {
    total *= list.size();
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    ScenarioConfig cfg = base;
    std::size_t rem = idx;
    for (auto it = sweeps.rbegin(); it != sweeps.rend(); ++it) {
      const auto& list = it->second;
      applyKey(cfg, it->first, list[rem % list.size()]);
      rem /= list.size();
    }
    cfg.scenarioId = "v" + std::to_string(idx);
    variants.push_back(std::move(cfg));
  }
  return variants;
}

std::vector<ScenarioConfig> loadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("", "cannot open scenario file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseScenarioText(buffer.str());
}

}  // namespace manet
