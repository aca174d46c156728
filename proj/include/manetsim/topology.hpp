#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "manetsim/mobility.hpp"
#include "manetsim/radio.hpp"
#include "manetsim/rng.hpp"

namespace manet {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = 0xffffffffu;

/// Node placement plus the unit-disk link model. Mobile topologies get one
/// random-waypoint model per node; static topologies are built from explicit
/// positions (used heavily by tests with engineered layouts).
class Topology {
 public:
  /// Static topology from explicit positions.
  Topology(std::vector<Position> positions, RadioParams radio);

  /// Random placement over the area; nodes move per random waypoint when
  /// maxSpeed > 0. Placement draws come from stream "placement", movement
  /// from per-node streams "mobility/<id>".
  Topology(double areaWidth, double areaHeight, std::size_t nodeCount,
           double maxSpeed, SimTime pause, RadioParams radio,
           const RngProvider& rng);

  std::size_t nodeCount() const { return m_positions.size(); }
  const RadioParams& radio() const { return m_radio; }
  bool mobile() const { return !m_models.empty(); }

  Position positionOf(NodeId node, SimTime t) const;

  /// Closed ball: distance exactly equal to the range still counts as a link.
  bool inRange(NodeId a, NodeId b, SimTime t) const;

  /// All nodes (except the node itself) within radio range, ascending id.
  std::vector<NodeId> neighborsOf(NodeId node, SimTime t) const;

  SimTime nextMobilityBoundary(NodeId node) const;
  void processMobilityBoundary(NodeId node);

 private:
  RadioParams m_radio;
  std::vector<Position> m_positions;             // initial / static positions
  std::vector<RandomWaypointModel> m_models;     // empty when static
};

}  // namespace manet
