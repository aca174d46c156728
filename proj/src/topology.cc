#include "manetsim/topology.hpp"

#include <string>

namespace manet {

Topology::Topology(std::vector<Position> positions, RadioParams radio)
    : m_radio(radio), m_positions(std::move(positions)) {}

Topology::Topology(double areaWidth, double areaHeight, std::size_t nodeCount,
                   double maxSpeed, SimTime pause, RadioParams radio,
                   const RngProvider& rng)
    : m_radio(radio) {
  RngStream placement = rng.stream("placement");
  m_positions.reserve(nodeCount);
  for (std::size_t i = 0; i < nodeCount; ++i) {
    m_positions.push_back(Position{placement.uniform(0.0, areaWidth),
                                   placement.uniform(0.0, areaHeight)});
  }
  if (maxSpeed > 0.0) {
    m_models.reserve(nodeCount);
    for (std::size_t i = 0; i < nodeCount; ++i) {
      m_models.emplace_back(m_positions[i], areaWidth, areaHeight, maxSpeed,
                            pause, rng.stream("mobility/" + std::to_string(i)));
    }
  }
}

Position Topology::positionOf(NodeId node, SimTime t) const {
  if (!m_models.empty()) {
    return m_models[node].positionAt(t);
  }
  return m_positions[node];
}

bool Topology::inRange(NodeId a, NodeId b, SimTime t) const {
  Position pa = positionOf(a, t);
  Position pb = positionOf(b, t);
  double dx = pa.x - pb.x;
  double dy = pa.y - pb.y;
  return dx * dx + dy * dy <= m_radio.range * m_radio.range;
}

std::vector<NodeId> Topology::neighborsOf(NodeId node, SimTime t) const {
  std::vector<NodeId> out;
  for (NodeId other = 0; other < m_positions.size(); ++other) {
    if (other != node && inRange(node, other, t)) {
      out.push_back(other);
    }
  }
  return out;
}

SimTime Topology::nextMobilityBoundary(NodeId node) const {
  if (m_models.empty()) {
    return SimTime::max();
  }
  return m_models[node].nextBoundary();
}

void Topology::processMobilityBoundary(NodeId node) {
  if (!m_models.empty()) {
    m_models[node].processBoundary();
  }
}

}  // namespace manet
