#pragma once

#include <cmath>

#include "manetsim/rng.hpp"
#include "manetsim/sim-time.hpp"

namespace manet {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(Position a, Position b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Random-waypoint movement for one node: travel to a uniform target at a
/// uniform speed, pause, repeat. The node starts moving immediately (no
/// initial pause). Each node owns its stream, so draw order never depends on
/// how other nodes are queried.
///
/// Draw order per leg: target.x, target.y, speed.
class RandomWaypointModel {
 public:
  RandomWaypointModel(Position initial, double areaWidth, double areaHeight,
                      double maxSpeed, SimTime pause, RngStream stream);

  /// Position at time t; valid for t at or after the start of the current
  /// phase. Beyond the current phase boundary the position saturates at the
  /// target; callers advance phases via boundaries.
  Position positionAt(SimTime t) const;

  /// Time of the next phase transition (arrival or pause end); SimTime::max()
  /// for a static node.
  SimTime nextBoundary() const;

  /// Applies exactly one phase transition (consumes random draws when a new
  /// leg starts).
  void processBoundary();

  /// Test helper: applies transitions until nextBoundary() > t.
  void advanceTo(SimTime t);

  bool isStatic() const { return m_static; }
  double currentSpeed() const { return m_speed; }

 private:
  void startLeg(SimTime at);

  enum class Phase { Moving, Paused };

  RngStream m_rng;
  double m_areaW, m_areaH, m_maxSpeed;
  SimTime m_pause;
  bool m_static = false;

  Phase m_phase = Phase::Moving;
  Position m_from, m_target;
  double m_speed = 0.0;
  SimTime m_legStart, m_arrive, m_pauseUntil;
};

}  // namespace manet
