#include "manetsim/mobility.hpp"

#include <algorithm>

namespace manet {

RandomWaypointModel::RandomWaypointModel(Position initial, double areaWidth,
                                         double areaHeight, double maxSpeed,
                                         SimTime pause, RngStream stream)
    : m_rng(stream),
      m_areaW(areaWidth),
      m_areaH(areaHeight),
      m_maxSpeed(maxSpeed),
      m_pause(pause),
      m_from(initial),
      m_target(initial) {
  if (m_maxSpeed <= 0.0) {
    m_static = true;
    return;
  }
  startLeg(SimTime());
}

void RandomWaypointModel::startLeg(SimTime at) {
  m_from = positionAt(at);
  m_target.x = m_rng.uniform(0.0, m_areaW);
  m_target.y = m_rng.uniform(0.0, m_areaH);
  // Uniform in (lo, maxSpeed]; lo floors the draw away from the zero-speed
  // degeneracy of random waypoint.
  double lo = std::min(0.1, m_maxSpeed);
  m_speed = m_maxSpeed - m_rng.uniform01() * (m_maxSpeed - lo);
  m_phase = Phase::Moving;
  m_legStart = at;
  m_arrive = at + SimTime::fromSeconds(distance(m_from, m_target) / m_speed);
}

Position RandomWaypointModel::positionAt(SimTime t) const {
  if (m_static || m_phase == Phase::Paused) {
    return m_target;
  }
  double dist = distance(m_from, m_target);
  if (dist <= 0.0 || t >= m_arrive) {
    return m_target;
  }
  double traveled = m_speed * (t - m_legStart).seconds();
  if (traveled >= dist) {
    return m_target;
  }
  double frac = traveled / dist;
  return Position{m_from.x + (m_target.x - m_from.x) * frac,
                  m_from.y + (m_target.y - m_from.y) * frac};
}

SimTime RandomWaypointModel::nextBoundary() const {
  if (m_static) {
    return SimTime::max();
  }
  return m_phase == Phase::Moving ? m_arrive : m_pauseUntil;
}

void RandomWaypointModel::processBoundary() {
  if (m_static) {
    return;
  }
  if (m_phase == Phase::Moving) {
    if (m_pause > SimTime()) {
      m_phase = Phase::Paused;
      m_from = m_target;
      m_pauseUntil = m_arrive + m_pause;
    } else {
      startLeg(m_arrive);
    }
  } else {
    startLeg(m_pauseUntil);
  }
}

void RandomWaypointModel::advanceTo(SimTime t) {
  while (!m_static && nextBoundary() <= t) {
    processBoundary();
  }
}

}  // namespace manet
