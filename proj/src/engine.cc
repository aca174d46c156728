#include "manetsim/engine.hpp"

#include <stdexcept>
#include <string>

namespace manet {

const char* toString(EventKind kind) {
  switch (kind) {
    case EventKind::PacketDelivery: return "rx";
    case EventKind::TimerExpiry: return "timer";
    case EventKind::MobilityWaypoint: return "waypoint";
    case EventKind::TrafficTick: return "traffic";
  }
  return "?";
}

EventHandle Engine::schedule(SimTime at, EventKind kind,
                             std::function<void()> action, int node,
                             std::uint64_t packetId) {
  if (at < m_now) {
    throw std::logic_error("event scheduled in the past (at=" +
                           std::to_string(at.micros()) +
                           "us, now=" + std::to_string(m_now.micros()) + "us)");
  }
  std::uint64_t seq = m_nextSeq++;
  SimEvent ev;
  ev.fireAt = at;
  ev.seq = seq;
  ev.kind = kind;
  ev.node = node;
  ev.packetId = packetId;
  ev.action = std::move(action);
  m_queue.emplace(Key{at, seq}, std::move(ev));
  return EventHandle(at, seq);
}

bool Engine::cancel(EventHandle& handle) {
  if (!handle.valid()) {
    return false;
  }
  handle.invalidate();
  return m_queue.erase(Key{handle.m_at, handle.m_seq}) > 0;
}

std::size_t Engine::runUntil(SimTime end) {
  std::size_t processed = 0;
  while (!m_queue.empty()) {
    auto it = m_queue.begin();
    if (it->first.first > end) {
      break;
    }
    SimEvent ev = std::move(it->second);
    m_queue.erase(it);
    m_now = ev.fireAt;
    if (m_observer) {
      m_observer(ev);
    }
    if (ev.action) {
      ev.action();
    }
    ++processed;
    ++m_processed;
  }
  m_now = end;
  return processed;
}

}  // namespace manet
