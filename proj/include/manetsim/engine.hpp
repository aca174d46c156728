#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <utility>

#include "manetsim/rng.hpp"
#include "manetsim/sim-time.hpp"

namespace manet {

enum class EventKind : std::uint8_t {
  PacketDelivery,
  TimerExpiry,
  MobilityWaypoint,
  TrafficTick,
};

const char* toString(EventKind kind);

struct SimEvent {
  SimTime fireAt;
  std::uint64_t seq = 0;  // insertion counter, stable FIFO tie-break
  EventKind kind = EventKind::TimerExpiry;
  int node = -1;
  std::uint64_t packetId = 0;
  std::function<void()> action;
};

/// Opaque handle for a scheduled event; lets protocol timers be cancelled.
class EventHandle {
 public:
  EventHandle() = default;
  bool valid() const { return m_valid; }
  void invalidate() { m_valid = false; }

 private:
  friend class Engine;
  EventHandle(SimTime at, std::uint64_t seq) : m_at(at), m_seq(seq), m_valid(true) {}
  SimTime m_at;
  std::uint64_t m_seq = 0;
  bool m_valid = false;
};

/// Single-threaded discrete-event scheduler with a seeded random source.
/// Events fire in (fire_at, seq) order; the clock never runs backwards.
class Engine {
 public:
  explicit Engine(std::uint64_t masterSeed) : m_rng(masterSeed) {}

  SimTime now() const { return m_now; }

  /// Enqueues an event. Scheduling before the current clock is a protocol
  /// logic bug and throws.
  EventHandle schedule(SimTime at, EventKind kind, std::function<void()> action,
                       int node = -1, std::uint64_t packetId = 0);

  /// Removes a pending event. Returns false if it already fired or was
  /// cancelled before.
  bool cancel(EventHandle& handle);

  /// Processes every event with fire_at <= end, then sets the clock to end.
  /// Returns the number of events processed by this call.
  std::size_t runUntil(SimTime end);

  RngStream stream(std::string_view label) const { return m_rng.stream(label); }
  const RngProvider& rng() const { return m_rng; }

  /// Observer invoked for each event as it is dequeued, before its action
  /// runs. Used by the event-log writer and by oracle tests.
  void setObserver(std::function<void(const SimEvent&)> obs) { m_observer = std::move(obs); }

  std::size_t processedCount() const { return m_processed; }
  std::size_t pendingCount() const { return m_queue.size(); }

 private:
  using Key = std::pair<SimTime, std::uint64_t>;

  SimTime m_now;
  std::uint64_t m_nextSeq = 0;
  std::size_t m_processed = 0;
  std::map<Key, SimEvent> m_queue;
  RngProvider m_rng;
  std::function<void(const SimEvent&)> m_observer;
};

}  // namespace manet
