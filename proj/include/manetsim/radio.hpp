#pragma once

#include <cstdint>

#include "manetsim/sim-time.hpp"

namespace manet {

/// Wire size of the path-number header appended to every data packet.
inline constexpr int kPbackHeaderBytes = 8;
/// Flat size used for routing control packets (RREQ/RREP/RERR/PBA/alarm/...).
inline constexpr int kControlBytes = 32;

/// Unit-disk radio. Per-hop latency is deterministic from packet size and
/// bandwidth; there is no contention or fading model, which keeps the
/// detection logic exactly reproducible.
struct RadioParams {
  double range = 250.0;                      // meters, closed ball
  std::int64_t bandwidthBps = 2'000'000;     // bits per second
  int payloadBytes = 512;                    // application data payload
  SimTime propagation = SimTime::fromMicros(1);

  SimTime hopLatency(int packetBytes) const {
    std::int64_t bits = static_cast<std::int64_t>(packetBytes) * 8;
    std::int64_t us = bits * 1'000'000 / bandwidthBps;
    return SimTime::fromMicros(us) + propagation;
  }

  /// Latency of one full-size data packet hop (payload plus appended header).
  SimTime dataHopLatency() const { return hopLatency(payloadBytes + kPbackHeaderBytes); }

  SimTime controlHopLatency() const { return hopLatency(kControlBytes); }
};

}  // namespace manet
