#pragma once

#include <cstdint>

#include "manetsim/packet.hpp"

namespace manet {

/// Black-hole behavior: answer every route request with a forged best route
/// claiming direct connectivity to the destination, then drop all payload
/// traffic routed through this node.
struct AttackerProfile {
  std::uint32_t forgedHopCount = 1;   // advertised hop count, >= 1
  std::uint32_t seqInflation = 1000;  // added on top of the highest seq seen
};

/// Builds the forged route reply for a received RREQ. The claimed path is the
/// request's accumulated path extended with [attacker, destination], so the
/// victim's table holds the exact direct-connectivity claim the destination
/// can later falsify against its neighbor list.
Packet forgeRrep(const AttackerProfile& profile, NodeId attacker,
                 const Packet& rreq, std::uint32_t maxSeqSeen);

}  // namespace manet
