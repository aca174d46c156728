#include "manetsim/blackhole.hpp"

#include <algorithm>

namespace manet {

Packet forgeRrep(const AttackerProfile& profile, NodeId attacker,
                 const Packet& rreq, std::uint32_t maxSeqSeen) {
  Packet rrep;
  rrep.kind = PacketKind::Rrep;
  rrep.flowSrc = rreq.flowSrc;
  rrep.flowDst = rreq.flowDst;
  rrep.path = rreq.path;
  rrep.path.push_back(attacker);
  rrep.path.push_back(rreq.flowDst);
  rrep.hopCount = profile.forgedHopCount;
  rrep.destSeq = maxSeqSeen + profile.seqInflation;
  rrep.broadcastId = rreq.broadcastId;
  // Travel back over the real links the request came in on.
  rrep.route.assign(rreq.path.rbegin(), rreq.path.rend());
  rrep.route.insert(rrep.route.begin(), attacker);
  rrep.hopIndex = 0;
  return rrep;
}

}  // namespace manet
