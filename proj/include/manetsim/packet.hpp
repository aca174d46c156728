#pragma once

#include <cstdint>
#include <vector>

#include "manetsim/radio.hpp"
#include "manetsim/topology.hpp"

namespace manet {

enum class PacketKind : std::uint8_t {
  Rreq,       // route request, flooded
  Rrep,       // route reply, unicast back along the accumulated path
  Rerr,       // link-break notice back to the flow source
  Data,       // application payload, ToM=1
  Pba,        // permuted acknowledgement
  PathCheck,  // suspect path shipped to the destination, ToM=0
  Verdict,    // destination's reply to a path check
  Alarm,      // flooded accusation of a confirmed black hole
};

const char* toString(PacketKind kind);
bool isControl(PacketKind kind);

/// Header appended to data/ack traffic: path number, permuted ack path
/// number, path count and the data/path-check flag, plus a round id that
/// keeps acknowledgements from different rounds apart.
struct PbackHeader {
  std::uint32_t round = 0;
  std::uint8_t pn = 0;
  std::uint8_t packn = 0;
  std::uint8_t np = 0;
  bool tomData = true;
};

/// Bit-exact layout used in the event log: round:u32 | PN:u8 | PAckN:u8 |
/// NP:u8 | ToM:u1, packed little-end-first into the low 57 bits.
std::uint64_t packHeader(const PbackHeader& h);
PbackHeader unpackHeader(std::uint64_t bits);

struct Packet {
  PacketKind kind = PacketKind::Data;
  std::uint64_t pid = 0;       // unique per origination; stable across hops
  NodeId flowSrc = kInvalidNode;
  NodeId flowDst = kInvalidNode;
  int sizeBytes = kControlBytes;

  // Unicast source route (includes both endpoints) and the holder's index.
  std::vector<NodeId> route;
  std::size_t hopIndex = 0;

  // RREQ/RREP accumulated path, path-check suspect path, or RERR broken link.
  std::vector<NodeId> path;
  std::uint32_t broadcastId = 0;
  std::uint32_t destSeq = 0;
  std::uint32_t hopCount = 0;

  PbackHeader hdr;
  std::uint64_t payloadSeq = 0;  // application packet number within the flow

  // Alarm / verdict fields.
  NodeId accused = kInvalidNode;
  NodeId reporter = kInvalidNode;
  std::uint32_t floodId = 0;
  int ttl = 0;
  bool verdictOk = false;
};

}  // namespace manet
