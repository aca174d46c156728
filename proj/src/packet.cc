#include "manetsim/packet.hpp"

namespace manet {

const char* toString(PacketKind kind) {
  switch (kind) {
    case PacketKind::Rreq: return "RREQ";
    case PacketKind::Rrep: return "RREP";
    case PacketKind::Rerr: return "RERR";
    case PacketKind::Data: return "DATA";
    case PacketKind::Pba: return "PBA";
    case PacketKind::PathCheck: return "CHECK";
    case PacketKind::Verdict: return "VERDICT";
    case PacketKind::Alarm: return "ALARM";
  }
  return "?";
}

bool isControl(PacketKind kind) { return kind != PacketKind::Data; }

std::uint64_t packHeader(const PbackHeader& h) {
  return (std::uint64_t(h.round) << 25) | (std::uint64_t(h.pn) << 17) |
         (std::uint64_t(h.packn) << 9) | (std::uint64_t(h.np) << 1) |
         (h.tomData ? 1u : 0u);
}

PbackHeader unpackHeader(std::uint64_t bits) {
  PbackHeader h;
  h.tomData = (bits & 1u) != 0;
  h.np = static_cast<std::uint8_t>((bits >> 1) & 0xff);
  h.packn = static_cast<std::uint8_t>((bits >> 9) & 0xff);
  h.pn = static_cast<std::uint8_t>((bits >> 17) & 0xff);
  h.round = static_cast<std::uint32_t>(bits >> 25);
  return h;
}

}  // namespace manet
