#include "manetsim/metrics.hpp"

namespace manet {

std::uint64_t MetricsReport::controlTxReported(PacketKind kind) const {
  if (kind == PacketKind::PathCheck) {
    return txOf(PacketKind::PathCheck) + txOf(PacketKind::Verdict);
  }
  return txOf(kind);
}

std::uint64_t MetricsReport::controlTxTotal() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < txByKind.size(); ++i) {
    if (static_cast<PacketKind>(i) != PacketKind::Data) {
      total += txByKind[i];
    }
  }
  return total;
}

double MetricsReport::routingOverheadPct() const {
  std::uint64_t cp = txOf(PacketKind::Rreq) + txOf(PacketKind::Rrep) +
                     txOf(PacketKind::Rerr) + txOf(PacketKind::PathCheck) +
                     txOf(PacketKind::Verdict) + txOf(PacketKind::Alarm);
  std::uint64_t all = cp + txOf(PacketKind::Pba) + dataTx;
  if (all == 0) {
    return 0.0;
  }
  return 100.0 * static_cast<double>(cp) / static_cast<double>(all);
}

std::pair<std::uint64_t, std::uint64_t> MetricsReport::detectionCounts(
    const std::set<NodeId>& groundTruth) const {
  std::set<NodeId> distinct(accusations.begin(), accusations.end());
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  for (NodeId accused : distinct) {
    if (groundTruth.count(accused) > 0) {
      ++hits;
    } else {
      ++misses;
    }
  }
  return {hits, misses};
}

}  // namespace manet
