#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "manetsim/packet.hpp"

namespace manet {

/// Per-run counters. Transmission counters count hop-transmissions: a packet
/// crossing h links is counted h times, once per transmitting node.
struct MetricsReport {
  std::uint64_t dataSent = 0;      // application packets handed to the source
  std::uint64_t dataReceived = 0;  // application packets arriving at their sink

  std::uint64_t dataTx = 0;  // data hop-transmissions (ToM=1)
  std::array<std::uint64_t, 8> txByKind{};  // indexed by PacketKind

  std::uint64_t maliciousDrops = 0;
  std::uint64_t linkDrops = 0;
  std::uint64_t duplicateData = 0;
  std::uint64_t stalePba = 0;
  std::uint64_t insufficientPaths = 0;
  std::uint64_t detectionAbandoned = 0;
  std::uint64_t noRoute = 0;

  /// Accusations raised by destinations (accused node per alarm origination).
  std::vector<NodeId> accusations;

  std::uint64_t txOf(PacketKind kind) const {
    return txByKind[static_cast<std::size_t>(kind)];
  }
  void addTx(PacketKind kind) {
    ++txByKind[static_cast<std::size_t>(kind)];
    if (kind == PacketKind::Data) {
      ++dataTx;
    }
  }

  /// Control packets by reporting kind; verdicts are folded into the path
  /// check counter.
  std::uint64_t controlTxReported(PacketKind kind) const;
  std::uint64_t controlTxTotal() const;

  double deliveryRatio() const {
    return dataSent == 0 ? 0.0
                         : static_cast<double>(dataReceived) /
                               static_cast<double>(dataSent);
  }

  /// Route-establishment and detection traffic as a share of all
  /// hop-transmissions. Acknowledgements ride the data plane: they appear in
  /// the denominator but not in the overhead numerator.
  double routingOverheadPct() const;

  double throughputBps(int payloadBytes, double simSeconds) const {
    if (simSeconds <= 0.0) {
      return 0.0;
    }
    return static_cast<double>(dataReceived) * payloadBytes * 8.0 / simSeconds;
  }

  /// Distinct accused nodes that are (detections) / are not (false positives)
  /// in the ground-truth attacker set.
  std::pair<std::uint64_t, std::uint64_t> detectionCounts(
      const std::set<NodeId>& groundTruth) const;
};

}  // namespace manet
