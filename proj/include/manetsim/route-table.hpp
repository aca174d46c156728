#pragma once

#include <map>
#include <vector>

#include "manetsim/sim-time.hpp"
#include "manetsim/topology.hpp"

namespace manet {

/// One row of the multipath routing table: a complete node path to the
/// destination plus the freshness and delay data the selection step needs.
struct MultipathRouteEntry {
  NodeId destination = kInvalidNode;
  std::uint32_t destSeq = 0;
  std::uint32_t hopCount = 0;
  std::vector<NodeId> path;  // starts at self, ends at destination
  SimTime estDelay;          // hopCount * per-hop data latency
  bool suspectPending = false;  // a path check for this row is in flight
};

/// Per-node multipath routing table, keyed by destination. Stores every
/// distinct discovered path; duplicates (identical node sequences) collapse.
class RouteTable {
 public:
  /// Returns true if the entry was new (path not already stored).
  bool add(const MultipathRouteEntry& entry);

  std::vector<MultipathRouteEntry>& entriesFor(NodeId dst) { return m_routes[dst]; }
  const std::vector<MultipathRouteEntry>* find(NodeId dst) const;

  /// Drops every path that passes through the given node. Returns the number
  /// of removed entries.
  std::size_t purgeNode(NodeId bad);

  /// Drops every path containing the undirected link a-b.
  std::size_t purgeLink(NodeId a, NodeId b, NodeId dst);

  /// Drops one exact path to dst if present.
  bool purgePath(NodeId dst, const std::vector<NodeId>& path);

  MultipathRouteEntry* findPath(NodeId dst, const std::vector<NodeId>& path);

  bool empty() const { return m_routes.empty(); }

 private:
  std::map<NodeId, std::vector<MultipathRouteEntry>> m_routes;
};

}  // namespace manet
