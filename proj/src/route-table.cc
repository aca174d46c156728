#include "manetsim/route-table.hpp"

#include <algorithm>

namespace manet {

bool RouteTable::add(const MultipathRouteEntry& entry) {
  auto& rows = m_routes[entry.destination];
  for (auto& row : rows) {
    if (row.path == entry.path) {
      // Same path rediscovered; keep the freshest sequence number.
      row.destSeq = std::max(row.destSeq, entry.destSeq);
      return false;
    }
  }
  rows.push_back(entry);
  return true;
}

const std::vector<MultipathRouteEntry>* RouteTable::find(NodeId dst) const {
  auto it = m_routes.find(dst);
  return it == m_routes.end() ? nullptr : &it->second;
}

std::size_t RouteTable::purgeNode(NodeId bad) {
  std::size_t removed = 0;
  for (auto& [dst, rows] : m_routes) {
    auto end = std::remove_if(rows.begin(), rows.end(), [&](const auto& row) {
      return std::find(row.path.begin(), row.path.end(), bad) != row.path.end();
    });
    removed += static_cast<std::size_t>(rows.end() - end);
    rows.erase(end, rows.end());
  }
  return removed;
}

std::size_t RouteTable::purgeLink(NodeId a, NodeId b, NodeId dst) {
  auto it = m_routes.find(dst);
  if (it == m_routes.end()) {
    return 0;
  }
  auto& rows = it->second;
  auto hasLink = [&](const std::vector<NodeId>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if ((path[i] == a && path[i + 1] == b) ||
          (path[i] == b && path[i + 1] == a)) {
        return true;
      }
    }
    return false;
  };
  auto end = std::remove_if(rows.begin(), rows.end(),
                            [&](const auto& row) { return hasLink(row.path); });
  std::size_t removed = static_cast<std::size_t>(rows.end() - end);
  rows.erase(end, rows.end());
  return removed;
}

bool RouteTable::purgePath(NodeId dst, const std::vector<NodeId>& path) {
  auto it = m_routes.find(dst);
  if (it == m_routes.end()) {
    return false;
  }
  auto& rows = it->second;
  for (auto row = rows.begin(); row != rows.end(); ++row) {
    if (row->path == path) {
      rows.erase(row);
      return true;
    }
  }
  return false;
}

MultipathRouteEntry* RouteTable::findPath(NodeId dst,
                                          const std::vector<NodeId>& path) {
  auto it = m_routes.find(dst);
  if (it == m_routes.end()) {
    return nullptr;
  }
  for (auto& row : it->second) {
    if (row.path == path) {
      return &row;
    }
  }
  return nullptr;
}

}  // namespace manet
