#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "manetsim/route-table.hpp"
#include "manetsim/rng.hpp"
#include "manetsim/sim-time.hpp"
#include "manetsim/topology.hpp"

namespace manet {

/// Knobs for the multipath selection step.
struct PathSelectionParams {
  SimTime delta;            // max delay above the fastest candidate
  int kMax = 3;             // cap on selected paths
  bool allowOverlap = false;  // disable vertex-disjointness (experiments only)
};

struct Selection {
  // paths[i] carries path number PN = i + 1.
  std::vector<MultipathRouteEntry> paths;
};

enum class SelectStatus { Ok, InsufficientPaths };

/// Keeps every route within delta of the fastest, then greedily picks routes
/// in ascending estimated delay (ties: lexicographic node sequence) that are
/// vertex-disjoint from the already-picked ones except at the endpoints.
/// Fewer than two picks is a failure; the caller falls back to single-path
/// forwarding.
SelectStatus selectMultipaths(const std::vector<MultipathRouteEntry>& mrt,
                              const PathSelectionParams& params,
                              Selection& out);

enum class PermPolicy : std::uint8_t { BackwardShift, SeededRandom };

/// Fixed-point-free permutation of {1..np}. Index 0 of the result is unused;
/// result[i] is the ack path for data path i. Empty when np < 2 (no
/// derangement exists). The default backward shift maps 1->np, i -> i-1,
/// which for np=3 gives 1->3, 2->1, 3->2. The seeded policy draws a uniform
/// random derangement from the supplied stream.
std::vector<std::uint8_t> generatePermutation(int np, PermPolicy policy,
                                              RngStream* rng = nullptr);

/// Destination-side bookkeeping for one (flow, round): which paths have
/// delivered data (and therefore have a usable reverse route), and which
/// acknowledgements are still owed.
///
/// A PBA for data packet i travels on path perm(i) and can only leave once
/// that path's reverse route is known from an arrived data packet. Both the
/// newly-arrived packet's pending creditors and its own acknowledgement are
/// checked on every arrival.
class ReceiverRound {
 public:
  struct PbaOut {
    std::uint8_t pn = 0;     // data packet being acknowledged
    std::uint8_t packn = 0;  // path it travels on
    std::vector<NodeId> route;  // concrete reverse route for that path
  };

  /// Records a data arrival and returns every PBA that becomes dispatchable.
  /// Sets duplicate when this (round, pn) was already seen.
  std::vector<PbaOut> onData(std::uint8_t pn, std::uint8_t packn,
                             const std::vector<NodeId>& reverseRoute,
                             bool& duplicate);

  std::size_t arrivedCount() const { return m_entries.size(); }
  std::size_t sentCount() const { return m_sent; }

 private:
  struct Entry {
    std::uint8_t packn = 0;
    std::vector<NodeId> reverseRoute;
    bool psr = false;  // PBA for this data packet already sent
  };
  std::map<std::uint8_t, Entry> m_entries;  // keyed by pn; presence == live path
  std::size_t m_sent = 0;
};

/// Sender-side table rows for one round. PSR=1 always implies FGB=1.
class SenderRound {
 public:
  struct Entry {
    std::uint8_t pn = 0;
    std::uint8_t packn = 0;
    std::vector<NodeId> path;
    std::uint64_t payloadSeq = 0;
    bool fgbGood = false;  // path known good
    bool psr = false;      // PBA received
    bool resolved = false; // closed out by a verdict or an alarm purge
  };

  SenderRound() = default;
  SenderRound(std::uint32_t round, const std::vector<MultipathRouteEntry>& paths,
              const std::vector<std::uint8_t>& perm);

  /// Applies one PBA. Returns the path numbers newly marked good (both the
  /// acknowledged data path and the path the ack travelled on); empty for a
  /// stale or repeated acknowledgement.
  std::vector<std::uint8_t> onPba(std::uint8_t pn, std::uint8_t packn);

  bool allAcked() const;

  /// Paths with no acknowledgement and no sign of life: PSR=0 and FGB=0.
  std::vector<std::uint8_t> suspects() const;

  Entry* entry(std::uint8_t pn);
  const std::vector<Entry>& entries() const { return m_entries; }
  std::uint32_t round() const { return m_round; }
  int np() const { return static_cast<int>(m_entries.size()); }

 private:
  std::uint32_t m_round = 0;
  std::vector<Entry> m_entries;  // index pn-1
};

}  // namespace manet
