#include "manetsim/aomsr.hpp"

#include <algorithm>
#include <stdexcept>

namespace manet {

namespace {

// Interior nodes of a path (everything but the shared endpoints).
bool interiorsDisjoint(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    for (std::size_t j = 1; j + 1 < b.size(); ++j) {
      if (a[i] == b[j]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SelectStatus selectMultipaths(const std::vector<MultipathRouteEntry>& mrt,
                              const PathSelectionParams& params,
                              Selection& out) {
  out.paths.clear();
  if (mrt.empty()) {
    return SelectStatus::InsufficientPaths;
  }
  SimTime tMin = mrt.front().estDelay;
  for (const auto& row : mrt) {
    tMin = std::min(tMin, row.estDelay);
  }
  SimTime budget = tMin + params.delta;

  std::vector<const MultipathRouteEntry*> candidates;
  for (const auto& row : mrt) {
    if (row.estDelay <= budget) {
      candidates.push_back(&row);
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const MultipathRouteEntry* a, const MultipathRouteEntry* b) {
              if (a->estDelay != b->estDelay) {
                return a->estDelay < b->estDelay;
              }
              return a->path < b->path;
            });

  for (const auto* cand : candidates) {
    if (static_cast<int>(out.paths.size()) >= params.kMax) {
      break;
    }
    bool ok = true;
    if (!params.allowOverlap) {
      for (const auto& picked : out.paths) {
        if (!interiorsDisjoint(cand->path, picked.path)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      out.paths.push_back(*cand);
    }
  }

  if (out.paths.size() < 2) {
    return SelectStatus::InsufficientPaths;
  }
  return SelectStatus::Ok;
}

std::vector<std::uint8_t> generatePermutation(int np, PermPolicy policy,
                                              RngStream* rng) {
  if (np < 2 || np > 255) {
    return {};
  }
  std::vector<std::uint8_t> perm(static_cast<std::size_t>(np) + 1, 0);
  if (policy == PermPolicy::BackwardShift) {
    for (int i = 1; i <= np; ++i) {
      perm[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(((i - 2 + np) % np) + 1);
    }
    return perm;
  }
  if (rng == nullptr) {
    throw std::invalid_argument("seeded permutation policy needs a stream");
  }
  // Rejection-sample a uniform derangement.
  std::vector<std::uint8_t> vals(static_cast<std::size_t>(np));
  while (true) {
    for (int i = 0; i < np; ++i) {
      vals[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    }
    rng->shuffle(vals);
    bool fixedPoint = false;
    for (int i = 0; i < np; ++i) {
      if (vals[static_cast<std::size_t>(i)] == i + 1) {
        fixedPoint = true;
        break;
      }
    }
    if (!fixedPoint) {
      break;
    }
  }
  for (int i = 1; i <= np; ++i) {
    perm[static_cast<std::size_t>(i)] = vals[static_cast<std::size_t>(i - 1)];
  }
  return perm;
}

std::vector<ReceiverRound::PbaOut> ReceiverRound::onData(
    std::uint8_t pn, std::uint8_t packn,
    const std::vector<NodeId>& reverseRoute, bool& duplicate) {
  duplicate = false;
  std::vector<PbaOut> out;
  if (m_entries.count(pn) > 0) {
    duplicate = true;
    return out;
  }
  Entry& self = m_entries[pn];
  self.packn = packn;
  self.reverseRoute = reverseRoute;

  // Acknowledgements that were waiting for this path to come alive.
  for (auto& [otherPn, other] : m_entries) {
    if (otherPn != pn && other.packn == pn && !other.psr) {
      out.push_back(PbaOut{otherPn, other.packn, reverseRoute});
      other.psr = true;
      ++m_sent;
    }
  }
  // This packet's own acknowledgement, if its ack path is already live.
  auto ackPath = m_entries.find(packn);
  if (packn != pn && ackPath != m_entries.end() && !self.psr) {
    out.push_back(PbaOut{pn, packn, ackPath->second.reverseRoute});
    self.psr = true;
    ++m_sent;
  }
  return out;
}

SenderRound::SenderRound(std::uint32_t round,
                         const std::vector<MultipathRouteEntry>& paths,
                         const std::vector<std::uint8_t>& perm)
    : m_round(round) {
  m_entries.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    Entry& e = m_entries[i];
    e.pn = static_cast<std::uint8_t>(i + 1);
    e.packn = perm[i + 1];
    e.path = paths[i].path;
  }
}

std::vector<std::uint8_t> SenderRound::onPba(std::uint8_t pn, std::uint8_t packn) {
  std::vector<std::uint8_t> newlyGood;
  Entry* acked = entry(pn);
  if (acked == nullptr) {
    return newlyGood;
  }
  if (!acked->psr) {
    acked->psr = true;
    if (!acked->fgbGood) {
      acked->fgbGood = true;
      newlyGood.push_back(pn);
    }
  }
  // The path the acknowledgement travelled on demonstrably works too.
  if (Entry* carrier = entry(packn); carrier != nullptr && !carrier->fgbGood) {
    carrier->fgbGood = true;
    newlyGood.push_back(packn);
  }
  return newlyGood;
}

bool SenderRound::allAcked() const {
  for (const auto& e : m_entries) {
    if (!e.psr) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> SenderRound::suspects() const {
  std::vector<std::uint8_t> out;
  for (const auto& e : m_entries) {
    if (!e.psr && !e.fgbGood && !e.resolved) {
      out.push_back(e.pn);
    }
  }
  return out;
}

SenderRound::Entry* SenderRound::entry(std::uint8_t pn) {
  if (pn == 0 || pn > m_entries.size()) {
    return nullptr;
  }
  return &m_entries[pn - 1];
}

}  // namespace manet
