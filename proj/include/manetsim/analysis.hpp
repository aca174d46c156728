#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "manetsim/metrics.hpp"
#include "manetsim/topology.hpp"

namespace manet {
namespace analysis {

/// Routing overhead of the permuted-acknowledgement scheme with p malicious
/// paths out of k, as a percentage: 100 * p / (p + k).
double routingOverheadPercent(int p, int k);

/// Overhead of the adaptive-acknowledgement baseline: 2n control transactions
/// per n data transactions, a constant 66.67%.
double aackOverheadPercent();

/// Closed-form transaction counts for a path of n intermediate nodes and k
/// selected paths.
struct TransactionCounts {
  long long aackTotal;             // 3n: end-to-end ack plus two-hop ack mode
  long long etwoack;               // 2n
  long long eeack;                 // n
  long long pbackRound;            // k*n per acknowledged round
  long long pbackDetectionExtra;   // n extra for shipping one suspect path
};
TransactionCounts transactionCounts(int n, int k);

/// One cell of the overhead comparison grid.
struct Table2Cell {
  int p = 0;
  int k = 0;
  bool na = false;          // p > k: more malicious than available paths
  double computed = 0.0;    // full-precision formula value
  double published = 0.0;   // value printed in the original comparison table
  bool errata = false;      // published value is a known arithmetic slip
};

/// Grid for p in 1..3, k in 1..10 plus the constant baseline row, with the
/// two known slips in the published table flagged.
struct Table2 {
  std::vector<Table2Cell> cells;     // row-major: p=1..3 by k=1..10
  double aackComputed = 0.0;
  double aackPublished = 0.0;

  const Table2Cell& at(int p, int k) const;
};
Table2 generateTable2();

/// Pretty-printer and CSV emitter for the grid ("-NA-" cells rendered as in
/// the published table, slips annotated below).
void printTable2(const Table2& table, std::ostream& os);
void writeTable2Csv(const Table2& table, std::ostream& os);

/// Rebuilds a metrics report from a structured event log, cross-checkable
/// against the per-node counters collected during the run. Throws
/// std::runtime_error on a truncated or malformed log.
MetricsReport computeMetrics(const std::string& eventLog);

}  // namespace analysis
}  // namespace manet
