#include "manetsim/analysis.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace manet {
namespace analysis {

double routingOverheadPercent(int p, int k) {
  if (k < 1) {
    throw std::domain_error("routingOverheadPercent: k must be >= 1");
  }
  if (p < 0) {
    throw std::domain_error("routingOverheadPercent: p must be >= 0");
  }
  if (p == 0) {
    return 0.0;
  }
  return 100.0 * static_cast<double>(p) / static_cast<double>(p + k);
}

double aackOverheadPercent() {
  // CP = 2n (two-hop ack mode), DP = n.
  return routingOverheadPercent(2, 1);
}

TransactionCounts transactionCounts(int n, int k) {
  if (n < 1 || k < 2) {
    throw std::domain_error("transactionCounts: need n >= 1 and k >= 2");
  }
  TransactionCounts t{};
  t.eeack = n;
  t.etwoack = 2LL * n;
  t.aackTotal = 3LL * n;
  t.pbackRound = static_cast<long long>(k) * n;
  t.pbackDetectionExtra = n;
  return t;
}

namespace {

constexpr double kNa = -1.0;

// Values as printed in the original comparison table, p=1..3 by k=1..10.
constexpr double kPublished[3][10] = {
    {50.00, 33.33, 25.0, 20.0, 16.66, 14.28, 12.5, 11.11, 10.0, 9.09},
    {kNa, 50.0, 40.0, 33.33, 28.57, 25.0, 22.22, 20.0, 18.18, 16.66},
    {kNa, kNa, 50.0, 42.55, 37.5, 33.33, 30.0, 27.27, 25.0, 23.07},
};
constexpr double kPublishedAack = 66.66;

// Cells whose printed value disagrees with the formula beyond truncation.
bool isKnownSlip(int p, int k) {
  return (p == 3 && k == 4) || (p == 3 && k == 10);
}

}  // namespace

const Table2Cell& Table2::at(int p, int k) const {
  return cells[static_cast<std::size_t>((p - 1) * 10 + (k - 1))];
}

Table2 generateTable2() {
  Table2 table;
  for (int p = 1; p <= 3; ++p) {
    for (int k = 1; k <= 10; ++k) {
      Table2Cell cell;
      cell.p = p;
      cell.k = k;
      cell.na = p > k;
      cell.published = kPublished[p - 1][k - 1];
      if (!cell.na) {
        cell.computed = routingOverheadPercent(p, k);
        cell.errata = isKnownSlip(p, k);
      }
      table.cells.push_back(cell);
    }
  }
  table.aackComputed = aackOverheadPercent();
  table.aackPublished = kPublishedAack;
  return table;
}

void printTable2(const Table2& table, std::ostream& os) {
  os << "Routing overhead %% by malicious paths (p) and total paths (k)\n";
  char buf[32];
  os << "p\\k ";
  for (int k = 1; k <= 10; ++k) {
    std::snprintf(buf, sizeof(buf), "%8d", k);
    os << buf;
  }
  os << '\n';
  for (int p = 1; p <= 3; ++p) {
    std::snprintf(buf, sizeof(buf), "%-4d", p);
    os << buf;
    for (int k = 1; k <= 10; ++k) {
      const Table2Cell& cell = table.at(p, k);
      if (cell.na) {
        std::snprintf(buf, sizeof(buf), "%8s", "-NA-");
      } else {
        std::snprintf(buf, sizeof(buf), "%7.2f%c", cell.computed,
                      cell.errata ? '*' : ' ');
      }
      os << buf;
    }
    os << '\n';
  }
  os << "AACK";
  for (int k = 1; k <= 10; ++k) {
    std::snprintf(buf, sizeof(buf), "%7.2f ", table.aackComputed);
    os << buf;
  }
  os << '\n';
  for (int p = 1; p <= 3; ++p) {
    for (int k = 1; k <= 10; ++k) {
      const Table2Cell& cell = table.at(p, k);
      if (cell.errata) {
        std::snprintf(buf, sizeof(buf), "%.2f", cell.computed);
        os << "* p=" << p << ", k=" << k << ": formula gives " << buf;
        std::snprintf(buf, sizeof(buf), "%.2f", cell.published);
        os << "; the originally published table prints " << buf
           << " (arithmetic slip)\n";
      }
    }
  }
}

void writeTable2Csv(const Table2& table, std::ostream& os) {
  os << "p,k,computed,published,note\n";
  char buf[64];
  for (const Table2Cell& cell : table.cells) {
    if (cell.na) {
      os << cell.p << ',' << cell.k << ",NA,NA,\n";
      continue;
    }
    std::snprintf(buf, sizeof(buf), "%d,%d,%.4f,%.2f,%s\n", cell.p, cell.k,
                  cell.computed, cell.published,
                  cell.errata ? "published-value-slip" : "");
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "aack,,%.4f,%.2f,\n", table.aackComputed,
                table.aackPublished);
  os << buf;
}

namespace {

std::map<std::string, std::string> parseTokens(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("malformed event log token: " + tok);
    }
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

PacketKind kindFromString(const std::string& s) {
  if (s == "RREQ") return PacketKind::Rreq;
  if (s == "RREP") return PacketKind::Rrep;
  if (s == "RERR") return PacketKind::Rerr;
  if (s == "DATA") return PacketKind::Data;
  if (s == "PBA") return PacketKind::Pba;
  if (s == "CHECK") return PacketKind::PathCheck;
  if (s == "VERDICT") return PacketKind::Verdict;
  if (s == "ALARM") return PacketKind::Alarm;
  throw std::runtime_error("unknown packet kind in event log: " + s);
}

}  // namespace

MetricsReport computeMetrics(const std::string& eventLog) {
  MetricsReport report;
  std::istringstream stream(eventLog);
  std::string line;
  bool sawEnd = false;
  while (std::getline(stream, line)) {
    if (line.empty()) {
      continue;
    }
    if (sawEnd) {
      throw std::runtime_error("event log has records after the end marker");
    }
    auto tokens = parseTokens(line);
    if (tokens.count("t") == 0 || tokens.count("ev") == 0) {
      throw std::runtime_error("event log record missing t/ev: " + line);
    }
    const std::string& ev = tokens.at("ev");
    if (ev == "tx") {
      report.addTx(kindFromString(tokens.at("kind")));
    } else if (ev == "drop") {
      const std::string& why = tokens.at("why");
      if (why == "malicious") {
        ++report.maliciousDrops;
      } else {
        ++report.linkDrops;
      }
    } else if (ev == "app") {
      const std::string& what = tokens.at("what");
      if (what == "sent") {
        ++report.dataSent;
      } else if (what == "recv") {
        ++report.dataReceived;
      }
    } else if (ev == "accuse") {
      report.accusations.push_back(
          static_cast<NodeId>(std::stoul(tokens.at("accused"))));
    } else if (ev == "note") {
      const std::string& what = tokens.at("what");
      if (what == "insufficient_paths") {
        ++report.insufficientPaths;
      } else if (what == "noroute") {
        ++report.noRoute;
      } else if (what == "detection_abandoned") {
        ++report.detectionAbandoned;
      } else if (what == "stale_pba") {
        ++report.stalePba;
      } else if (what == "dup_data") {
        ++report.duplicateData;
      }
    } else if (ev == "end") {
      sawEnd = true;
    }
    // rx / timer / waypoint / traffic / select records carry no counters.
  }
  if (!sawEnd) {
    throw std::runtime_error("event log is truncated: no end marker");
  }
  return report;
}

}  // namespace analysis
}  // namespace manet
