#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tokenlap/graph6.hpp"
#include "tokenlap/identities.hpp"

namespace tokenlap {

inline constexpr double kDefaultConjectureTol = 1e-7;
inline constexpr double kContainmentTol = 1e-7;
/// Non-binding wall-clock target for the n <= 7, k = 2 corpus, in seconds.
inline constexpr int kScanTargetSeconds = 300;

enum class RecordStatus { Ok, Trivial, Skipped };

struct ScanRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  int h = 0;
  int k = 0;
  RecordStatus status = RecordStatus::Ok;
  std::string note;  // reason for a skip or a failed check

  std::optional<double> alpha_graph;
  std::optional<double> alpha_token;
  std::optional<double> alpha_difference;
  std::optional<bool> containment_ok;
  std::optional<bool> pairing_ok;
  std::vector<IdentityReport> identities;

  bool violation = false;
};

struct ScanSummary {
  std::size_t records = 0;
  std::size_t graphs_scanned = 0;  // records not skipped
  std::size_t skipped = 0;
  std::size_t trivial = 0;
  double max_alpha_difference = 0.0;
  std::vector<std::size_t> violations;  // line numbers
};

struct ScanReport {
  std::string mode;  // "conjecture" or "identities"
  std::string corpus;
  int h = 1;
  int k = 2;
  double conjecture_tol = kDefaultConjectureTol;
  std::vector<ScanRecord> records;  // input line order
  ScanSummary summary;
};

struct ScanOptions {
  int k = 2;
  int h = 1;
  double conjecture_tol = kDefaultConjectureTol;
  int jobs = 1;
  std::string corpus = "stdin";
  bool check_containment = true;
  bool check_pairing = true;
};

/// Checks alpha(F_k(G)) = alpha(G) for every record, plus spectral
/// containment of G in F_k(G) and complement pairing when enabled. Records
/// are parsed up front; a malformed one throws ParseError carrying its line.
ScanReport scan_conjecture(const std::vector<Graph6Record>& stream, const ScanOptions& options);

/// Runs every exact identity check at levels (h, k) for every record.
ScanReport run_identity_suite(const std::vector<Graph6Record>& stream, const ScanOptions& options);

/// Header line, one line per record, trailing summary line. Floats carry 12
/// significant digits, so the bytes depend only on the report contents.
void write_report_jsonl(const ScanReport& report, std::ostream& out);

/// Rounds to 12 significant digits.
double round_sig12(double x);

}  // namespace tokenlap
