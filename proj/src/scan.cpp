#include "tokenlap/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "tokenlap/combinatorics.hpp"
#include "tokenlap/eigensolver.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/spectral.hpp"
#include "tokenlap/spectrum.hpp"
#include "tokenlap/token_graph.hpp"

namespace tokenlap {
namespace {

using nlohmann::ordered_json;

struct ParsedRecord {
  std::size_t line;
  std::string text;
  Graph graph;
};

std::vector<ParsedRecord> parse_stream(const std::vector<Graph6Record>& stream) {
  std::vector<ParsedRecord> out;
  out.reserve(stream.size());
  for (const auto& rec : stream) {
    try {
      out.push_back({rec.line, rec.text, parse_graph6(rec.text)});
    } catch (const ParseError& e) {
      throw ParseError(e, rec.line);
    }
  }
  return out;
}

// Runs task(i) for i in [0, count) on `jobs` workers pulling from a shared
// counter. Results must be written to per-index slots.
void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                      std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) task(i);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

ScanRecord base_record(const ParsedRecord& p, const ScanOptions& options) {
  ScanRecord r;
  r.line = p.line;
  r.graph6 = p.text;
  r.n = p.graph.order();
  r.h = options.h;
  r.k = options.k;
  return r;
}

void skip(ScanRecord& r, std::string why) {
  r.status = RecordStatus::Skipped;
  r.note = std::move(why);
}

ScanRecord conjecture_record(const ParsedRecord& p, const ScanOptions& options) {
  ScanRecord r = base_record(p, options);
  const Graph& g = p.graph;
  const int n = g.order();
  const int k = options.k;
  if (k < 1 || k > n - 1) {
    skip(r, "k outside [1, n-1]");
    return r;
  }
  if (binom(n, k) > SymmetricEigenSolver<double>::kMaxDimension) {
    skip(r, "C(n,k) above the eigensolver cap");
    return r;
  }
  try {
    const Graph fk = token_graph(g, k).graph;
    if (!is_connected(g)) {
      r.status = RecordStatus::Trivial;
      r.alpha_graph = 0.0;
      r.alpha_token = 0.0;
      r.alpha_difference = 0.0;
    } else {
      r.alpha_graph = algebraic_connectivity(g);
      r.alpha_token = algebraic_connectivity(fk);
      r.alpha_difference = std::abs(*r.alpha_token - *r.alpha_graph);
      if (*r.alpha_difference > options.conjecture_tol) {
        r.violation = true;
        r.note = "algebraic connectivity differs";
      }
    }
    if (options.check_containment) {
      r.containment_ok = spectrum_contains(spectrum_of(g), spectrum_of(fk), kContainmentTol);
      if (!*r.containment_ok) {
        r.violation = true;
        r.note = "spectrum of G not contained in spectrum of F_k(G)";
      }
    }
    if (options.check_pairing) {
      try {
        const PairingResult pairing = pairing_decomposition(g, k);
        r.pairing_ok = pairing.sums_match_johnson &&
                       static_cast<std::int64_t>(pairing.triples.size()) == binom(n, k);
      } catch (const NumericalError& e) {
        r.pairing_ok = false;
        r.note = e.what();
      }
      if (!*r.pairing_ok) {
        r.violation = true;
        if (r.note.empty()) r.note = "complement pairing does not reproduce J(n,k)";
      }
    }
  } catch (const CapExceeded& e) {
    r = base_record(p, options);
    skip(r, e.what());
  }
  return r;
}

ScanRecord identity_record(const ParsedRecord& p, const ScanOptions& options) {
  ScanRecord r = base_record(p, options);
  const Graph& g = p.graph;
  const int n = g.order();
  const int h = options.h;
  const int k = options.k;
  if (!(1 <= h && h <= k && k <= n - 1)) {
    skip(r, "levels outside 1 <= h <= k <= n-1");
    return r;
  }
  try {
    r.identities.push_back(verify_gram(n, k));
    r.identities.push_back(verify_intertwining(g, h, k));
    r.identities.push_back(verify_projection(g, k));
    r.identities.push_back(verify_general_projection(g, h, k));
    r.identities.push_back(verify_adjacency_relation(g, h, k));
    r.identities.push_back(verify_commutation(g, k));
    r.identities.push_back(verify_incidence_factorization(g, k));
    r.identities.push_back(verify_recovery(g, h, k));
  } catch (const CapExceeded& e) {
    r.identities.clear();
    skip(r, e.what());
    return r;
  } catch (const OverflowError& e) {
    r.identities.clear();
    skip(r, e.what());
    return r;
  }
  for (const auto& rep : r.identities) {
    if (!rep.holds()) {
      r.violation = true;
      if (r.note.empty()) r.note = rep.identity + " failed";
    }
  }
  return r;
}

ScanReport run_scan(const std::vector<Graph6Record>& stream, const ScanOptions& options,
                    std::string mode, ScanRecord (*check)(const ParsedRecord&, const ScanOptions&)) {
  const auto parsed = parse_stream(stream);
  ScanReport report;
  report.mode = std::move(mode);
  report.corpus = options.corpus;
  report.h = options.h;
  report.k = options.k;
  report.conjecture_tol = options.conjecture_tol;
  report.records.resize(parsed.size());
  run_indexed(parsed.size(), options.jobs,
              [&](std::size_t i) { report.records[i] = check(parsed[i], options); });

  ScanSummary& s = report.summary;
  s.records = report.records.size();
  for (const auto& r : report.records) {
    if (r.status == RecordStatus::Skipped) {
      ++s.skipped;
      continue;
    }
    ++s.graphs_scanned;
    if (r.status == RecordStatus::Trivial) ++s.trivial;
    if (r.alpha_difference) s.max_alpha_difference = std::max(s.max_alpha_difference, *r.alpha_difference);
    if (r.violation) s.violations.push_back(r.line);
  }
  return report;
}

const char* status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "ok";
    case RecordStatus::Trivial: return "trivial";
    case RecordStatus::Skipped: return "skipped";
  }
  return "ok";
}

ordered_json identity_json(const IdentityReport& rep) {
  ordered_json j;
  j["identity"] = rep.identity;
  j["holds"] = rep.holds();
  if (rep.discrepancy) {
    j["discrepancy"] = {{"row", rep.discrepancy->row + 1},
                        {"col", rep.discrepancy->col + 1},
                        {"lhs", rep.discrepancy->lhs},
                        {"rhs", rep.discrepancy->rhs}};
  }
  return j;
}

ordered_json record_json(const ScanRecord& r, bool with_alpha) {
  ordered_json j;
  j["type"] = "record";
  j["line"] = r.line;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  if (!with_alpha) j["h"] = r.h;
  j["k"] = r.k;
  j["status"] = status_name(r.status);
  if (r.alpha_graph) j["alpha_graph"] = round_sig12(*r.alpha_graph);
  if (r.alpha_token) j["alpha_token"] = round_sig12(*r.alpha_token);
  if (r.alpha_difference) j["alpha_difference"] = round_sig12(*r.alpha_difference);
  if (r.containment_ok) j["containment_ok"] = *r.containment_ok;
  if (r.pairing_ok) j["pairing_ok"] = *r.pairing_ok;
  if (!r.identities.empty()) {
    j["identities"] = ordered_json::array();
    for (const auto& rep : r.identities) j["identities"].push_back(identity_json(rep));
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["violation"] = r.violation;
  return j;
}

}  // namespace

double round_sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

ScanReport scan_conjecture(const std::vector<Graph6Record>& stream, const ScanOptions& options) {
  return run_scan(stream, options, "conjecture", &conjecture_record);
}

ScanReport run_identity_suite(const std::vector<Graph6Record>& stream, const ScanOptions& options) {
  return run_scan(stream, options, "identities", &identity_record);
}

void write_report_jsonl(const ScanReport& report, std::ostream& out) {
  const bool conjecture = report.mode == "conjecture";
  ordered_json header;
  header["type"] = "header";
  header["mode"] = report.mode;
  header["corpus"] = report.corpus;
  if (!conjecture) header["h"] = report.h;
  header["k"] = report.k;
  if (conjecture) {
    header["conjecture_tol"] = report.conjecture_tol;
    header["target_seconds"] = kScanTargetSeconds;
  }
  out << header.dump() << '\n';
  for (const auto& r : report.records) out << record_json(r, conjecture).dump() << '\n';

  const ScanSummary& s = report.summary;
  ordered_json summary;
  summary["type"] = "summary";
  summary["records"] = s.records;
  summary["graphs_scanned"] = s.graphs_scanned;
  summary["skipped"] = s.skipped;
  summary["trivial"] = s.trivial;
  if (conjecture) summary["max_alpha_difference"] = round_sig12(s.max_alpha_difference);
  summary["violations"] = s.violations;
  out << summary.dump() << '\n';
}

}  // namespace tokenlap
