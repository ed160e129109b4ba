#include "tokenlap/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tokenlap/closed_form.hpp"
#include "tokenlap/combinatorics.hpp"
#include "tokenlap/enumerate.hpp"
#include "tokenlap/error.hpp"
#include "tokenlap/families.hpp"
#include "tokenlap/graph6.hpp"
#include "tokenlap/scan.hpp"
#include "tokenlap/spectral.hpp"
#include "tokenlap/spectrum.hpp"
#include "tokenlap/token_graph.hpp"

namespace tokenlap {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string graph6;
  std::string file;
  std::string family;
  int k = 0;
  int h = 1;
  double tol = 0.0;
  int jobs = 0;
  std::string out;
  int order = 0;
  bool connected = false;
  bool check = false;
};

int default_jobs() {
  if (const char* env = std::getenv("TOKENLAP_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<Graph6Record> input_records(const Options& o) {
  const int given = !o.graph6.empty() + !o.file.empty() + !o.family.empty();
  if (given != 1) throw UsageError("exactly one of --graph6, --file, --family is required");
  if (!o.graph6.empty()) return {{1, o.graph6}};
  if (!o.family.empty()) return {{1, write_graph6(make_family(parse_family(o.family)))}};
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot open " + o.file);
  return read_graph6_records(in);
}

std::string corpus_name(const Options& o) {
  if (!o.file.empty()) return o.file;
  if (!o.family.empty()) return "family:" + o.family;
  return "graph6:" + o.graph6;
}

// Graphs from the input; family graphs above the graph6 limit are built
// directly rather than round-tripped.
std::vector<std::pair<std::string, Graph>> input_graphs(const Options& o) {
  if (!o.family.empty() && o.graph6.empty() && o.file.empty()) {
    Graph g = make_family(parse_family(o.family));
    return {{write_graph6(g), std::move(g)}};
  }
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& rec : input_records(o)) {
    try {
      out.emplace_back(rec.text, parse_graph6(rec.text));
    } catch (const ParseError& e) {
      throw ParseError(e, rec.line);
    }
  }
  return out;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : s.groups()) {
    const double v = std::abs(g.value) < s.group_tol() ? 0.0 : g.value;
    groups.push_back({{"value", round_sig12(v)}, {"multiplicity", g.multiplicity}});
  }
  return groups;
}

// Eigenvalues that should be zero come out as +-1e-16 noise.
double snap(double x) { return std::abs(x) < 1e-12 ? 0.0 : round_sig12(x); }

int cmd_build(const Options& o, std::ostream& out) {
  const int k = o.k == 0 ? 1 : o.k;
  for (const auto& [id, g] : input_graphs(o)) {
    const TokenGraph tg = token_graph(g, k);
    ordered_json j;
    j["graph6"] = id;
    j["k"] = k;
    j["order"] = tg.graph.order();
    j["edges"] = tg.graph.edge_count();
    j["token_graph6"] = write_graph6(tg.graph);
    ordered_json legend = ordered_json::array();
    for (VertexSubset s : tg.index.subsets()) {
      ordered_json members = ordered_json::array();
      for (int e : s.elements()) members.push_back(e + 1);
      legend.push_back(members);
    }
    j["vertices"] = legend;
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const int k = o.k == 0 ? 1 : o.k;
  for (const auto& [id, g] : input_graphs(o)) {
    const Spectrum s = k == 1 ? spectrum_of(g) : spectrum_of(token_graph(g, k).graph);
    ordered_json j;
    j["graph6"] = id;
    j["k"] = k;
    j["dimension"] = s.dimension();
    j["spectrum"] = spectrum_json(s);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_contain(const Options& o, std::ostream& out) {
  const int k = o.k == 0 ? 2 : o.k;
  const double tol = o.tol > 0 ? o.tol : kContainmentTol;
  bool all = true;
  for (const auto& [id, g] : input_graphs(o)) {
    if (!(1 <= o.h && o.h <= k && k <= g.order() - 1)) {
      throw UsageError("contain needs 1 <= h <= k <= n-1");
    }
    const Spectrum small = o.h == 1 ? spectrum_of(g) : spectrum_of(token_graph(g, o.h).graph);
    const Spectrum big = spectrum_of(token_graph(g, k).graph);
    const bool ok = spectrum_contains(small, big, tol);
    all = all && ok;
    ordered_json j;
    j["graph6"] = id;
    j["h"] = o.h;
    j["k"] = k;
    j["contained"] = ok;
    j["spectrum_h"] = spectrum_json(small);
    j["spectrum_k"] = spectrum_json(big);
    out << j.dump() << '\n';
  }
  return all ? kExitOk : kExitViolations;
}

int cmd_pairing(const Options& o, std::ostream& out) {
  const int k = o.k == 0 ? 2 : o.k;
  bool all = true;
  for (const auto& [id, g] : input_graphs(o)) {
    const PairingResult p = pairing_decomposition(g, k);
    const IntegerEigenvalueBound bound = integer_eigenvalue_bound(g, k);
    all = all && p.sums_match_johnson && bound.holds;
    ordered_json triples = ordered_json::array();
    for (const auto& t : p.triples) {
      triples.push_back({snap(t.lambda_graph), snap(t.lambda_complement), snap(t.lambda_johnson)});
    }
    ordered_json j;
    j["graph6"] = id;
    j["k"] = k;
    j["triples"] = triples;
    j["max_residual"] = round_sig12(p.max_residual);
    j["sums_match_johnson"] = p.sums_match_johnson;
    j["integer_bound"] = {{"bound", bound.bound}, {"count", bound.count}, {"holds", bound.holds}};
    out << j.dump() << '\n';
  }
  return all ? kExitOk : kExitViolations;
}

int cmd_alpha(const Options& o, std::ostream& out) {
  const double tol = o.tol > 0 ? o.tol : kDefaultConjectureTol;
  bool all = true;
  for (const auto& [id, g] : input_graphs(o)) {
    ordered_json j;
    j["graph6"] = id;
    j["n"] = g.order();
    const double alpha = algebraic_connectivity(g);
    j["alpha"] = round_sig12(alpha);
    if (o.k > 0) {
      const double token_alpha = algebraic_connectivity(token_graph(g, o.k).graph);
      j["k"] = o.k;
      j["alpha_token"] = round_sig12(token_alpha);
      j["difference"] = round_sig12(std::abs(token_alpha - alpha));
      all = all && std::abs(token_alpha - alpha) <= tol;
    }
    out << j.dump() << '\n';
  }
  return all ? kExitOk : kExitViolations;
}

ordered_json closed_json(const ClosedFormResult& r) {
  ordered_json groups = ordered_json::array();
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    ordered_json g{{"value", round_sig12(r.values[i])}};
    if (!r.multiplicities.empty()) g["multiplicity"] = r.multiplicities[i];
    groups.push_back(g);
  }
  return groups;
}

bool matches(const ClosedFormResult& r, const Spectrum& numeric) {
  std::vector<double> expanded;
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    expanded.insert(expanded.end(), static_cast<std::size_t>(r.multiplicities[i]), r.values[i]);
  }
  return spectra_equal(Spectrum::from_values(expanded, 1e-9), numeric, 1e-8);
}

std::pair<int, int> two_ints(const std::string& params) {
  char comma = 0;
  int a = 0;
  int b = 0;
  std::istringstream is(params);
  if (!(is >> a >> comma >> b) || comma != ',' || !is.eof()) {
    throw UsageError("expected two integers 'n,k', got '" + params + "'");
  }
  return {a, b};
}

int one_int(const std::string& params) {
  int a = 0;
  std::istringstream is(params);
  if (!(is >> a) || !is.eof()) throw UsageError("expected an integer, got '" + params + "'");
  return a;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  if (o.family.empty()) throw UsageError("closed-form needs --family");
  const auto colon = o.family.find(':');
  if (colon == std::string::npos) throw UsageError("closed-form family needs name:params");
  const std::string name = o.family.substr(0, colon);
  const std::string params = o.family.substr(colon + 1);

  ordered_json j;
  j["family"] = o.family;
  int code = kExitOk;
  auto report_check = [&](const ClosedFormResult& r, const std::function<Spectrum()>& numeric) {
    if (!o.check) return;
    const Spectrum s = numeric();
    const bool ok = matches(r, s);
    j["numeric"] = spectrum_json(s);
    j["numeric_match"] = ok;
    if (!ok) code = kExitViolations;
  };

  if (name == "johnson") {
    const auto [n, k] = two_ints(params);
    const auto r = closed_form_spectrum(closed_form::JohnsonLaplacian{n, k});
    j["kind"] = "laplacian";
    j["spectrum"] = closed_json(r);
    report_check(r, [&] { return spectrum_of(make_family({family::Johnson{n, k}})); });
  } else if (name == "odd") {
    const int k = one_int(params);
    const auto r = closed_form_spectrum(closed_form::OddAdjacency{k});
    j["kind"] = "adjacency";
    j["spectrum"] = closed_json(r);
    report_check(r, [&] { return adjacency_spectrum_of(make_family({family::Odd{k}})); });
  } else if (name == "double-odd" || name == "star-token") {
    const int k = one_int(params);
    const auto r = name == "double-odd" ? closed_form_spectrum(closed_form::DoubleOddLaplacian{k})
                                        : closed_form_spectrum(closed_form::StarTokenLaplacian{k});
    j["kind"] = "laplacian";
    j["spectrum"] = closed_json(r);
    report_check(r, [&] {
      return name == "star-token"
                 ? spectrum_of(token_graph(make_family({family::Star{2 * k}}), k).graph)
                 : spectrum_of(make_family({family::Double{std::make_shared<const GraphFamilySpec>(
                       GraphFamilySpec{family::Odd{k}})}}));
    });
  } else if (name == "double") {
    const auto inner = std::make_shared<const GraphFamilySpec>(parse_family(params));
    const auto r =
        closed_form_spectrum(closed_form::DoubleOf{adjacency_spectrum_of(make_family(*inner))});
    j["kind"] = "adjacency";
    j["spectrum"] = closed_json(r);
    report_check(r, [&] { return adjacency_spectrum_of(make_family({family::Double{inner}})); });
  } else if (name == "doubled-johnson") {
    const auto [n, k] = two_ints(params);
    const auto cmp = compare_doubled_johnson(n, k);
    j["kind"] = "laplacian-values";
    j["listed_values"] = cmp.listed;
    j["numeric"] = spectrum_json(cmp.numeric);
    j["diverges"] = cmp.diverges();
    ordered_json unlisted = ordered_json::array();
    for (double v : cmp.unlisted) unlisted.push_back(round_sig12(v));
    j["unlisted_numeric_values"] = unlisted;
    j["absent_listed_values"] = cmp.absent;
  } else {
    throw UsageError("unknown closed-form family '" + name + "'");
  }
  out << j.dump() << '\n';
  return code;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream& err, bool identities) {
  ScanOptions so;
  so.k = o.k == 0 ? 2 : o.k;
  so.h = o.h;
  so.conjecture_tol = o.tol > 0 ? o.tol : kDefaultConjectureTol;
  so.jobs = o.jobs > 0 ? o.jobs : default_jobs();
  so.corpus = corpus_name(o);
  const auto records = input_records(o);
  const auto start = std::chrono::steady_clock::now();
  const ScanReport report = identities ? run_identity_suite(records, so) : scan_conjecture(records, so);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_report_jsonl(report, out);
  err << report.mode << ": " << report.summary.graphs_scanned << " graphs, "
      << report.summary.violations.size() << " violations, " << seconds << " s\n";
  return report.summary.violations.empty() ? kExitOk : kExitViolations;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.order < 1) throw UsageError("enumerate needs --n >= 1");
  const auto graphs = o.connected ? connected_nonisomorphic_graphs(o.order) : nonisomorphic_graphs(o.order);
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
  return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplacian spectra of token graphs", "tokenlap"};
  // "-h" would collide with the --h level option.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph6", o.graph6, "graph6 record");
    sub->add_option("--file", o.file, "file of graph6 records, one per line");
    sub->add_option("--family", o.family, "named family, e.g. path:4, johnson:5,2");
    sub->add_option("--out", o.out, "write output to this file");
  };

  auto* build = app.add_subcommand("build", "emit F_k(G) as graph6 with a vertex legend");
  add_input(build);
  build->add_option("--k", o.k, "token count")->check(CLI::PositiveNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum of G or F_k(G) as JSON");
  add_input(spectrum);
  spectrum->add_option("--k", o.k, "token count (default 1)")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "exact identity suite at levels (h, k)");
  add_input(verify);
  verify->add_option("--h", o.h, "lower level (default 1)")->check(CLI::PositiveNumber);
  verify->add_option("--k", o.k, "upper level (default 2)")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "worker threads (default $TOKENLAP_JOBS or 1)");

  auto* contain = app.add_subcommand("contain", "check spec F_h(G) within spec F_k(G)");
  add_input(contain);
  contain->add_option("--h", o.h, "lower level (default 1)")->check(CLI::PositiveNumber);
  contain->add_option("--k", o.k, "upper level (default 2)")->check(CLI::PositiveNumber);
  contain->add_option("--tol", o.tol, "eigenvalue matching tolerance (default 1e-7)");

  auto* pairing = app.add_subcommand("pairing", "complement pairing against J(n,k)");
  add_input(pairing);
  pairing->add_option("--k", o.k, "token count (default 2)")->check(CLI::PositiveNumber);

  auto* closed = app.add_subcommand("closed-form", "closed-form spectra of named families");
  closed->add_option("--family", o.family,
                     "johnson:n,k | odd:k | double-odd:k | star-token:k | doubled-johnson:n,k | "
                     "double:<family>")
      ->required();
  closed->add_option("--out", o.out, "write output to this file");
  closed->add_flag("--check", o.check, "compare against a numeric eigensolve");

  auto* alpha = app.add_subcommand("alpha", "algebraic connectivity of G (and F_k(G) with --k)");
  add_input(alpha);
  alpha->add_option("--k", o.k, "token count")->check(CLI::PositiveNumber);
  alpha->add_option("--tol", o.tol, "allowed |alpha(F_k) - alpha(G)| (default 1e-7)");

  auto* scan = app.add_subcommand("scan", "scan a corpus for alpha(F_k(G)) = alpha(G)");
  add_input(scan);
  scan->add_option("--k", o.k, "token count (default 2)")->check(CLI::PositiveNumber);
  scan->add_option("--tol", o.tol, "conjecture tolerance (default 1e-7)");
  scan->add_option("--jobs", o.jobs, "worker threads (default $TOKENLAP_JOBS or 1)");

  auto* enumerate = app.add_subcommand("enumerate", "graph6 of all graphs of order n up to isomorphism");
  enumerate->add_option("--n", o.order, "order (1..8)")->required();
  enumerate->add_flag("--connected", o.connected, "connected graphs only");
  enumerate->add_option("--out", o.out, "write output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file_out.open(o.out);
    if (!file_out) {
      err << "error: cannot write " << o.out << "\n";
      return kExitUsage;
    }
    sink = &file_out;
  }

  try {
    if (build->parsed()) return cmd_build(o, *sink);
    if (spectrum->parsed()) return cmd_spectrum(o, *sink);
    if (verify->parsed()) return cmd_report(o, *sink, err, true);
    if (contain->parsed()) return cmd_contain(o, *sink);
    if (pairing->parsed()) return cmd_pairing(o, *sink);
    if (closed->parsed()) return cmd_closed_form(o, *sink);
    if (alpha->parsed()) return cmd_alpha(o, *sink);
    if (scan->parsed()) return cmd_report(o, *sink, err, false);
    if (enumerate->parsed()) return cmd_enumerate(o, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolations;
  }
  return kExitUsage;
}

}  // namespace tokenlap
