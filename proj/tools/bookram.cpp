// bookram: book Ramsey number bounds, certificates, census and search.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookram/book_metrics.hpp"
#include "bookram/bounds.hpp"
#include "bookram/extract.hpp"
#include "bookram/graph.hpp"
#include "bookram/graph6.hpp"
#include "bookram/search.hpp"
#include "bookram/srg.hpp"

using json = nlohmann::json;
using namespace bookram;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_line(const std::string& path) {
  std::string line;
  if (path == "-") {
    if (!std::getline(std::cin, line)) throw InputError("no input on stdin");
    return line;
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  if (!std::getline(in, line)) throw InputError("empty file " + path);
  return line;
}

Graph load_graph(const std::string& path) {
  try {
    return from_graph6(read_line(path));
  } catch (const Graph6Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json params_json(const SrgParams& p) {
  return {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json cert_json(const LowerBoundCertificate& c) {
  json j{{"m", c.m},
         {"n", c.n},
         {"bound", c.bound},
         {"order", c.order},
         {"red_bs", c.red_bs ? json(*c.red_bs) : json(nullptr)},
         {"blue_bs", c.blue_bs ? json(*c.blue_bs) : json(nullptr)},
         {"graph6", c.graph6}};
  if (c.srg) j["srg_params"] = params_json(*c.srg);
  return j;
}

json interval_json(const BoundInterval& b) {
  json prov = json::array();
  for (const auto& p : b.provenance)
    prov.push_back({{"rule", p.rule},
                    {"value", p.value ? json(*p.value) : json(nullptr)},
                    {"applicable", p.applicable}});
  return {{"m", b.m},     {"n", b.n},         {"lower", b.lower},
          {"upper", b.upper}, {"exact", b.exact}, {"provenance", prov}};
}

json witness_json(const BookWitness& w) {
  return {{"color", w.color == Color::red ? "red" : "blue"},
          {"spine", {w.spine_u, w.spine_v}},
          {"pages", w.pages.to_vector()},
          {"page_count", w.page_count()}};
}

std::string data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("BOOKRAM_DATA")) return env;
  return "data";
}

// Corollary-table rows: (m, n, r, v, k, lambda, mu).
struct TableRow {
  long long m, n, r;
  SrgParams p;
};

const std::vector<TableRow> kCorollaryTable = {
    {2, 5, 16, {15, 6, 1, 3}},      {3, 5, 17, {16, 6, 2, 2}},
    {4, 6, 22, {21, 10, 3, 6}},     {7, 10, 36, {35, 16, 6, 8}},
    {11, 11, 46, {45, 22, 10, 11}}, {14, 17, 64, {63, 30, 13, 15}},
    {23, 26, 100, {99, 48, 22, 24}}, {22, 37, 120, {119, 54, 21, 27}},
    {29, 38, 136, {135, 64, 28, 32}}, {34, 37, 144, {143, 70, 33, 35}},
    {47, 50, 196, {195, 96, 46, 48}}, {46, 58, 210, {209, 100, 45, 50}},
    {56, 56, 226, {225, 112, 55, 56}}, {38, 82, 244, {243, 110, 37, 60}},
    {62, 65, 256, {255, 126, 61, 63}}, {69, 71, 281, {280, 135, 70, 60}},
};

int cmd_bounds(long long m, long long n, const std::vector<std::string>& cert_files,
               bool json_mode) {
  std::vector<LowerBoundCertificate> certs;
  for (const auto& f : cert_files) certs.push_back(certify(load_graph(f)));
  BoundInterval b = best_bounds(m, n, certs);
  if (json_mode) {
    std::cout << interval_json(b).dump() << "\n";
  } else {
    std::cout << "r(B_" << m << ", B_" << n << ") in [" << b.lower << ", " << b.upper
              << "]" << (b.exact ? "  (exact)" : "") << "\n";
    for (const auto& p : b.provenance) {
      std::cout << "  " << p.rule << ": ";
      if (p.value)
        std::cout << *p.value;
      else
        std::cout << "n/a";
      std::cout << (p.applicable ? "" : "  [not applicable]") << "\n";
    }
  }
  return kExitOk;
}

int cmd_bs(const std::string& file, bool use_complement, bool json_mode) {
  Graph g = load_graph(file);
  if (use_complement) g = g.complement();
  auto bs = book_size(g);
  if (json_mode)
    std::cout << json{{"order", g.order()}, {"bs", bs ? json(*bs) : json(nullptr)}}.dump()
              << "\n";
  else if (bs)
    std::cout << *bs << "\n";
  else
    std::cout << "absent (no edges)\n";
  return kExitOk;
}

int cmd_counts(const std::string& file, bool json_mode) {
  Graph g = load_graph(file);
  SubgraphCensus s = census(g);
  long long residual = s.c4 - (s.pair_sum / 2 - s.edge_sum + 3 * s.k4);
  if (json_mode) {
    std::cout << json{{"order", g.order()}, {"c4", s.c4},     {"k4", s.k4},
                      {"b2", s.b2},         {"h", s.h},        {"pair_sum", s.pair_sum},
                      {"edge_sum", s.edge_sum}, {"identity_residual", residual}}
                     .dump()
              << "\n";
  } else {
    std::cout << "c4=" << s.c4 << " k4=" << s.k4 << " b2=" << s.b2 << " h=" << s.h
              << " pair_sum=" << s.pair_sum << " edge_sum=" << s.edge_sum
              << " identity_residual=" << residual << "\n";
  }
  return kExitOk;
}

int cmd_srg_verify(const std::string& file, bool json_mode) {
  Graph g = load_graph(file);
  auto p = verify_srg(g);
  if (json_mode)
    std::cout << json{{"srg", p ? params_json(*p) : json(nullptr)}}.dump() << "\n";
  else if (p)
    std::cout << "(" << p->v << "," << p->k << "," << p->lambda << "," << p->mu << ")\n";
  else
    std::cout << "not strongly regular\n";
  return p ? kExitOk : kExitNegative;
}

int cmd_srg_paley(long long q, const std::string& out, bool json_mode) {
  Graph g = paley(q);
  std::string g6 = to_graph6(g);
  if (!out.empty()) {
    std::ofstream f(out);
    f << g6 << "\n";
  } else if (json_mode) {
    std::cout << json{{"q", q}, {"graph6", g6}}.dump() << "\n";
  } else {
    std::cout << g6 << "\n";
  }
  return kExitOk;
}

int cmd_srg_certify(const std::string& file, bool json_mode) {
  LowerBoundCertificate c = certify(load_graph(file));
  if (json_mode) {
    std::cout << cert_json(c).dump() << "\n";
  } else {
    std::cout << "r(B_" << c.m << ", B_" << c.n << ") >= " << c.bound
              << (c.degenerate ? "  [degenerate: an edgeless side]" : "") << "\n";
  }
  return kExitOk;
}

int cmd_search_arrows(int N, int m, int n, bool force, bool json_mode) {
  SearchReport r = arrows(N, m, n, force);
  bool yes = r.answer == Arrowing::arrows;
  if (json_mode) {
    json j{{"N", N},     {"m", m},
           {"n", n},     {"answer", yes ? "arrows" : "does-not-arrow"},
           {"nodes", r.nodes_explored}, {"elapsed_seconds", r.elapsed_seconds}};
    if (r.witness) j["red_graph6"] = to_graph6(r.witness->red);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (yes ? "arrows" : "does-not-arrow") << "  (" << r.nodes_explored
              << " nodes)\n";
    if (r.witness) std::cout << "witness red graph: " << to_graph6(r.witness->red) << "\n";
  }
  return yes ? kExitOk : kExitNegative;
}

int cmd_search_witness(int N, int m, int n, long long budget, std::uint64_t seed,
                       const std::string& out, bool json_mode) {
  auto w = find_witness(N, m, n, budget, seed);
  if (!w) {
    if (json_mode)
      std::cout << json{{"N", N}, {"m", m}, {"n", n}, {"found", false}}.dump() << "\n";
    else
      std::cout << "no witness found within budget\n";
    return kExitNegative;
  }
  json sidecar{{"N", N}, {"m", m}, {"n", n}, {"red_graph6", to_graph6(w->red)}};
  if (!out.empty()) {
    std::ofstream f(out);
    f << to_graph6(w->red) << "\n";
    std::ofstream fj(out + ".json");
    fj << sidecar.dump() << "\n";
  }
  if (json_mode)
    std::cout << sidecar.dump() << "\n";
  else
    std::cout << to_graph6(w->red) << "\n";
  return kExitOk;
}

int cmd_search_number(int m, int n, int max_order, bool force, bool json_mode) {
  RamseyNumberResult r = ramsey_number(m, n, max_order, force);
  if (json_mode) {
    json j{{"m", m}, {"n", n}};
    j["value"] = r.value ? json(*r.value) : json(nullptr);
    if (r.value && r.reports.size() >= 2)
      j["witness_red_graph6"] = to_graph6(r.reports[r.reports.size() - 2].witness->red);
    std::cout << j.dump() << "\n";
  } else if (r.value) {
    std::cout << "r(B_" << m << ", B_" << n << ") = " << *r.value << "\n";
  } else {
    std::cout << "undecided up to order " << max_order << "\n";
  }
  return r.value ? kExitOk : kExitNegative;
}

int cmd_extract(const std::string& file, int m, bool json_mode) {
  Coloring c;
  c.red = load_graph(file);
  c.order = c.red.order();
  ExtractionOutcome o = extract(c, m);
  json j;
  switch (o.result) {
    case ExtractionOutcome::Kind::red_book: j["result"] = "red_book"; break;
    case ExtractionOutcome::Kind::blue_book: j["result"] = "blue_book"; break;
    default:
      j["result"] = "hypothesis_failed";
      j["failed_step"] = o.failed_step;
  }
  if (o.witness) j["witness"] = witness_json(*o.witness);
  j["trace"] = trace_to_json(o.trace);
  if (json_mode) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << j["result"].get<std::string>();
    if (o.witness)
      std::cout << " with " << o.witness->page_count() << " pages on spine ("
                << o.witness->spine_u << "," << o.witness->spine_v << ")";
    if (!o.failed_step.empty()) std::cout << " at " << o.failed_step;
    std::cout << "\n" << j["trace"].dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_aes(const std::string& file, int r, bool json_mode) {
  Graph g = load_graph(file);
  AesTriple t = aes_check(g, r);
  if (json_mode)
    std::cout << json{{"no_kr", t.no_kr},
                      {"degree_above", t.degree_above},
                      {"chromatic_ge_r", t.chromatic_ge_r}}
                     .dump()
              << "\n";
  else
    std::cout << "(" << (t.no_kr ? "true" : "false") << ","
              << (t.degree_above ? "true" : "false") << ","
              << (t.chromatic_ge_r ? "true" : "false") << ")\n";
  return kExitOk;
}

int cmd_repro(const std::string& dir_flag, bool json_mode) {
  std::string dir = data_dir(dir_flag);
  bool all_ok = true;
  json rows = json::array();
  for (const auto& row : kCorollaryTable) {
    std::ostringstream name;
    name << dir << "/srg_" << row.p.v << "_" << row.p.k << "_" << row.p.lambda << "_"
         << row.p.mu << ".g6";
    json rec{{"m", row.m}, {"n", row.n}, {"r", row.r}, {"srg", params_json(row.p)}};
    std::ifstream probe(name.str());
    if (!probe) {
      BoundInterval b = best_bounds(row.m, row.n);
      rec["status"] = "certificate-missing";
      rec["upper"] = b.upper;
      rec["lower"] = b.lower;
      rows.push_back(rec);
      if (!json_mode)
        std::cout << "(" << row.m << "," << row.n << ")  r=" << row.r
                  << "  MISSING certificate (" << name.str() << "); upper bound "
                  << b.upper << "\n";
      continue;
    }
    Graph g = load_graph(name.str());
    auto p = verify_srg(g);
    bool ok = p && *p == row.p;
    LowerBoundCertificate cert = certify(g);
    BoundInterval b = best_bounds(row.m, row.n, {cert});
    ok = ok && b.exact && b.lower == row.r;
    rec["status"] = ok ? "pass" : "fail";
    rec["lower"] = b.lower;
    rec["upper"] = b.upper;
    rows.push_back(rec);
    all_ok = all_ok && ok;
    if (!json_mode)
      std::cout << "(" << row.m << "," << row.n << ")  r=" << row.r << "  ["
                << b.lower << "," << b.upper << "]  " << (ok ? "PASS" : "FAIL") << "\n";
  }
  if (json_mode) std::cout << json{{"rows", rows}, {"ok", all_ok}}.dump() << "\n";
  return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"book Ramsey number toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON document on stdout");
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for search/census partitioning");

  // bounds
  long long bm = 0, bn = 0;
  std::vector<std::string> cert_files;
  auto* bounds_cmd = app.add_subcommand("bounds", "best-known interval for r(B_m, B_n)");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("m", bm)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("n", bn)->required()->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--cert", cert_files, "graph6 witness file(s)");

  // bs
  std::string bs_file;
  bool bs_complement = false;
  auto* bs_cmd = app.add_subcommand("bs", "book size of a graph6 graph");
  bs_cmd->fallthrough();
  bs_cmd->add_option("file", bs_file)->required();
  bs_cmd->add_flag("--complement", bs_complement, "use the complement graph");

  // counts
  std::string counts_file;
  auto* counts_cmd = app.add_subcommand("counts", "induced subgraph census");
  counts_cmd->fallthrough();
  counts_cmd->add_option("file", counts_file)->required();

  // srg
  auto* srg_cmd = app.add_subcommand("srg", "strongly regular graph tools");
  srg_cmd->fallthrough();
  srg_cmd->require_subcommand(1);
  std::string srg_file, paley_out;
  long long paley_q = 0;
  auto* srg_verify_cmd = srg_cmd->add_subcommand("verify", "verify SRG parameters");
  srg_verify_cmd->fallthrough();
  srg_verify_cmd->add_option("file", srg_file)->required();
  auto* srg_paley_cmd = srg_cmd->add_subcommand("paley", "construct a Paley graph");
  srg_paley_cmd->fallthrough();
  srg_paley_cmd->add_option("q", paley_q)->required()->check(CLI::PositiveNumber);
  srg_paley_cmd->add_option("-o,--output", paley_out, "write graph6 to file");
  std::string certify_file;
  auto* srg_certify_cmd = srg_cmd->add_subcommand("certify", "lower-bound certificate");
  srg_certify_cmd->fallthrough();
  srg_certify_cmd->add_option("file", certify_file)->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "exhaustive / stochastic search");
  search_cmd->fallthrough();
  search_cmd->require_subcommand(1);
  int sN = 0, sm = 0, sn = 0, max_order = kDefaultSearchCap;
  bool force = false;
  long long budget = 1000000;
  std::uint64_t seed = 0;
  std::string witness_out;
  auto* arrows_cmd = search_cmd->add_subcommand("arrows", "does K_N arrow (B_m, B_n)?");
  arrows_cmd->fallthrough();
  arrows_cmd->add_option("N", sN)->required();
  arrows_cmd->add_option("m", sm)->required()->check(CLI::PositiveNumber);
  arrows_cmd->add_option("n", sn)->required()->check(CLI::PositiveNumber);
  arrows_cmd->add_flag("--force", force, "override the feasibility cap");
  auto* witness_cmd = search_cmd->add_subcommand("witness", "anneal for a good coloring");
  witness_cmd->fallthrough();
  witness_cmd->add_option("N", sN)->required();
  witness_cmd->add_option("m", sm)->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("n", sn)->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("--budget", budget);
  witness_cmd->add_option("--seed", seed);
  witness_cmd->add_option("-o,--output", witness_out, "write red graph6 + JSON sidecar");
  auto* number_cmd = search_cmd->add_subcommand("number", "exact small Ramsey number");
  number_cmd->fallthrough();
  number_cmd->add_option("m", sm)->required()->check(CLI::PositiveNumber);
  number_cmd->add_option("n", sn)->required()->check(CLI::PositiveNumber);
  number_cmd->add_option("--max-order", max_order);
  number_cmd->add_flag("--force", force, "override the feasibility cap");

  // extract
  std::string extract_file;
  int extract_m = 1;
  auto* extract_cmd = app.add_subcommand("extract", "run the book-extraction argument");
  extract_cmd->fallthrough();
  extract_cmd->add_option("file", extract_file, "red graph in graph6")->required();
  extract_cmd->add_option("-m", extract_m)->required()->check(CLI::PositiveNumber);

  // aes
  std::string aes_file;
  int aes_r = 3;
  auto* aes_cmd = app.add_subcommand("aes", "clique/degree/chromatic property triple");
  aes_cmd->fallthrough();
  aes_cmd->add_option("file", aes_file)->required();
  aes_cmd->add_option("-r", aes_r)->check(CLI::Range(3, 32));

  // repro
  std::string repro_dir;
  auto* repro_cmd = app.add_subcommand("repro", "verify the exact-value table");
  repro_cmd->fallthrough();
  repro_cmd->add_option("--data", repro_dir, "certificate directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds_cmd) return cmd_bounds(bm, bn, cert_files, json_mode);
    if (*bs_cmd) return cmd_bs(bs_file, bs_complement, json_mode);
    if (*counts_cmd) return cmd_counts(counts_file, json_mode);
    if (*srg_verify_cmd) return cmd_srg_verify(srg_file, json_mode);
    if (*srg_paley_cmd) return cmd_srg_paley(paley_q, paley_out, json_mode);
    if (*srg_certify_cmd) return cmd_srg_certify(certify_file, json_mode);
    if (*arrows_cmd) return cmd_search_arrows(sN, sm, sn, force, json_mode);
    if (*witness_cmd) return cmd_search_witness(sN, sm, sn, budget, seed, witness_out, json_mode);
    if (*number_cmd) return cmd_search_number(sm, sn, max_order, force, json_mode);
    if (*extract_cmd) return cmd_extract(extract_file, extract_m, json_mode);
    if (*aes_cmd) return cmd_aes(aes_file, aes_r, json_mode);
    if (*repro_cmd) return cmd_repro(repro_dir, json_mode);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
