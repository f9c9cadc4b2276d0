// Command-line front end: word invariants of free groups backed by exact
// rational arithmetic, plus a regression driver binding the independent
// computation routes together.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordrank/errors.hpp"
#include "wordrank/measures.hpp"
#include "wordrank/ranks.hpp"
#include "wordrank/spm.hpp"
#include "wordrank/whitehead.hpp"

using json = nlohmann::json;
using namespace wordrank;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kSchemaVersion = 1;

struct GlobalOpts {
  std::string format = "text";
  int threads = 2;
  int max_degree = 4;
  int max_vertices = 12;
  long max_states = 50'000'000;
  int subset_cap = 22;
  std::string emit_lp;
  std::string emit_graph;
  std::string emit_whitehead;
  bool witness = false;
};

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoi(v) : fallback;
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  return v ? std::atol(v) : fallback;
}

std::string letter_str(int l) {
  int i = std::abs(l);
  return std::string(1, l > 0 ? static_cast<char>('a' + i - 1) : static_cast<char>('A' + i - 1));
}

json graph_json(const LabeledGraph& g) {
  json edges = json::array();
  for (int k = 0; k < g.geometric_count(); ++k)
    edges.push_back({{"from", g.origin[2 * k]},
                     {"to", g.origin[2 * k + 1]},
                     {"label", letter_str(g.label[2 * k])}});
  return {{"vertices", g.num_vertices}, {"edges", edges}};
}

json witness_json(const WitnessDiagram& d) {
  return {{"gamma", graph_json(d.gamma)},
          {"cover", graph_json(d.b.source)},
          {"vertex_map", d.b.vertex_map},
          {"edge_map", d.b.edge_map},
          {"nu", d.nu},
          {"degree", d.degree},
          {"ratio", d.ratio.str()}};
}

json search_diagram_json(const SearchDiagram& d) {
  return {{"gamma", graph_json(d.quotient.graph)},
          {"cover", graph_json(d.cover.graph)},
          {"vertex_map", d.quotient.map.vertex_map},
          {"nu", d.nu},
          {"degree", d.degree},
          {"ratio", d.ratio.str()}};
}

void emit_report(const GlobalOpts& g, json report) {
  report["schema"] = kSchemaVersion;
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (g.format == "csv") {
    std::string header, row;
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) continue;
      header += (header.empty() ? "" : ",") + it.key();
      std::string cell =
          it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
      row += (row.empty() ? "" : ",") + cell;
    }
    std::cout << header << "\n" << row << "\n";
    return;
  }
  std::cout << report["invariant"].get<std::string>() << "(" << report["word"].get<std::string>();
  if (report.contains("m")) std::cout << ", m=" << report["m"].get<int>();
  std::cout << ") = " << report["value"].get<std::string>() << "\n";
  if (report.contains("pieces"))
    std::cout << "  pieces: " << report["pieces"].get<int>() << ", lp: "
              << report["lp"]["vars"].get<int>() << " vars x "
              << report["lp"]["rows"].get<int>() << " rows\n";
  if (report.contains("shortcut") && !report["shortcut"].get<std::string>().empty())
    std::cout << "  shortcut: " << report["shortcut"].get<std::string>() << "\n";
  if (report.contains("anchors_agree"))
    std::cout << "  anchors agree: " << (report["anchors_agree"].get<bool>() ? "yes" : "NO")
              << "\n";
  if (report.contains("witness_degree"))
    std::cout << "  witness: degree " << report["witness_degree"].get<int>() << "\n";
  if (report.contains("census"))
    for (const auto& row : report["census"])
      std::cout << "  degree " << row["degree"].get<int>() << " ratio "
                << row["ratio"].get<std::string>() << ": " << row["count"].get<long>()
                << " diagram(s)\n";
  std::cout << "  time: " << report["timing_ms"].get<double>() << " ms\n";
}

int run_pi(const GlobalOpts& g, const std::string& word) {
  auto t0 = Clock::now();
  Word w = parse_word(word);
  QuotientLimits limits{g.max_vertices};
  RankResult r = primitivity_rank(w, limits);
  json report{{"invariant", "pi"},
              {"word", render_word(w)},
              {"value", r.value_str()},
              {"caps", {{"max_vertices", g.max_vertices}}},
              {"timing_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  if (r.witness && g.witness) report["witness"] = graph_json(r.witness->graph);
  emit_report(g, report);
  return 0;
}

int run_pim(const GlobalOpts& g, const std::string& word, int m) {
  auto t0 = Clock::now();
  Word w = parse_word(word);
  QuotientLimits limits{g.max_vertices};
  RankResult r = mod_m_rank(w, m, limits);
  json report{{"invariant", "pim"},
              {"word", render_word(w)},
              {"m", m},
              {"value", r.value_str()},
              {"caps", {{"max_vertices", g.max_vertices}}},
              {"timing_ms", std::chrono::duration<double, std::milli>(Clock::now() - t0).count()}};
  if (r.witness && g.witness) report["witness"] = graph_json(r.witness->graph);
  emit_report(g, report);
  return 0;
}

int run_spm(const GlobalOpts& g, const std::string& word, int m, bool all_pieces,
            bool anchors_check) {
  auto t0 = Clock::now();
  Word w = parse_word(word);
  SpmOptions opt;
  opt.connected_only = !all_pieces;
  opt.witness = g.witness;
  opt.subset_cap = g.subset_cap;
  SpmResult r = stable_mod_m_rank(w, m, opt);
  json report{{"invariant", "spm"},
              {"word", render_word(w)},
              {"m", m},
              {"value", r.value_str()},
              {"pieces", r.piece_count},
              {"lp", {{"vars", r.lp_vars}, {"rows", r.lp_rows}}},
              {"shortcut", r.shortcut},
              {"caps", {{"subset_cap", g.subset_cap}}}};
  if (anchors_check && !w.empty()) {
    Word core = cyclic_reduce(w).core;
    bool all_equal = true;
    for (int anchor = 0; anchor < core.length(); ++anchor) {
      SpmOptions alt = opt;
      alt.witness = false;
      alt.anchor = anchor;
      SpmResult rr = stable_mod_m_rank(w, m, alt);
      if (rr.infinite != r.infinite || (!r.infinite && rr.value != r.value)) all_equal = false;
    }
    report["anchors_agree"] = all_equal;
  }
  if (r.witness) {
    report["witness"] = witness_json(*r.witness);
    report["witness_degree"] = r.witness->degree;
  }
  if (!g.emit_lp.empty() && r.lp) {
    std::ofstream out(g.emit_lp);
    out << lp_to_text(*r.lp);
  }
  if (!g.emit_whitehead.empty() && !w.empty()) {
    Word core = cyclic_reduce(w).core;
    DecoratedWhitehead dw = decorated_whitehead(core);
    json wh{{"wh_vertices", json::array()}, {"edges", json::array()}};
    for (int l : dw.wh_letters) wh["wh_vertices"].push_back(letter_str(l));
    for (int i = 0; i < dw.length; ++i)
      wh["edges"].push_back(
          {{"decoration", i}, {"tail", letter_str(dw.tail[i])}, {"head", letter_str(dw.head[i])}});
    std::ofstream out(g.emit_whitehead);
    out << wh.dump(2) << "\n";
  }
  report["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit_report(g, report);
  return 0;
}

json census_json(const DiagramSearchResult& r) {
  json rows = json::array();
  for (const auto& [key, count] : r.census)
    rows.push_back({{"degree", key.first}, {"ratio", key.second.str()}, {"count", count}});
  return rows;
}

int run_search_cmd(const GlobalOpts& g, const std::string& word, int m, bool sp_mode,
                   bool connected_only) {
  auto t0 = Clock::now();
  Word w = parse_word(word);
  SearchLimits limits;
  limits.max_degree = g.max_degree;
  limits.max_states = g.max_states;
  DiagramSearchResult r = sp_mode || m == 1 ? bounded_sp_search(w, limits, connected_only)
                                            : bounded_spm_search(w, m, limits);
  json report{{"invariant", sp_mode || m == 1 ? "sp-bound" : "spm-bound"},
              {"word", render_word(w)},
              {"value", r.value_str()},
              {"states", r.states_visited},
              {"census", census_json(r)},
              {"caps", {{"max_degree", g.max_degree}, {"max_states", g.max_states}}}};
  if (!sp_mode) report["m"] = m;
  json timings = json::object();
  for (const auto& [d, sec] : r.per_degree_seconds) timings[std::to_string(d)] = sec;
  report["per_degree_seconds"] = timings;
  if (r.best_diagram && g.witness) report["witness"] = search_diagram_json(*r.best_diagram);
  if (!g.emit_graph.empty() && r.best_diagram) {
    std::ofstream out(g.emit_graph);
    out << graph_json(r.best_diagram->quotient.graph).dump(2) << "\n";
  }
  report["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit_report(g, report);
  return 0;
}

Partition parse_mu(const std::string& text) {
  Partition mu;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) mu.push_back(std::stoi(part));
  if (!is_valid_partition(mu)) throw std::invalid_argument("--mu: not weakly decreasing");
  return mu;
}

int run_measure(const GlobalOpts& g, const std::string& word, const std::string& family, int m,
                const std::string& mu_text, const std::string& range) {
  auto t0 = Clock::now();
  Word w = parse_word(word);
  Partition mu = parse_mu(mu_text);
  int lo = 0, hi = 0;
  if (sscanf(range.c_str(), "%d..%d", &lo, &hi) != 2 || lo > hi)
    throw std::invalid_argument("--n-range: expected LO..HI");

  std::vector<BigRational> values;
  std::vector<long> dims;
  std::vector<int> ns;
  for (int N = lo; N <= hi; ++N) {
    BigRational v = family == "sn" ? expect_sn(w, N, mu) : expect_wreath_phi(w, N, m, mu);
    values.push_back(v);
    // S_N stable dimension ~ N^{|mu|}; for the wreath family the stable
    // dimension has the same leading order, so the same abscissa serves the
    // log-log fit (shifted to keep the padding legal).
    dims.push_back(stable_char_dimension(mu, N + (family == "sn" ? 0 : partition_sum(mu))));
    ns.push_back(N);
  }
  json series = json::array();
  for (size_t i = 0; i < values.size(); ++i)
    series.push_back({{"N", ns[i]}, {"value", values[i].str()}, {"dim", dims[i]}});
  json report{{"invariant", "measure"}, {"word", render_word(w)}, {"family", family},
              {"m", m},                 {"mu", mu},               {"series", series}};
  if (values.size() >= 3) {
    try {
      BetaFit fit = beta_fit(values, dims);
      report["beta_diagnostic"] =
          fit.all_zero ? json{{"all_zero", true}}
                       : json{{"all_zero", false},
                              {"beta", fit.beta},
                              {"max_residual", fit.max_residual},
                              {"note", "least-squares slope, not a liminf"}};
    } catch (const std::invalid_argument& e) {
      report["beta_diagnostic"] = {{"error", e.what()}};
    }
  }
  report["value"] = values.empty() ? "" : values.back().str();
  report["timing_ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  if (g.format == "csv") {
    std::cout << "N,value,dim\n";
    for (size_t i = 0; i < values.size(); ++i)
      std::cout << ns[i] << "," << values[i].str() << "," << dims[i] << "\n";
    return 0;
  }
  if (g.format == "json") {
    report["schema"] = kSchemaVersion;
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  for (size_t i = 0; i < values.size(); ++i)
    std::cout << "N=" << ns[i] << "  E = " << values[i].str() << "  (dim " << dims[i] << ")\n";
  if (report.contains("beta_diagnostic") && !report["beta_diagnostic"].contains("error")) {
    if (report["beta_diagnostic"]["all_zero"].get<bool>())
      std::cout << "beta diagnostic: series identically zero (consistent with beta = infinity)\n";
    else
      std::cout << "beta diagnostic: " << report["beta_diagnostic"]["beta"].get<double>()
                << " (max log-residual "
                << report["beta_diagnostic"]["max_residual"].get<double>() << ")\n";
  }
  return 0;
}

// ---- verify ----

struct Check {
  std::string line;
  std::string command;
  std::vector<std::string> args;
  std::string expected;
  int lineno = 0;
};

const char* kBuiltinCorpus = R"(# built-in regression corpus: <command> <args> => <expected>
pi a => infinity
pi aa => 1
pi aaa => 1
pi abAB => 2
pi aBcbbaCac => 3
pim aa -m 2 => 1
pim aa -m 3 => infinity
pim abAB -m 0 => 2
pim aaa -m 3 => 1
spm aaabAB -m 3 => 1
spm aBcbbaCac -m 2 => 9/4
spm aBcbbaCac -m 3 => infinity
spm aBcbbaCac -m 0 => infinity
spm aa -m 0 => infinity
spm aa -m 2 => 0
spm aaa -m 2 => 0
spm aaa -m 3 => 0
spm aaa -m 4 => infinity
spm abAB -m 0 => 1
spm abAB -m 2 => 1
spm abAB -m 3 => 1
spm aabb -m 2 => 1
sp-bound abAB -D 1 => 1
sp-bound aa -D 2 => 0
sp-bound a -D 2 => infinity
spm-bound aaa -m 2 -D 2 => 0
spm-bound abAB -m 2 -D 1 => 1
)";

std::string eval_check(const Check& c, const GlobalOpts& g) {
  auto get_flag = [&](const std::string& name, int fallback) {
    for (size_t i = 0; i + 1 < c.args.size(); ++i)
      if (c.args[i] == name) return std::stoi(c.args[i + 1]);
    return fallback;
  };
  if (c.args.empty()) throw std::invalid_argument("missing word argument");
  Word w = parse_word(c.args[0]);
  if (c.command == "pi") return primitivity_rank(w, {g.max_vertices}).value_str();
  if (c.command == "pim") return mod_m_rank(w, get_flag("-m", 0), {g.max_vertices}).value_str();
  if (c.command == "spm") {
    SpmOptions opt;
    opt.subset_cap = g.subset_cap;
    return stable_mod_m_rank(w, get_flag("-m", 0), opt).value_str();
  }
  SearchLimits limits;
  limits.max_degree = get_flag("-D", g.max_degree);
  limits.max_states = g.max_states;
  if (c.command == "sp-bound") return bounded_sp_search(w, limits).value_str();
  if (c.command == "spm-bound")
    return bounded_spm_search(w, get_flag("-m", 0), limits).value_str();
  throw std::invalid_argument("unknown check command '" + c.command + "'");
}

int run_verify(const GlobalOpts& g, const std::string& corpus_path, const std::string& only) {
  std::string text;
  if (corpus_path.empty()) {
    text = kBuiltinCorpus;
  } else {
    std::ifstream in(corpus_path);
    if (!in) {
      std::cerr << "verify: cannot open corpus '" << corpus_path << "'\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  std::vector<Check> checks;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::string stripped = line.substr(0, line.find('#'));
    if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t arrow = stripped.find("=>");
    if (arrow == std::string::npos) {
      std::cerr << "verify: line " << lineno << ": missing '=>'\n";
      return 2;
    }
    Check c;
    c.lineno = lineno;
    c.line = stripped;
    std::istringstream head(stripped.substr(0, arrow));
    std::string tok;
    head >> c.command;
    while (head >> tok) c.args.push_back(tok);
    std::istringstream tail(stripped.substr(arrow + 2));
    tail >> c.expected;
    if (c.command.empty() || c.expected.empty()) {
      std::cerr << "verify: line " << lineno << ": malformed check\n";
      return 2;
    }
    if (!only.empty() && c.command.rfind(only, 0) != 0) continue;
    checks.push_back(std::move(c));
  }

  std::atomic<size_t> next{0};
  std::mutex out_mutex;
  std::atomic<int> failures{0};
  json results = json::array();
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      const Check& c = checks[i];
      std::string got;
      bool ok;
      try {
        got = eval_check(c, g);
        ok = got == c.expected;
      } catch (const std::exception& e) {
        got = std::string("error: ") + e.what();
        ok = false;
      }
      std::lock_guard<std::mutex> lock(out_mutex);
      results.push_back({{"line", c.lineno}, {"check", c.line}, {"expected", c.expected},
                         {"got", got},       {"pass", ok}});
      if (!ok) ++failures;
      if (g.format != "json")
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.command << " "
                  << (c.args.empty() ? "" : c.args[0]) << " => " << got
                  << (ok ? "" : " (expected " + c.expected + ")") << "\n";
    }
  };
  int nthreads = std::max(1, g.threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (g.format == "json") {
    json summary{{"schema", kSchemaVersion},
                 {"total", checks.size()},
                 {"failures", failures.load()},
                 {"results", results}};
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << checks.size() - failures.load() << "/" << checks.size() << " checks passed\n";
  }
  return failures.load() == 0 ? 0 : 1;
}

int run_table(const GlobalOpts& g) {
  struct Row {
    std::string word;
    std::string note;
  };
  std::vector<Row> rows = {{"a", "primitive"}, {"aa", "a^2"},      {"aaa", "a^3"},
                           {"aaaa", "a^4"},    {"abAB", "[a,b]"},  {"aabb", "a^2 b^2"},
                           {"aBcbbaCac", "rank 3"}};
  std::cout << "word        pi        spm(2)    spm(3)    spm(0)\n";
  for (const auto& row : rows) {
    Word w = parse_word(row.word);
    std::string pi = primitivity_rank(w, {g.max_vertices}).value_str();
    SpmOptions opt;
    auto s2 = stable_mod_m_rank(w, 2, opt).value_str();
    auto s3 = stable_mod_m_rank(w, 3, opt).value_str();
    auto s0 = stable_mod_m_rank(w, 0, opt).value_str();
    printf("%-10s  %-8s  %-8s  %-8s  %-8s  # %s\n", row.word.c_str(), pi.c_str(), s2.c_str(),
           s3.c_str(), s0.c_str(), row.note.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word invariants of free groups: primitivity ranks, stable mod-m ranks, and "
               "exact word-measure expectations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  g.max_degree = env_int("WORDRANK_MAX_DEGREE", g.max_degree);
  g.max_vertices = env_int("WORDRANK_MAX_VERTICES", g.max_vertices);
  g.max_states = env_long("WORDRANK_MAX_STATES", g.max_states);
  g.subset_cap = env_int("WORDRANK_SUBSET_CAP", g.subset_cap);
  g.threads = env_int("WORDRANK_THREADS", g.threads);

  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", g.threads, "worker threads for verify");
  app.add_option("--max-degree", g.max_degree, "degree cap for bounded searches");
  app.add_option("--max-vertices", g.max_vertices, "vertex cap for quotient enumeration");
  app.add_option("--max-states", g.max_states, "state cap per cover search");
  app.add_option("--subset-cap", g.subset_cap, "piece enumeration length cap");
  app.add_option("--emit-lp", g.emit_lp, "write the assembled LP to a file");
  app.add_option("--emit-graph", g.emit_graph, "write the best diagram's target graph as JSON");
  app.add_option("--emit-whitehead", g.emit_whitehead,
                 "write the decorated Whitehead graph as JSON");
  app.add_flag("--witness", g.witness, "include witness structures in reports");

  std::string word, family = "sn", mu_text = "1", range = "2..5", corpus, only;
  int m = 2;
  bool all_pieces = false, anchors_check = false, connected_only = false;

  CLI::App* pi = app.add_subcommand("pi", "primitivity rank");
  pi->add_option("word", word)->required();

  CLI::App* pim = app.add_subcommand("pim", "mod-m primitivity rank");
  pim->add_option("word", word)->required();
  pim->add_option("-m", m, "modulus (0 = integral)")->required();

  CLI::App* spm = app.add_subcommand("spm", "stable mod-m primitivity rank (exact LP)");
  spm->add_option("word", word)->required();
  spm->add_option("-m", m, "modulus (0 = integral, 1 unsupported)")->required();
  spm->add_flag("--all-pieces", all_pieces, "keep disconnected pieces in the LP");
  spm->add_flag("--anchors-check", anchors_check, "re-solve with every degree anchor");

  CLI::App* spb = app.add_subcommand("sp-bound", "bounded-degree stable primitivity rank bound");
  spb->add_option("word", word)->required();
  spb->add_option("-D", g.max_degree, "max degree");
  spb->add_flag("--connected-only", connected_only, "single-cycle covers only");

  CLI::App* diagrams = app.add_subcommand("diagrams", "bounded diagram census for spm");
  diagrams->add_option("word", word)->required();
  diagrams->add_option("-m", m, "modulus")->required();
  diagrams->add_option("-D", g.max_degree, "max degree");

  CLI::App* measure = app.add_subcommand("measure", "exact word-measure expectations");
  measure->add_option("word", word)->required();
  measure->add_option("--family", family)->check(CLI::IsMember({"sn", "wreath"}));
  measure->add_option("-m", m, "wreath modulus");
  measure->add_option("--mu", mu_text, "partition, comma separated");
  measure->add_option("--n-range", range, "N range LO..HI");

  CLI::App* verify = app.add_subcommand("verify", "run the regression corpus");
  verify->add_option("corpus", corpus, "corpus file (built-in when omitted)");
  verify->add_option("--only", only, "restrict to checks whose command starts with this");

  CLI::App* table = app.add_subcommand("table", "selected invariant values side by side");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pi->parsed()) return run_pi(g, word);
    if (pim->parsed()) return run_pim(g, word, m);
    if (spm->parsed()) return run_spm(g, word, m, all_pieces, anchors_check);
    if (spb->parsed()) return run_search_cmd(g, word, 1, true, connected_only);
    if (diagrams->parsed()) return run_search_cmd(g, word, m, false, false);
    if (measure->parsed()) return run_measure(g, word, family, m, mu_text, range);
    if (verify->parsed()) return run_verify(g, corpus, only);
    if (table->parsed()) return run_table(g);
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
