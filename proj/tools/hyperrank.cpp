#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperrank/hypergraph.hpp"
#include "hyperrank/io.hpp"
#include "hyperrank/rankcmp.hpp"
#include "hyperrank/spectral.hpp"
#include "hyperrank/tensor.hpp"
#include "hyperrank/uniformize.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace hyperrank;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kData = 2, kConvergence = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputArgs {
  std::string input;
  std::string nverts;
  std::string simplices;
  std::string labels;
  bool lcc = false;
};

struct SolverArgs {
  double tol = 1e-10;
  std::uint64_t max_iter = 100000;
  std::uint64_t seed = 0;
  std::uint32_t lift_margin = 0;
};

struct Loaded {
  Hypergraph graph;
  IngestReport report;
  std::string nverts;
  std::string simplices;
  std::string labels;
};

// A prefix names <prefix>-nverts.txt etc; a directory d stands for d/<name of d>.
Loaded load(const InputArgs& a) {
  std::string nv = a.nverts;
  std::string sx = a.simplices;
  std::string lb = a.labels;
  if (!a.input.empty()) {
    fs::path prefix(a.input);
    if (fs::is_directory(prefix)) prefix /= prefix.filename().empty()
                                              ? prefix.parent_path().filename()
                                              : prefix.filename();
    const std::string base = prefix.string();
    if (nv.empty()) nv = base + "-nverts.txt";
    if (sx.empty()) sx = base + "-simplices.txt";
    if (lb.empty() && fs::exists(base + "-node-labels.txt")) lb = base + "-node-labels.txt";
  }
  if (nv.empty() || sx.empty()) throw UsageError("give --input PREFIX or both --nverts and --simplices");
  auto in = ingest_simplicial(nv, sx, lb.empty() ? std::nullopt : std::optional<std::string>(lb));
  print_report(std::cerr, in.report);
  Loaded out{std::move(in.graph), in.report, nv, sx, lb};
  if (a.lcc) {
    out.graph = largest_connected_component(out.graph);
    std::cerr << "largest connected component: " << out.graph.num_nodes() << " nodes, "
              << out.graph.num_edges() << " edges\n";
  }
  return out;
}

json report_json(const IngestReport& r) {
  return {{"simplices", r.simplices},
          {"singletons_dropped", r.singletons_dropped},
          {"simplices_with_repeats", r.simplices_with_repeats},
          {"duplicates_merged", r.duplicates_merged},
          {"isolated_dropped", r.isolated_dropped},
          {"nodes", r.nodes},
          {"edges", r.edges}};
}

CentralityOptions centrality_options(const SolverArgs& s) {
  CentralityOptions o;
  o.solver.tol = s.tol;
  o.solver.max_iter = s.max_iter;
  o.solver.seed = s.seed;
  o.lift_margin = s.lift_margin;
  return o;
}

void require_order(std::uint32_t v, const char* what) {
  if (v < 2) throw UsageError(std::string(what) + " must be given and >= 2");
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p);
  if (!os) throw DataError("cannot write " + p.string());
  return os;
}

struct CentralityArgs {
  InputArgs in;
  SolverArgs solver;
  std::string method;
  std::uint32_t order = 0;
  std::uint32_t p = 0;
  std::string norm = "z2";
  std::vector<std::uint32_t> aux;
  std::string out;
  std::string manifest;
};

int run_centrality(const CentralityArgs& a) {
  const Loaded data = load(a.in);
  Hypergraph h = data.graph;
  const CentralityOptions opts = centrality_options(a.solver);

  json man;
  man["tool"] = "hyperrank";
  man["version"] = kVersion;
  man["command"] = "centrality";
  man["method"] = a.method;

  std::vector<std::string> labels;
  std::vector<double> scores;
  if (a.method == "zec-uplift") {
    if (a.norm != "z1" && a.norm != "z2") throw UsageError("--norm must be z1 or z2");
    const ZNorm norm = a.norm == "z1" ? ZNorm::kZ1 : ZNorm::kZ2;
    if (!a.aux.empty()) {
      if (!h.is_uniform() || h.max_edge_size() != 2) throw DomainError("--aux needs a graph (2-uniform) input");
      std::uint32_t l = 0;
      for (auto k : a.aux) {
        if (k == 0) throw UsageError("--aux multiplicities must be positive");
        l += k;
      }
      h = multi_uplift(h, 2 + l, a.aux);
    }
    const ZEigenpair z = z_via_uplift(h, norm, opts.solver);
    const auto t = from_hypergraph(h);
    const auto check = verify_z_eigenpair(t, z.eigenvalue, z.eigenvector.values, norm, 1e-8);
    labels = z.labels;
    scores = z.eigenvector.values;
    man["order"] = h.max_edge_size();
    man["norm"] = a.norm;
    man["eigenvalue"] = z.eigenvalue;
    man["graph_eigenvalue"] = z.graph_eigenvalue;
    man["omega"] = z.omega;
    man["residual"] = check.residual;
    man["iterations"] = nullptr;
    json aux = json::array();
    for (std::size_t k = 0; k < z.aux.nodes.size(); ++k) {
      aux.push_back({{"label", h.label(z.aux.nodes[k])}, {"multiplicity", z.aux.mult[k]}});
    }
    man["aux"] = aux;
  } else {
    CentralityResult r;
    if (a.method == "ec") {
      const Hypergraph& g = h;
      if (g.num_edges() == 0 || !g.is_uniform() || g.max_edge_size() != 2) {
        throw DomainError("ec needs a graph (2-uniform) input");
      }
      r = eigenvector_centrality(from_hypergraph(g), opts.solver);
      r.labels = g.labels();
    } else if (a.method == "hec") {
      Hypergraph g = h;
      if (a.order) {
        require_order(a.order, "--order");
        g = largest_connected_component(order_slice(h, a.order));
      }
      r = hec(g, opts);
    } else if (a.method == "uhec") {
      require_order(a.order, "--order");
      if (a.order < h.max_edge_size()) throw UsageError("--order must be >= the largest edge size");
      r = uhec(h, a.order, opts);
    } else if (a.method == "uphec") {
      require_order(a.p, "--p");
      if (a.p > h.max_edge_size()) throw UsageError("--p must not exceed the largest edge size");
      r = uphec(h, a.p, opts);
    } else if (a.method == "alt") {
      require_order(a.order, "--order");
      r = alt_centrality(h, a.order, opts);
    } else {
      throw UsageError("unknown method: " + a.method);
    }
    labels = r.labels;
    scores = r.scores.values;
    man["order"] = r.order;
    man["tag"] = r.method;
    man["eigenvalue"] = r.eigenvalue;
    man["residual"] = r.residual;
    man["iterations"] = r.iterations;
    man["converged"] = r.converged;
  }

  fs::path out(a.out);
  {
    auto os = open_out(out);
    write_scores_csv(os, labels, scores);
  }
  man["parameters"] = {{"order", a.order},         {"p", a.p},
                       {"norm", a.norm},           {"aux", a.aux},
                       {"lcc", a.in.lcc},
                       {"lift_margin", a.solver.lift_margin},
                       {"tol", a.solver.tol},      {"max_iter", a.solver.max_iter},
                       {"shift", opts.solver.shift}, {"seed", a.solver.seed}};
  man["input"] = {{"nverts", data.nverts}, {"simplices", data.simplices}, {"labels", data.labels}};
  man["preprocessing"] = report_json(data.report);
  man["nodes_ranked"] = labels.size();
  man["output"] = out.string();
  fs::path mp = a.manifest.empty() ? fs::path(out).replace_extension(".json") : fs::path(a.manifest);
  auto ms = open_out(mp);
  ms << man.dump(2) << '\n';
  std::cerr << "wrote " << out.string() << " and " << mp.string() << '\n';
  return kOk;
}

// Manifest fields back into centrality arguments.
CentralityArgs from_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  try {
    CentralityArgs a;
    a.method = m.at("method").get<std::string>();
    const auto& p = m.at("parameters");
    a.order = p.at("order").get<std::uint32_t>();
    a.p = p.at("p").get<std::uint32_t>();
    a.norm = p.at("norm").get<std::string>();
    a.aux = p.at("aux").get<std::vector<std::uint32_t>>();
    a.in.lcc = p.at("lcc").get<bool>();
    a.solver.lift_margin = p.at("lift_margin").get<std::uint32_t>();
    a.solver.tol = p.at("tol").get<double>();
    a.solver.max_iter = p.at("max_iter").get<std::uint64_t>();
    a.solver.seed = p.at("seed").get<std::uint64_t>();
    const auto& i = m.at("input");
    a.in.nverts = i.at("nverts").get<std::string>();
    a.in.simplices = i.at("simplices").get<std::string>();
    a.in.labels = i.at("labels").get<std::string>();
    return a;
  } catch (const json::exception& e) {
    throw DataError(path + ": malformed manifest: " + e.what());
  }
}

struct MethodTag {
  char family = 0;
  std::uint32_t order = 0;
};

MethodTag parse_tag(const std::string& tag) {
  if (tag.size() < 2 || !std::strchr("uha", std::tolower(tag[0]))) {
    throw UsageError("unknown method tag: " + tag);
  }
  std::uint32_t k = 0;
  for (std::size_t i = 1; i < tag.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tag[i]))) throw UsageError("unknown method tag: " + tag);
    k = k * 10 + static_cast<std::uint32_t>(tag[i] - '0');
  }
  if (k < 2) throw UsageError("method order must be >= 2: " + tag);
  return {static_cast<char>(std::tolower(tag[0])), k};
}

std::string display_tag(const std::string& tag) {
  std::string s = tag;
  s[0] = static_cast<char>(std::toupper(s[0]));
  return s;
}

std::vector<std::size_t> default_ks(std::size_t n) {
  std::vector<std::size_t> ks;
  for (std::size_t decade = 10; decade < n; decade *= 10) {
    for (std::size_t f : {1, 2, 5}) {
      if (f * decade < n) ks.push_back(f * decade);
    }
  }
  ks.push_back(n);
  return ks;
}

struct CompareArgs {
  InputArgs in;
  SolverArgs solver;
  std::vector<std::string> methods;
  std::vector<std::size_t> ks;
  std::string out_dir;
};

int run_compare(const CompareArgs& a) {
  if (a.methods.size() < 2) throw UsageError("--methods needs at least two tags");
  std::vector<MethodTag> tags;
  for (const auto& t : a.methods) tags.push_back(parse_tag(t));

  const Loaded data = load(a.in);
  const Hypergraph& h = data.graph;
  const CentralityOptions opts = centrality_options(a.solver);

  std::map<std::string, CentralityResult> cache;
  RankingTable table;
  json runs = json::array();
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string key = display_tag(a.methods[i]);
    auto it = cache.find(key);
    if (it == cache.end()) {
      const MethodTag& t = tags[i];
      std::cerr << "running " << key << '\n';
      CentralityResult r;
      if (t.family == 'u') {
        r = uphec(h, t.order, opts);
      } else if (t.family == 'a') {
        r = alt_centrality(h, t.order, opts);
      } else {
        const Hypergraph slice = order_slice(h, t.order);
        if (slice.num_edges() == 0) throw DomainError("no hyperedges of size " + std::to_string(t.order));
        r = hec(largest_connected_component(slice), opts);
      }
      runs.push_back({{"tag", key},
                      {"method", r.method},
                      {"nodes", r.labels.size()},
                      {"eigenvalue", r.eigenvalue},
                      {"residual", r.residual},
                      {"iterations", r.iterations}});
      it = cache.emplace(key, std::move(r)).first;
    }
    table.add(key, it->second.labels, it->second.scores.values);
  }

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  const TauMatrix heat = pairwise_heatmap(table);
  {
    auto os = open_out(dir / "heatmap.csv");
    write_heatmap_csv(os, heat);
  }
  {
    auto os = open_out(dir / "scores.csv");
    os << "label";
    for (const auto& c : table.columns()) os << ',' << c.tag;
    os << '\n';
    for (std::size_t r = 0; r < table.size(); ++r) {
      os << table.labels()[r];
      for (const auto& c : table.columns()) os << ',' << format_score(c.scores[r]);
      os << '\n';
    }
  }

  const std::vector<std::size_t> ks = a.ks.empty() ? default_ks(table.size()) : a.ks;
  std::vector<TopKCurve> curves;
  std::map<std::pair<char, char>, std::vector<TopKCurve>> families;
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (i == j || cols[i].tag == cols[j].tag) continue;
      auto c = topk_curve(table, cols[i].tag, cols[j].tag, ks);
      families[{cols[i].tag[0], cols[j].tag[0]}].push_back(c);
      curves.push_back(std::move(c));
    }
  }
  std::vector<TopKCurve> filtered;
  for (const auto& [fam, group] : families) {
    for (auto& c : curve_filter(group)) filtered.push_back(std::move(c));
  }
  {
    auto os = open_out(dir / "curves.csv");
    write_curves_csv(os, curves);
  }
  {
    auto os = open_out(dir / "curves_filtered.csv");
    write_curves_csv(os, filtered);
  }

  json man;
  man["tool"] = "hyperrank";
  man["version"] = kVersion;
  man["command"] = "compare";
  man["methods"] = a.methods;
  man["ks"] = ks;
  man["parameters"] = {{"lcc", a.in.lcc},
                       {"lift_margin", a.solver.lift_margin},
                       {"tol", a.solver.tol},
                       {"max_iter", a.solver.max_iter},
                       {"seed", a.solver.seed}};
  man["input"] = {{"nverts", data.nverts}, {"simplices", data.simplices}, {"labels", data.labels}};
  man["preprocessing"] = report_json(data.report);
  man["runs"] = runs;
  auto ms = open_out(dir / "manifest.json");
  ms << man.dump(2) << '\n';
  std::cerr << "wrote results to " << dir.string() << '\n';
  return kOk;
}

int run_stats(const InputArgs& in, const std::string& out) {
  const Loaded data = load(in);
  const HypergraphStats s = stats(data.graph);
  if (out.empty()) {
    write_stats_csv(std::cout, s);
  } else {
    auto os = open_out(out);
    write_stats_csv(os, s);
  }
  return kOk;
}

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("-i,--input", in.input, "dataset prefix or directory (<prefix>-nverts.txt, ...)");
  cmd->add_option("--nverts", in.nverts, "simplex sizes file");
  cmd->add_option("--simplices", in.simplices, "concatenated simplex node ids file");
  cmd->add_option("--labels", in.labels, "node labels file (id<TAB>label)");
  cmd->add_flag("--lcc", in.lcc, "restrict to the largest connected component");
}

void add_solver_options(CLI::App* cmd, SolverArgs& s) {
  cmd->add_option("--tol", s.tol, "relative eigenvalue bracket tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", s.max_iter, "power iteration cap");
  cmd->add_option("--seed", s.seed, "random start seed (0 = uniform start)");
  cmd->add_option("--lift-margin", s.lift_margin, "extra uplift orders before solving");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvector-like centralities of non-uniform hypergraphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CentralityArgs cen;
  auto* c = app.add_subcommand("centrality", "rank nodes with one centrality measure");
  add_input_options(c, cen.in);
  add_solver_options(c, cen.solver);
  c->add_option("-m,--method", cen.method, "ec|hec|uhec|uphec|alt|zec-uplift")
      ->required()
      ->check(CLI::IsMember({"ec", "hec", "uhec", "uphec", "alt", "zec-uplift"}));
  c->add_option("--order", cen.order, "uniform order m");
  c->add_option("--p", cen.p, "UPHEC order p");
  c->add_option("--norm", cen.norm, "z1|z2 (zec-uplift)")->check(CLI::IsMember({"z1", "z2"}));
  c->add_option("--aux", cen.aux, "zec-uplift: multi-uplift a graph input with these multiplicities first")
      ->delimiter(',');
  c->add_option("-o,--out", cen.out, "scores CSV")->required();
  c->add_option("--manifest", cen.manifest, "manifest path (default: <out>.json)");

  std::string rerun_manifest;
  std::string rerun_out;
  auto* rr = app.add_subcommand("rerun", "repeat a centrality run from its manifest");
  rr->add_option("manifest", rerun_manifest, "manifest JSON")->required();
  rr->add_option("-o,--out", rerun_out, "scores CSV")->required();

  CompareArgs cmp;
  auto* cc = app.add_subcommand("compare", "Kendall tau comparison of several rankings");
  add_input_options(cc, cmp.in);
  add_solver_options(cc, cmp.solver);
  cc->add_option("--methods", cmp.methods, "tags: uN (UPHEC), hN (HEC of order-N slice), aN (alternative)")
      ->required()
      ->delimiter(',');
  cc->add_option("--ks", cmp.ks, "top-K sizes (ascending)")->delimiter(',');
  cc->add_option("--out-dir", cmp.out_dir, "output directory")->required();

  InputArgs st_in;
  std::string st_out;
  auto* st = app.add_subcommand("stats", "per-order node, edge and LCC counts");
  add_input_options(st, st_in);
  st->add_option("-o,--out", st_out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return run_centrality(cen);
    if (*rr) {
      CentralityArgs a = from_manifest(rerun_manifest);
      a.out = rerun_out;
      a.manifest = fs::path(rerun_out).replace_extension(".json").string();
      return run_centrality(a);
    }
    if (*cc) return run_compare(cmp);
    if (*st) return run_stats(st_in, st_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << '\n';
    return kConvergence;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
