#include "wincx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wincx/capacity.hpp"
#include "wincx/complex.hpp"
#include "wincx/complex_maps.hpp"
#include "wincx/errors.hpp"
#include "wincx/gen.hpp"
#include "wincx/graph.hpp"
#include "wincx/io.hpp"
#include "wincx/morphism.hpp"
#include "wincx/path.hpp"
#include "wincx/persistence.hpp"
#include "wincx/product.hpp"
#include "wincx/window.hpp"

namespace wincx {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  std::string window_text = "1:inf";
  std::string coeff = "q";
  int dim_cap = 8;
  int max_len = 3;
  int p_max = 2;
  int jobs = 1;
  std::string format = "human";
  long long budget = kDefaultAlphaBudget;
  bool list_simplices = false;
  int power = 2;
  std::string target;
  std::string map_text;
  std::string coords_path;
  int k_tuple = 2;
  std::string theorem = "all";
};

Window parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw BadParams("--window expects `n:m` (m may be `inf`)");
  const Dist n = dist_from_string(text.substr(0, colon));
  const Dist m = dist_from_string(text.substr(colon + 1));
  return Window(n, m);
}

json dist_json(Dist d) { return d == kInfDist ? json("inf") : json(d); }

json window_json(const Window& w) {
  return json{{"n", dist_json(w.lower)}, {"m", dist_json(w.upper)}, {"label", w.label()}};
}

LoadedGraph need_input(const Options& o) {
  if (o.input.empty()) throw BadParams("--input is required for this command");
  return load_input(o.input);
}

const Digraph& need_digraph(const LoadedGraph& g, const std::string& why) {
  if (!g.is_digraph()) throw BadParams(why + " needs a digraph input");
  return *g.digraph;
}

DistanceTable input_distance_table(const LoadedGraph& g, int jobs) {
  return g.is_digraph() ? distance_table(*g.digraph, jobs) : distance_table(*g.graph, jobs);
}

WindowGraph input_window_graph(const LoadedGraph& g, Window w, int jobs) {
  return WindowGraph(input_distance_table(g, jobs), w);
}

VertexMap identity_map(int n) {
  VertexMap m;
  m.to.resize(static_cast<std::size_t>(n));
  std::iota(m.to.begin(), m.to.end(), 0);
  return m;
}

VertexMap parse_map(const std::string& text, int src_n, int tgt_n) {
  if (text.empty()) throw BadParams("--map is required (vertex images, or `mod`)");
  VertexMap m;
  if (text == "mod") {
    if (tgt_n <= 0) throw BadParams("--map mod needs a nonempty target");
    for (int i = 0; i < src_n; ++i) m.to.push_back(i % tgt_n);
    return m;
  }
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream iss(cleaned);
  int v = 0;
  while (iss >> v) m.to.push_back(v);
  if (!iss.eof()) throw BadParams("--map: expected a list of integers");
  if (static_cast<int>(m.to.size()) != src_n)
    throw BadParams("--map needs exactly one image per source vertex");
  for (int img : m.to)
    if (img < 0 || img >= tgt_n) throw BadParams("--map image out of range");
  return m;
}

std::vector<std::vector<mpq_class>> parse_coords(const std::string& path, int n) {
  if (path.empty()) throw BadParams("--coords is required for this command");
  std::ifstream in(path);
  if (!in) throw BadParams("cannot open coords file `" + path + "`");
  const json j = json::parse(in);
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw BadParams("coords: expected a JSON array with one row per vertex");
  std::vector<std::vector<mpq_class>> coords;
  coords.reserve(j.size());
  for (const json& row : j) {
    if (!row.is_array()) throw BadParams("coords: each row must be an array");
    std::vector<mpq_class> point;
    point.reserve(row.size());
    for (const json& cell : row) {
      if (cell.is_number_integer()) {
        point.emplace_back(static_cast<long>(cell.get<long long>()));
      } else if (cell.is_string()) {
        mpq_class q;
        try {
          q = mpq_class(cell.get<std::string>());
        } catch (const std::invalid_argument&) {
          throw BadParams("coords: cannot parse rational `" + cell.get<std::string>() + "`");
        }
        if (q.get_den() == 0) throw BadParams("coords: zero denominator");
        q.canonicalize();
        point.push_back(std::move(q));
      } else {
        throw BadParams("coords: entries must be integers or rational strings like \"3/4\"");
      }
    }
    coords.push_back(std::move(point));
  }
  return coords;
}

// ---------------------------------------------------------------------------
// Record builders.  Every verb emits line-delimited records; the human
// rendering below is derived from the same records.

json graph_record(const LoadedGraph& g, json extra = json::object()) {
  json pairs = json::array();
  if (g.is_digraph()) {
    for (const auto& [u, v] : g.digraph->arcs()) pairs.push_back(json::array({u, v}));
  } else {
    for (const auto& [u, v] : g.graph->edges()) pairs.push_back(json::array({u, v}));
  }
  json rec{{"record", "graph"},
           {"kind", g.is_digraph() ? "digraph" : "graph"},
           {"n", g.vertex_count()},
           {"pairs", std::move(pairs)}};
  rec.update(extra);
  return rec;
}

json barcode_record(const Barcode& bc) {
  json bars = json::array();
  for (const Bar& b : bc.bars) {
    json jb{{"degree", b.degree}, {"birth", dist_json(b.birth)}};
    if (b.open) {
      jb["open"] = true;
    } else {
      jb["death"] = dist_json(b.death);
    }
    bars.push_back(std::move(jb));
  }
  json thresholds = json::array();
  for (Dist t : bc.thresholds) thresholds.push_back(dist_json(t));
  return json{{"record", "barcode"},
              {"direction", bc.direction == SliceDirection::LowerDecreasing ? "lower-decreasing"
                                                                            : "upper-increasing"},
              {"thresholds", std::move(thresholds)},
              {"bars", std::move(bars)},
              {"alive", bc.alive}};
}

json betti_json(const BettiTable& t) {
  return json{{"chain_dims", t.chain_dims}, {"betti", t.betti}, {"truncated", t.truncated}};
}

// ---------------------------------------------------------------------------
// Human rendering, one branch per record type.

std::string halved(const json& threshold) {
  if (threshold.is_string()) return threshold.get<std::string>();
  return half_label(threshold.get<Dist>());
}

std::string bar_to_string(const json& b, const char* param) {
  std::ostringstream os;
  os << "deg " << b.at("degree").get<int>() << ": " << param << "=" << halved(b.at("birth"))
     << " -> ";
  if (b.contains("open")) {
    os << "open";
  } else {
    os << param << "=" << halved(b.at("death"));
  }
  return os.str();
}

std::string root_label(long long a, int p) {
  if (p == 1) return std::to_string(a);
  return std::to_string(a) + "^(1/" + std::to_string(p) + ")";
}

void render_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
}

void render_human(const json& rec, std::ostream& out) {
  const std::string type = rec.at("record").get<std::string>();
  if (type == "distance_table") {
    out << "distance table, " << rec.at("n").get<int>() << " vertices ("
        << rec.at("kind").get<std::string>() << ")\n";
    std::vector<std::vector<std::string>> rows;
    for (const json& r : rec.at("rows")) {
      std::vector<std::string> row;
      for (const json& cell : r) row.push_back(cell.get<std::string>());
      rows.push_back(std::move(row));
    }
    render_table(out, rows);
  } else if (type == "independence_complex") {
    out << "independence complex at " << rec.at("window").at("label").get<std::string>() << "\n";
    const auto& dims = rec.at("dims");
    for (std::size_t d = 0; d < dims.size(); ++d)
      out << "  dim " << d << ": " << dims[d].get<long long>() << " simplices\n";
    if (rec.at("capped").get<bool>()) out << "  (dimension cap reached; higher simplices exist)\n";
    out << "  alpha = " << rec.at("alpha").get<long long>() << "\n";
    if (rec.contains("simplices")) {
      const auto& per_dim = rec.at("simplices");
      for (std::size_t d = 0; d < per_dim.size(); ++d) {
        if (per_dim[d].empty()) continue;
        out << "  dim " << d << ":";
        for (const json& s : per_dim[d]) {
          out << " {";
          for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i].get<int>();
          out << "}";
        }
        out << "\n";
      }
    }
  } else if (type == "path_homology") {
    out << "path homology at " << rec.at("window").at("label").get<std::string>() << ", field "
        << rec.at("field").get<std::string>() << ", max length "
        << rec.at("max_length").get<int>() << "\n";
    std::vector<std::vector<std::string>> rows{
        {"deg", "D", "Inf", "Sup", "betti(Inf)", "betti(Sup)"}};
    const auto& dd = rec.at("dim_d");
    const auto& di = rec.at("dim_inf");
    const auto& ds = rec.at("dim_sup");
    const auto& bi = rec.at("inf_betti").at("betti");
    const auto& bs = rec.at("sup_betti").at("betti");
    for (std::size_t l = 0; l < di.size(); ++l) {
      rows.push_back({std::to_string(l), std::to_string(dd[l].get<long long>()),
                      std::to_string(di[l].get<long long>()),
                      std::to_string(ds[l].get<long long>()),
                      std::to_string(bi[l].get<long long>()),
                      std::to_string(bs[l].get<long long>())});
    }
    render_table(out, rows);
    const json& trunc = rec.at("inf_betti").at("truncated");
    if (!trunc.empty() && trunc.back().get<bool>())
      out << "(top degree truncated by the length cap)\n";
  } else if (type == "barcode") {
    const bool lower = rec.at("direction").get<std::string>() == "lower-decreasing";
    const char* param = lower ? "n" : "m";
    out << (lower ? "lower slice (n decreasing, m = inf)" : "upper slice (m increasing, n = 1)")
        << "\n  thresholds:";
    for (const json& t : rec.at("thresholds")) out << " " << halved(t);
    out << "\n";
    for (const json& b : rec.at("bars")) out << "  " << bar_to_string(b, param) << "\n";
    if (rec.at("bars").empty()) out << "  (no bars)\n";
  } else if (type == "rank_invariant") {
    out << "rank invariant over " << rec.at("entries").size() << " grid inclusions\n";
    for (const json& e : rec.at("entries")) {
      out << "  H_" << e.at("degree").get<int>() << " (" << halved(e.at("src").at("n")) << ", "
          << halved(e.at("src").at("m")) << "] -> (" << halved(e.at("dst").at("n")) << ", "
          << halved(e.at("dst").at("m")) << "]: rank " << e.at("rank").get<long long>() << "\n";
    }
  } else if (type == "capacity") {
    out << "windowed capacity bound at " << rec.at("window").at("label").get<std::string>()
        << "\n";
    std::vector<std::vector<std::string>> rows{{"p", "alpha", "alpha^(1/p)"}};
    const auto& alphas = rec.at("alphas");
    for (std::size_t i = 0; i < alphas.size(); ++i)
      rows.push_back({std::to_string(i + 1), std::to_string(alphas[i].get<long long>()),
                      root_label(alphas[i].get<long long>(), static_cast<int>(i) + 1)});
    render_table(out, rows);
    out << "best lower bound: " << rec.at("bound").get<std::string>() << " (~"
        << rec.at("bound_estimate").get<double>() << ")\n";
    for (const json& s : rec.at("supermult")) {
      out << "  alpha(" << s.at("p").get<int>() << "+" << s.at("q").get<int>()
          << ") >= product: " << s.at("alpha_pq").get<long long>() << " >= "
          << s.at("alpha_p").get<long long>() * s.at("alpha_q").get<long long>() << " ["
          << (s.at("holds").get<bool>() ? "ok" : "VIOLATED") << "]\n";
    }
  } else if (type == "graph") {
    out << rec.at("kind").get<std::string>() << " " << rec.at("n").get<int>() << "\n";
    for (const json& p : rec.at("pairs"))
      out << p[0].get<int>() << " " << p[1].get<int>() << "\n";
  } else if (type == "geodesic") {
    out << "morphism: " << (rec.at("is_morphism").get<bool>() ? "yes" : "no") << "\n";
    if (rec.at("is_morphism").get<bool>()) {
      out << "verified radius: " << halved(rec.at("radius_doubled"))
          << (rec.at("all_finite").get<bool>() ? " (covers every finite threshold)" : "") << "\n";
      out << "distance-preserving embedding: "
          << (rec.at("is_embedding").get<bool>() ? "yes" : "no") << "\n";
      out << "covers window " << rec.at("window").at("label").get<std::string>() << ": "
          << (rec.at("covers_window").get<bool>() ? "yes" : "no") << "\n";
    }
  } else if (type == "automorphisms") {
    out << rec.at("count").get<std::size_t>() << " automorphisms\n";
    for (const json& p : rec.at("perms")) {
      out << " ";
      for (const json& v : p) out << " " << v.get<int>();
      out << "\n";
    }
  } else if (type == "affine_regularity") {
    out << "affinely " << rec.at("k").get<int>() << "-regular: "
        << (rec.at("regular").get<bool>() ? "yes" : "NO") << " ("
        << rec.at("checked").get<std::size_t>() << " simplices checked)\n";
    if (!rec.at("violation").is_null()) {
      out << "  first violation: {";
      const auto& s = rec.at("violation");
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i].get<int>();
      out << "}\n";
    }
  } else if (type == "claim") {
    out << (rec.at("pass").get<bool>() ? "[pass] " : "[FAIL] ") << rec.at("suite").get<std::string>()
        << " " << rec.at("name").get<std::string>() << "\n";
  } else if (type == "verify_summary") {
    out << "verify: " << rec.at("passed").get<int>() << " passed, " << rec.at("failed").get<int>()
        << " failed\n";
  } else if (type == "timeout") {
    out << "search budget exhausted after " << rec.at("nodes").get<std::uint64_t>()
        << " nodes; best found " << rec.at("best_lower").get<long long>() << ", upper bound "
        << rec.at("best_upper").get<long long>() << "\n";
  } else {
    out << rec.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// Verb handlers.

int cmd_dist(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const DistanceTable t = input_distance_table(g, o.jobs);
  json rows = json::array();
  for (int u = 0; u < t.size(); ++u) {
    json row = json::array();
    for (int v = 0; v < t.size(); ++v) row.push_back(dist_to_string(t.at(u, v)));
    rows.push_back(std::move(row));
  }
  recs.push_back(json{{"record", "distance_table"},
                      {"kind", g.is_digraph() ? "digraph" : "graph"},
                      {"n", t.size()},
                      {"rows", std::move(rows)}});
  return 0;
}

int cmd_ind(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const Window w = parse_window(o.window_text);
  const WindowGraph wg = input_window_graph(g, w, o.jobs);
  const WindowComplex cx = independence_complex(wg, o.dim_cap);
  const AlphaResult a = alpha_witness(wg, o.budget);
  json dims = json::array();
  for (int d = 0; d <= cx.dimension(); ++d) dims.push_back(cx.count(d));
  json rec{{"record", "independence_complex"}, {"window", window_json(w)},
           {"dims", std::move(dims)},          {"dimension", cx.dimension()},
           {"capped", cx.capped},              {"alpha", a.value},
           {"alpha_witness", a.witness}};
  if (o.list_simplices) {
    json per_dim = json::array();
    for (int d = 0; d <= cx.dimension(); ++d) per_dim.push_back(cx.simplices[static_cast<std::size_t>(d)]);
    rec["simplices"] = std::move(per_dim);
  }
  recs.push_back(std::move(rec));
  return 0;
}

int cmd_path_homology(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const Window w = parse_window(o.window_text);
  const WindowGraph wg = input_window_graph(g, w, o.jobs);
  const PathHomologyReport rep = path_homology(wg, o.max_len, FieldSpec::parse(o.coeff));
  recs.push_back(json{{"record", "path_homology"},
                      {"window", window_json(w)},
                      {"field", rep.field.name()},
                      {"max_length", rep.max_length},
                      {"dim_d", rep.dim_d},
                      {"dim_inf", rep.dim_inf},
                      {"dim_sup", rep.dim_sup},
                      {"inf_betti", betti_json(rep.inf_betti)},
                      {"sup_betti", betti_json(rep.sup_betti)}});
  return 0;
}

int cmd_persist(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const WindowGraph widest = input_window_graph(g, Window{}, o.jobs);
  const FieldSpec field = FieldSpec::parse(o.coeff);
  recs.push_back(
      barcode_record(persistence_slice(widest, SliceDirection::LowerDecreasing, o.dim_cap, field)));
  recs.push_back(
      barcode_record(persistence_slice(widest, SliceDirection::UpperIncreasing, o.dim_cap, field)));
  return 0;
}

int cmd_rank_invariant(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const WindowGraph widest = input_window_graph(g, Window{}, o.jobs);
  const RankInvariant ri = rank_invariant(widest, o.dim_cap, FieldSpec::parse(o.coeff));
  json entries = json::array();
  for (const auto& e : ri.entries) {
    entries.push_back(json{{"src", {{"n", dist_json(e.n_src)}, {"m", dist_json(e.m_src)}}},
                           {"dst", {{"n", dist_json(e.n_dst)}, {"m", dist_json(e.m_dst)}}},
                           {"degree", e.degree},
                           {"rank", e.rank}});
  }
  json lows = json::array(), ups = json::array();
  for (Dist t : ri.lower_grid) lows.push_back(dist_json(t));
  for (Dist t : ri.upper_grid) ups.push_back(dist_json(t));
  recs.push_back(json{{"record", "rank_invariant"},
                      {"lower_grid", std::move(lows)},
                      {"upper_grid", std::move(ups)},
                      {"entries", std::move(entries)}});
  return 0;
}

int cmd_capacity(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const Window w = parse_window(o.window_text);
  const CapacityEstimate est = g.is_digraph() ? capacity_bound(*g.digraph, w, o.p_max, o.budget)
                                              : capacity_bound(*g.graph, w, o.p_max, o.budget);
  json supermult = json::array();
  for (const SupermultCheck& s : est.supermult)
    supermult.push_back(json{{"p", s.p},
                             {"q", s.q},
                             {"alpha_p", s.alpha_p},
                             {"alpha_q", s.alpha_q},
                             {"alpha_pq", s.alpha_pq},
                             {"holds", s.holds}});
  recs.push_back(json{{"record", "capacity"},
                      {"window", window_json(w)},
                      {"p_max", est.p_max},
                      {"alphas", est.alpha_by_power},
                      {"best_p", est.best_p},
                      {"best_alpha", est.best_alpha},
                      {"bound", est.bound_label()},
                      {"bound_estimate", est.bound_estimate()},
                      {"supermult", std::move(supermult)}});
  return 0;
}

int cmd_product(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  if (o.power < 1) throw BadParams("--power must be >= 1");
  LoadedGraph powered;
  if (g.is_digraph()) {
    powered.digraph = strong_power(*g.digraph, o.power);
  } else {
    powered.graph = strong_power(*g.graph, o.power);
  }
  recs.push_back(graph_record(powered, json{{"power", o.power}}));
  return 0;
}

int cmd_check_geodesic(const Options& o, std::vector<json>& recs) {
  const LoadedGraph src = need_input(o);
  if (o.target.empty()) throw BadParams("--target is required for this command");
  const LoadedGraph tgt = load_input(o.target);
  if (src.is_digraph() != tgt.is_digraph())
    throw BadParams("source and target must both be digraphs or both be graphs");
  const Window w = parse_window(o.window_text);
  const VertexMap phi = parse_map(o.map_text, src.vertex_count(), tgt.vertex_count());
  const bool morphism = src.is_digraph() ? check_morphism(*src.digraph, *tgt.digraph, phi)
                                         : check_morphism(*src.graph, *tgt.graph, phi);
  json rec{{"record", "geodesic"}, {"is_morphism", morphism}, {"window", window_json(w)}};
  if (!morphism) {
    recs.push_back(std::move(rec));
    return 1;
  }
  const GeodesicReport rep = src.is_digraph() ? geodesic_report(*src.digraph, *tgt.digraph, phi)
                                              : geodesic_report(*src.graph, *tgt.graph, phi);
  const bool covers = rep.covers(w.upper);
  rec["radius_doubled"] = dist_json(rep.max_verified_radius_doubled);
  rec["all_finite"] = rep.all_finite_radii;
  rec["is_embedding"] = rep.is_embedding;
  rec["covers_window"] = covers;
  recs.push_back(std::move(rec));
  return covers ? 0 : 1;
}

int cmd_check_automorphisms(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const std::vector<std::vector<int>> perms =
      g.is_digraph() ? automorphisms(*g.digraph) : automorphisms(*g.graph);
  recs.push_back(json{{"record", "automorphisms"}, {"count", perms.size()}, {"perms", perms}});
  return 0;
}

int cmd_check_regular(const Options& o, std::vector<json>& recs) {
  const LoadedGraph g = need_input(o);
  const Window w = parse_window(o.window_text);
  const WindowGraph wg = input_window_graph(g, w, o.jobs);
  if (o.k_tuple < 1) throw BadParams("--k must be >= 1");
  const auto coords = parse_coords(o.coords_path, g.vertex_count());
  const RegularityReport rep = check_affine_regularity(wg, o.k_tuple, coords);
  recs.push_back(json{{"record", "affine_regularity"},
                      {"k", o.k_tuple},
                      {"regular", rep.regular},
                      {"checked", rep.checked},
                      {"violation", rep.violation ? json(*rep.violation) : json(nullptr)}});
  return rep.regular ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Verify suites.  Each suite id covers one statement family; claims are
// emitted as records and the verb fails when any claim fails.

struct ClaimSink {
  std::vector<json>& recs;
  int passed = 0;
  int failed = 0;

  void claim(const std::string& suite, const std::string& name, bool ok,
             json extra = json::object()) {
    json r{{"record", "claim"}, {"suite", suite}, {"name", name}, {"pass", ok}};
    r.update(extra);
    recs.push_back(std::move(r));
    ++(ok ? passed : failed);
  }
};

// Canonical test maps: the r-vertex directed line included in the directed
// r-cycle (an injective immersion with doubled radius r/2, not an
// embedding), and a 2x2 box included in a 3x3 box (a distance-preserving
// embedding).  A line longer than r would wind around the cycle and
// identify distant vertices; no induced map of such a quotient can be
// injective, so the injective window is the canonical test shape.
struct TestMap {
  std::string name;
  Digraph src;
  Digraph tgt;
  VertexMap phi;
};

std::vector<TestMap> canonical_maps() {
  std::vector<TestMap> maps;
  for (int r : {6, 8}) {
    TestMap m;
    m.name = "line(" + std::to_string(r) + ") into cycle(" + std::to_string(r) + ")";
    m.src = make_line_digraph(r);
    m.tgt = make_cycle_digraph(r);
    for (int i = 0; i < r; ++i) m.phi.to.push_back(i);
    maps.push_back(std::move(m));
  }
  TestMap box;
  box.name = "box 2x2 into box 3x3";
  box.src = make_lattice_digraph(2, 2);
  box.tgt = make_lattice_digraph(2, 3);
  for (int id = 0; id < box.src.vertex_count(); ++id)
    box.phi.to.push_back(lattice_id(3, lattice_coords(2, 2, id)));
  maps.push_back(std::move(box));
  return maps;
}

void suite_1_1(const Digraph& gd, int dim_cap, ClaimSink& sink) {
  const DistanceTable dt = distance_table(gd);
  try {
    for (const EmbedReport& rep : embed_i(gd, lower_thresholds(dt), dim_cap)) {
      json extra{{"source_count", rep.source_count},
                 {"target_count", rep.target_count},
                 {"identity", rep.identity}};
      sink.claim("1.1",
                 "underlying-graph complex includes into the digraph complex at " +
                     rep.window.label(),
                 true, extra);
      if (rep.param == 1)
        sink.claim("1.1", "the two complexes coincide at " + rep.window.label(), rep.identity,
                   extra);
    }
  } catch (const NotASimplicialMap& e) {
    sink.claim("1.1", std::string("lower-slice inclusion: ") + e.what(), false);
  }
  std::vector<Dist> ups;
  for (Dist m : upper_thresholds(dt))
    if (m != kInfDist) ups.push_back(m);
  try {
    for (const EmbedReport& rep : embed_j(gd, ups, dim_cap)) {
      sink.claim("1.1",
                 "digraph complex includes into the underlying-graph complex at " +
                     rep.window.label(),
                 true,
                 json{{"source_count", rep.source_count}, {"target_count", rep.target_count}});
    }
  } catch (const NotASimplicialMap& e) {
    sink.claim("1.1", std::string("upper-slice inclusion: ") + e.what(), false);
  }
}

// Ascending union of the two tables' candidate thresholds.
std::vector<Dist> merged_thresholds(std::vector<Dist> a, const std::vector<Dist>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void suite_1_2(int dim_cap, ClaimSink& sink) {
  for (const TestMap& m : canonical_maps()) {
    const GeodesicReport geod = geodesic_report(m.src, m.tgt, m.phi);
    sink.claim("1.2", m.name + " is a morphism", geod.is_morphism);
    const DistanceTable st = distance_table(m.src);
    const DistanceTable tt = distance_table(m.tgt);
    for (Dist n : merged_thresholds(lower_thresholds(st), lower_thresholds(tt))) {
      for (Dist m_up : merged_thresholds(upper_thresholds(st), upper_thresholds(tt))) {
        if (m_up <= n) continue;
        const Window w{n, m_up};
        const WindowComplex sc = independence_complex(m.src, w, dim_cap);
        const WindowComplex tc = independence_complex(m.tgt, w, dim_cap);
        if (geod.covers(w.upper)) {
          const InducedComplexMap icm = induced_complex_map(sc, tc, m.phi, geod);
          sink.claim("1.2",
                     m.name + ": induced simplicial embedding at " + w.label(),
                     icm.injective && icm.dimension_preserving);
        } else {
          bool rejected = false;
          try {
            induced_complex_map(sc, tc, m.phi, geod);
          } catch (const RadiusTooSmall&) {
            rejected = true;
          }
          sink.claim("1.2", m.name + ": radius guard rejects window " + w.label(), rejected);
        }
      }
    }
  }
}

void suite_1_3(const Digraph& gd, int max_len, const FieldSpec& field, ClaimSink& sink) {
  const Graph g = underlying_graph(gd);
  const DistanceTable dt = distance_table(gd);
  const VertexMap id = identity_map(gd.vertex_count());
  auto walk_embedding = [&](const WindowGraph& swg, const WindowGraph& twg) {
    const PathMapReport rep = induced_path_map(swg, twg, id, PathMapKind::CanonicalIdentity,
                                               nullptr, max_len, field, field);
    for (int l = 0; l <= max_len; ++l) {
      const auto dim = static_cast<long long>(path_basis(swg, l).paths.size());
      if (rep.d_ranks[static_cast<std::size_t>(l)] != dim) return false;
    }
    return true;
  };
  for (Dist n : lower_thresholds(dt)) {
    const Window w{n, kInfDist};
    const WindowGraph swg = window_graph(g, w);
    const WindowGraph twg = window_graph(gd, w);
    sink.claim("1.3", "walk spans of the underlying graph embed into the digraph's at " + w.label(),
               walk_embedding(swg, twg));
    if (n == 1) {
      bool same = true;
      for (int l = 0; l <= max_len; ++l)
        same = same && path_basis(swg, l).paths == path_basis(twg, l).paths;
      sink.claim("1.3", "walk sets coincide at " + w.label(), same);
    }
  }
  for (Dist m : upper_thresholds(dt)) {
    if (m == kInfDist) continue;
    const Window w{1, m};
    sink.claim("1.3", "walk spans of the digraph embed into the underlying graph's at " + w.label(),
               walk_embedding(window_graph(gd, w), window_graph(g, w)));
  }
}

void suite_1_4(int max_len, const FieldSpec& field, ClaimSink& sink) {
  for (const TestMap& m : canonical_maps()) {
    const GeodesicReport geod = geodesic_report(m.src, m.tgt, m.phi);
    const auto ups =
        merged_thresholds(upper_thresholds(distance_table(m.src)), upper_thresholds(distance_table(m.tgt)));
    for (Dist m_up : ups) {
      const Window w{1, m_up};
      const WindowGraph swg = window_graph(m.src, w);
      const WindowGraph twg = window_graph(m.tgt, w);
      if (geod.covers(w.upper)) {
        const PathMapReport rep = induced_path_map(swg, twg, m.phi, PathMapKind::Geodesic, &geod,
                                                   max_len, field, field);
        bool inj = true;
        for (int l = 0; l <= max_len; ++l) {
          const auto dim = static_cast<long long>(path_basis(swg, l).paths.size());
          inj = inj && rep.d_ranks[static_cast<std::size_t>(l)] == dim;
        }
        sink.claim("1.4", m.name + ": walk-span embedding at " + w.label(), inj);
      } else {
        bool rejected = false;
        try {
          induced_path_map(swg, twg, m.phi, PathMapKind::Geodesic, &geod, max_len, field, field);
        } catch (const RadiusTooSmall&) {
          rejected = true;
        }
        sink.claim("1.4", m.name + ": radius guard rejects window " + w.label(), rejected);
      }
    }
  }
}

void suite_5_9(const Digraph& gd, int p_max, Dist q, long long budget, ClaimSink& sink) {
  const CapacityInequalityReport rep = verify_capacity_inequalities(gd, p_max, q, budget);
  auto tag = [](bool asserted) { return asserted ? std::string(" [asserted]") : std::string(" [measured]"); };
  for (const CapacityChainCheck& c : rep.lower) {
    const std::string at = " at power " + std::to_string(c.p) + " on " + rep.lower_window.label();
    sink.claim("5.9", "alpha(graph power) <= alpha(underlying of digraph power)" + at + tag(c.ab_asserted),
               c.ab_holds, json{{"alpha_a", c.alpha_a}, {"alpha_b", c.alpha_b}});
    sink.claim("5.9", "alpha(underlying of digraph power) <= alpha(digraph power)" + at + tag(c.bc_asserted),
               c.bc_holds, json{{"alpha_b", c.alpha_b}, {"alpha_c", c.alpha_c}});
  }
  if (rep.upper_window) {
    for (const CapacityChainCheck& c : rep.upper) {
      const std::string at = " at power " + std::to_string(c.p) + " on " + rep.upper_window->label();
      sink.claim("5.9", "alpha(digraph power) <= alpha(underlying of digraph power)" + at + tag(c.ab_asserted),
                 c.ab_holds, json{{"alpha_a", c.alpha_a}, {"alpha_b", c.alpha_b}});
      sink.claim("5.9", "alpha(underlying of digraph power) <= alpha(graph power)" + at + tag(c.bc_asserted),
                 c.bc_holds, json{{"alpha_b", c.alpha_b}, {"alpha_c", c.alpha_c}});
    }
  }
}

void suite_5_10(int p_max, long long budget, ClaimSink& sink) {
  for (const TestMap& m : canonical_maps()) {
    const GeodesicReport geod = geodesic_report(m.src, m.tgt, m.phi);
    const Window w{1, geod.is_embedding ? kInfDist : geod.max_verified_radius_doubled};
    const auto checks = verify_geodesic_power_monotonicity(m.src, m.tgt, m.phi, w, p_max, budget);
    for (const GeodesicPowerCheck& c : checks) {
      const std::string at = " at power " + std::to_string(c.p) + " on " + w.label();
      sink.claim("5.10", m.name + ": certificate covers the window" + at, c.power_map_covers);
      if (c.power_map_covers)
        sink.claim("5.10", m.name + ": alpha(immersed power) <= alpha(ambient power)" + at,
                   c.holds, json{{"alpha_src", c.alpha_src}, {"alpha_tgt", c.alpha_tgt}});
    }
  }
}

int cmd_verify(const Options& o, std::vector<json>& recs) {
  static const std::vector<std::string> kAll{"1.1", "1.2", "1.3", "1.4", "5.9", "5.10"};
  std::vector<std::string> suites;
  if (o.theorem == "all") {
    suites = kAll;
  } else if (std::find(kAll.begin(), kAll.end(), o.theorem) != kAll.end()) {
    suites.push_back(o.theorem);
  } else {
    throw BadParams("--theorem must be one of 1.1, 1.2, 1.3, 1.4, 5.9, 5.10, all");
  }
  const bool needs_input =
      std::any_of(suites.begin(), suites.end(), [](const std::string& s) {
        return s == "1.1" || s == "1.3" || s == "5.9";
      });
  std::optional<LoadedGraph> input;
  if (needs_input) input = need_input(o);
  const FieldSpec field = FieldSpec::parse(o.coeff);
  const Window w = parse_window(o.window_text);
  ClaimSink sink{recs};
  for (const std::string& s : suites) {
    if (s == "1.1") {
      suite_1_1(need_digraph(*input, "suite 1.1"), o.dim_cap, sink);
    } else if (s == "1.2") {
      suite_1_2(o.dim_cap, sink);
    } else if (s == "1.3") {
      suite_1_3(need_digraph(*input, "suite 1.3"), o.max_len, field, sink);
    } else if (s == "1.4") {
      suite_1_4(o.max_len, field, sink);
    } else if (s == "5.9") {
      suite_5_9(need_digraph(*input, "suite 5.9"), o.p_max, w.lower, o.budget, sink);
    } else {
      suite_5_10(o.p_max, o.budget, sink);
    }
  }
  recs.push_back(json{{"record", "verify_summary"},
                      {"suites", suites},
                      {"passed", sink.passed},
                      {"failed", sink.failed}});
  return sink.failed == 0 ? 0 : 1;
}

int dispatch(const std::string& verb, const Options& o, std::vector<json>& recs,
             std::ostream& err) {
  try {
    if (verb == "dist") return cmd_dist(o, recs);
    if (verb == "ind") return cmd_ind(o, recs);
    if (verb == "path-homology") return cmd_path_homology(o, recs);
    if (verb == "persist") return cmd_persist(o, recs);
    if (verb == "rank-invariant") return cmd_rank_invariant(o, recs);
    if (verb == "capacity") return cmd_capacity(o, recs);
    if (verb == "product") return cmd_product(o, recs);
    if (verb == "check-geodesic") return cmd_check_geodesic(o, recs);
    if (verb == "check-automorphisms") return cmd_check_automorphisms(o, recs);
    if (verb == "check-regular") return cmd_check_regular(o, recs);
    if (verb == "verify") return cmd_verify(o, recs);
    err << "error: unknown command `" << verb << "`\n";
    return 2;
  } catch (const Timeout& t) {
    recs.push_back(json{{"record", "timeout"},
                        {"what", t.what()},
                        {"best_lower", t.best_lower},
                        {"best_upper", t.best_upper},
                        {"nodes", t.nodes}});
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"windowed independence complexes, path homology, and capacity bounds"};
  app.require_subcommand(1);
  app.add_option("--input", o.input,
                 "edge-list file, or generator spec `gen:kind,key=value,...`")
      ->envname("WINCX_INPUT");
  app.add_option("--window", o.window_text,
                 "distance window `n:m` (admissible pairs satisfy n < d <= m; m may be `inf`)")
      ->envname("WINCX_WINDOW");
  app.add_option("--coeff", o.coeff, "coefficient field: q, gf2, or gf<p>")
      ->envname("WINCX_COEFF");
  app.add_option("--dim-cap", o.dim_cap, "largest simplex dimension materialized")
      ->check(CLI::PositiveNumber)
      ->envname("WINCX_DIM_CAP");
  app.add_option("--max-len", o.max_len, "largest path length in path homology")
      ->check(CLI::PositiveNumber)
      ->envname("WINCX_MAX_LEN");
  app.add_option("--pmax", o.p_max, "largest strong-product power")
      ->check(CLI::PositiveNumber)
      ->envname("WINCX_PMAX");
  app.add_option("--jobs", o.jobs, "worker threads for distance tables")
      ->check(CLI::PositiveNumber)
      ->envname("WINCX_JOBS");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->envname("WINCX_FORMAT");
  app.add_option("--budget", o.budget, "node budget for independence-number searches")
      ->check(CLI::PositiveNumber)
      ->envname("WINCX_BUDGET");

  CLI::App* dist = app.add_subcommand("dist", "all-pairs distance table of the input");
  CLI::App* ind = app.add_subcommand("ind", "independence complex of the window");
  ind->add_flag("--list", o.list_simplices, "list every simplex");
  app.add_subcommand("path-homology", "Inf/Sup path homology of the window");
  app.add_subcommand("persist",
                     "barcodes of the two one-parameter slices (always starts from the widest "
                     "window 1:inf)");
  app.add_subcommand("rank-invariant",
                     "homology ranks of every grid inclusion (always starts from the widest "
                     "window 1:inf)");
  app.add_subcommand("capacity", "windowed independence numbers of powers and the root bound");
  CLI::App* product = app.add_subcommand("product", "strong power of the input");
  product->add_option("--power", o.power, "power to raise the input to")
      ->check(CLI::PositiveNumber);
  CLI::App* geo = app.add_subcommand("check-geodesic",
                                     "verify a vertex map and report its geodesic radius");
  geo->add_option("--target", o.target, "target input (file or gen: spec)");
  geo->add_option("--map", o.map_text, "vertex images `a,b,c,...`, or `mod` for i % |target|");
  app.add_subcommand("check-automorphisms", "enumerate all automorphisms of the input");
  CLI::App* reg = app.add_subcommand("check-regular",
                                     "check affine independence of simplex coordinates");
  reg->add_option("--coords", o.coords_path, "JSON file: one coordinate row per vertex");
  reg->add_option("--k", o.k_tuple, "tuple size to audit")->check(CLI::PositiveNumber);
  CLI::App* verify = app.add_subcommand("verify", "run a statement suite and report each claim");
  verify->add_option("--theorem,--suite", o.theorem, "1.1, 1.2, 1.3, 1.4, 5.9, 5.10, or all");
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();
  (void)dist;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  std::vector<json> recs;
  const int rc = dispatch(verb, o, recs, err);
  if (o.format == "records") {
    for (json& r : recs) {
      r["schema"] = kSchemaVersion;
      out << r.dump() << "\n";
    }
  } else {
    for (const json& r : recs) render_human(r, out);
  }
  return rc;
}

}  // namespace wincx
