#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "deltacvx/deltacvx.hpp"
#include "json.hpp"

namespace deltacvx::cli {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kCommands = {
    "parse",       "triangles", "interval",      "hull",   "hull-number", "is-convex",
    "extreme",     "two-partition", "phi",       "theta",  "blocks",      "chordal",
    "chi",         "product",   "product-check", "reduce", "extract",     "verify"};

struct Options {
  std::vector<std::string> inputs;
  std::string format = "auto";
  bool json = false;
  std::size_t cap = 16;
  bool deterministic = false;

  std::vector<std::string> sets;
  std::string seed_triangle = "lexmin";
  bool exact = false;
  bool brute_force = false;
  std::string product_kind = "cartesian";
  std::size_t k = 3;
  std::string family_kind;
  std::string witness_json;
};

struct Output {
  std::size_t n = 0, m = 0;
  json result;
  json witness = json::array();
  std::string text;
  int exit_code = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

GraphFormat format_of(const std::string& name) {
  if (name == "el") return GraphFormat::EdgeList;
  if (name == "g6") return GraphFormat::Graph6;
  return GraphFormat::Auto;
}

Graph load(const Options& o, std::size_t index, std::istream& in) {
  return parse_graph(read_input(o.inputs.at(index), in), format_of(o.format));
}

VertexSet parse_set(const Graph& g, const std::string& text) {
  VertexSet s(g.order());
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError("invalid vertex '" + item + "' in set '" + text + "'");
    if (v >= g.order())
      throw DomainError("vertex " + std::to_string(v) + " out of range (n=" +
                        std::to_string(g.order()) + ")");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

VertexSet single_set(const Options& o, const Graph& g) {
  if (o.sets.size() != 1) throw UsageError("exactly one --set is required");
  return parse_set(g, o.sets.front());
}

json to_json(const VertexSet& s) { return json(s.to_vector()); }

json to_json(const ConvexFamily& fam) {
  json out = json::array();
  for (const auto& s : fam.sets) out.push_back(to_json(s));
  return out;
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

std::string family_text(const ConvexFamily& fam) {
  std::string out;
  for (std::size_t i = 0; i < fam.sets.size(); ++i) out += (i ? " " : "") + fam.sets[i].to_string();
  return out;
}

json graph_summary(const Graph& g) {
  return json{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

ConvexFamily coloring_classes(std::size_t n, const std::vector<std::size_t>& colors) {
  std::size_t k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  ConvexFamily fam{std::vector<VertexSet>(k, VertexSet(n)), FamilyKind::Partition};
  for (Vertex v = 0; v < colors.size(); ++v) fam.sets[colors[v]].insert(v);
  return fam;
}

json violations_json(const Verdict& verdict) {
  json out = json::array();
  for (const auto& v : verdict.violations) out.push_back(v.describe());
  return out;
}

using Handler = std::function<Output(const Options&, std::istream&)>;

Output cmd_parse(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  Output r{g.order(), g.size()};
  r.result = graph_summary(g);
  r.witness = edges_json(g);
  r.text = to_edge_list(g);
  r.text.pop_back();
  return r;
}

Output cmd_triangles(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  Output r{g.order(), g.size()};
  r.result = g.triangles().size();
  std::string text = std::to_string(g.triangles().size()) + " triangle(s)";
  for (const auto& t : g.triangles()) {
    r.witness.push_back({t.a, t.b, t.c});
    text += "\n" + std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
  }
  r.text = text;
  return r;
}

Output cmd_interval(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  VertexSet s = single_set(o, g);
  VertexSet out = delta_interval(g, s);
  Output r{g.order(), g.size()};
  r.result = to_json(out);
  r.text = out.to_string();
  return r;
}

Output cmd_hull(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto res = convex_hull(g, single_set(o, g));
  Output r{g.order(), g.size()};
  r.result = json{{"hull", to_json(res.hull)}, {"rounds", res.rounds}};
  r.witness.push_back(to_json(res.hull));
  r.text = res.hull.to_string() + " (" + std::to_string(res.rounds) + " rounds)";
  return r;
}

Output cmd_hull_number(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  VertexSet h = minimum_hull_set(g, {o.cap});
  Output r{g.order(), g.size()};
  r.result = h.size();
  r.witness.push_back(to_json(h));
  r.text = std::to_string(h.size()) + " " + h.to_string();
  return r;
}

Output cmd_is_convex(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  VertexSet s = single_set(o, g);
  auto witness = convexity_witness(g, s);
  Output r{g.order(), g.size()};
  r.result = !witness.has_value();
  r.text = witness ? "false" : "true";
  if (witness) {
    r.witness.push_back({witness->a, witness->b, witness->c});
    r.text += " (triangle " + std::to_string(witness->a) + " " + std::to_string(witness->b) + " " +
              std::to_string(witness->c) + ")";
  }
  return r;
}

Output cmd_extreme(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  VertexSet ext = extreme_vertices(g);
  Output r{g.order(), g.size()};
  r.result = to_json(ext);
  r.text = ext.to_string();
  return r;
}

Output cmd_two_partition(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  std::optional<TwoPartition> res;
  if (o.seed_triangle == "lexmin") {
    res = convex_two_partition(g);
  } else {
    VertexSet seed = parse_set(g, o.seed_triangle);
    auto vs = seed.to_vector();
    if (vs.size() != 3) throw UsageError("--seed-triangle expects 'lexmin' or three vertices a,b,c");
    res = convex_two_partition(g, Triangle(vs[0], vs[1], vs[2]));
  }
  Output r{g.order(), g.size()};
  if (!res) {
    r.result = "none";
    r.text = "none";
    return r;
  }
  r.result = 2;
  r.witness = json::array({to_json(res->first), to_json(res->second)});
  r.text = res->first.to_string() + " " + res->second.to_string();
  return r;
}

Output family_number(const Options& o, std::istream& in, bool cover) {
  if (o.exact && o.brute_force) throw UsageError("--exact and --brute-force are exclusive");
  Graph g = load(o, 0, in);
  SolverOptions opts{o.cap};
  FamilySolution sol;
  if (o.brute_force)
    sol = cover ? cover_number_search(g, opts) : partition_number_search(g, opts);
  else
    sol = cover ? cover_number(g, opts) : partition_number(g, opts);
  Output r{g.order(), g.size()};
  r.result = sol.p;
  r.witness = to_json(sol.witness);
  r.text = std::to_string(sol.p) + " " + family_text(sol.witness);
  return r;
}

Output cmd_blocks(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto bd = block_decomposition(g);
  Output r{g.order(), g.size()};
  r.result = json{{"blocks", bd.blocks.size()},
                  {"cut_vertices", to_json(bd.cut_vertices)},
                  {"block_graph", is_block_graph(g)}};
  std::string text = std::to_string(bd.blocks.size()) + " block(s), cut vertices " +
                     bd.cut_vertices.to_string();
  for (const auto& b : bd.blocks) {
    r.witness.push_back(to_json(b));
    text += "\n" + b.to_string();
  }
  r.text = text;
  return r;
}

Output cmd_chordal(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto res = is_chordal(g);
  Output r{g.order(), g.size()};
  r.result = res.chordal;
  r.text = res.chordal ? "true" : "false";
  if (res.chordal) {
    r.witness.push_back(res.elimination_order);
    r.text += " (elimination order";
    for (Vertex v : res.elimination_order) r.text += " " + std::to_string(v);
    r.text += ")";
  }
  return r;
}

Output cmd_chi(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto colors = optimal_coloring(g, {o.cap});
  auto classes = coloring_classes(g.order(), colors);
  Output r{g.order(), g.size()};
  r.result = classes.size();
  r.witness = to_json(classes);
  r.text = std::to_string(classes.size()) + " " + family_text(classes);
  return r;
}

Output cmd_product(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in), h = load(o, 1, in);
  auto p = product(g, h, parse_product_kind(o.product_kind));
  Output r{p.graph().order(), p.graph().size()};
  r.result = graph_summary(p.graph());
  r.witness = edges_json(p.graph());
  r.text = to_edge_list(p.graph());
  r.text.pop_back();
  return r;
}

Output cmd_product_check(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in), h = load(o, 1, in);
  const ProductKind kind = parse_product_kind(o.product_kind);
  SolverOptions opts{o.cap};
  Output r{g.order() * h.order(), 0};
  if (kind == ProductKind::Cartesian) {
    auto rep = product_cover_bounds(g, h, opts);
    r.m = product(g, h, kind).graph().size();
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    json lifted = json::array();
    for (const auto& w : rep.lifted)
      lifted.push_back(json{{"source", w.source}, {"valid", w.valid}, {"family", to_json(w.family)}});
    r.result = json{{"kind", "cartesian"},
                    {"holds", rep.holds()},
                    {"phi", {rep.phi_left, rep.phi_right, rep.phi_product}},
                    {"theta", {rep.theta_left, rep.theta_right, rep.theta_product}},
                    {"phi_bound", rep.phi_bound_holds},
                    {"theta_bound", rep.theta_bound_holds},
                    {"extreme_vertex_gives_two", opt(rep.extreme_vertex_gives_two)},
                    {"cut_vertex_gives_two", opt(rep.cut_vertex_gives_two)},
                    {"theta_two_lifts", opt(rep.theta_two_lifts)},
                    {"lifted", lifted}};
    r.witness = to_json(rep.theta_product_witness);
    std::ostringstream text;
    text << (rep.holds() ? "holds" : "VIOLATED") << ": phi " << rep.phi_left << "," << rep.phi_right
         << " -> " << rep.phi_product << "; theta " << rep.theta_left << "," << rep.theta_right
         << " -> " << rep.theta_product;
    for (const auto& w : rep.lifted)
      text << "\n" << (w.valid ? "valid   " : "INVALID ") << w.source << ": " << family_text(w.family);
    r.text = text.str();
    r.exit_code = rep.holds() ? 0 : 1;
  } else {
    auto rep = product_chi_equality(g, h, kind, opts);
    r.m = product(g, h, kind).graph().size();
    r.result = json{{"kind", std::string(to_string(kind))},
                    {"holds", rep.holds()},
                    {"adjacent_pairs_hull", rep.adjacent_pairs_hull},
                    {"chi", rep.chi},
                    {"phi", rep.phi},
                    {"theta", rep.theta}};
    r.witness = to_json(rep.theta_witness);
    std::ostringstream text;
    text << (rep.holds() ? "holds" : "VIOLATED") << ": chi=" << rep.chi << " phi=" << rep.phi
         << " theta=" << rep.theta << " adjacent pairs hull: " << (rep.adjacent_pairs_hull ? "yes" : "no");
    r.text = text.str();
    r.exit_code = rep.holds() ? 0 : 1;
  }
  return r;
}

Output cmd_reduce(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto red = reduce_coloring(g, o.k);
  Output r{red.reduced.order(), red.reduced.size()};
  r.result = graph_summary(red.reduced);
  r.result["universal_vertex"] = red.universal_vertex;
  r.result["k"] = red.k;
  r.witness = edges_json(red.reduced);
  r.text = to_edge_list(red.reduced) + "# universal vertex " + std::to_string(red.universal_vertex);
  return r;
}

Output cmd_extract(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  auto red = reduce_coloring(g, o.k);
  ConvexFamily fam;
  fam.kind = FamilyKind::Cover;
  for (const auto& s : o.sets) fam.sets.push_back(parse_set(red.reduced, s));
  auto colors = extract_coloring(g, red, fam);
  auto classes = coloring_classes(g.order(), colors);
  Output r{g.order(), g.size()};
  r.result = colors;
  r.witness = to_json(classes);
  r.text = family_text(classes);
  return r;
}

Output cmd_verify(const Options& o, std::istream& in) {
  Graph g = load(o, 0, in);
  ConvexFamily fam;
  std::string kind = o.family_kind;
  if (!o.witness_json.empty()) {
    json doc = json::parse(read_input(o.witness_json, in), nullptr, false);
    if (doc.is_discarded() || !doc.contains("witness"))
      throw Error("'" + o.witness_json + "' is not a result document with a witness");
    if (kind.empty()) kind = doc.value("command", "") == "phi" ? "cover" : "partition";
    for (const auto& set : doc["witness"]) {
      VertexSet s(g.order());
      for (const auto& v : set) {
        const auto id = v.get<std::size_t>();
        g.check_vertex(static_cast<Vertex>(id));
        s.insert(static_cast<Vertex>(id));
      }
      fam.sets.push_back(std::move(s));
    }
  } else {
    for (const auto& s : o.sets) fam.sets.push_back(parse_set(g, s));
  }
  if (kind.empty()) kind = "partition";
  if (kind != "cover" && kind != "partition") throw UsageError("--kind must be cover or partition");
  fam.kind = kind == "cover" ? FamilyKind::Cover : FamilyKind::Partition;
  Verdict verdict = validate(g, fam);
  Output r{g.order(), g.size()};
  r.result = verdict.ok() ? json("ok") : violations_json(verdict);
  r.witness = to_json(fam);
  std::string text = verdict.ok() ? "ok: convex " + std::to_string(fam.size()) + "-" + kind : "invalid";
  for (const auto& v : verdict.violations) text += "\n" + v.describe();
  r.text = text;
  r.exit_code = verdict.ok() ? 0 : 1;
  return r;
}

void add_common(CLI::App* sub, Options& o, std::size_t graphs) {
  sub->add_option("graph", o.inputs, graphs == 1 ? "Graph file ('-' for stdin)" : "Two factor graph files")
      ->required()
      ->expected(static_cast<int>(graphs));
  sub->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"auto", "el", "g6"}));
  sub->add_flag("--json", o.json, "Emit a JSON result document");
  sub->add_option("--cap", o.cap, "Size cap for exhaustive searches");
  sub->add_flag("--deterministic", o.deterministic, "Report 0 ms so output is byte-stable");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
      std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
    err << "error: unknown command '" << args[0] << "'\n";
    return 1;
  }

  CLI::App app{"Triangle-path convexity toolkit", "deltacvx"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, Handler> handlers;
  auto sub = [&](const std::string& name, const std::string& help, Handler h, std::size_t graphs = 1) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o, graphs);
    handlers[name] = std::move(h);
    return s;
  };

  sub("parse", "Parse and echo a graph", cmd_parse);
  sub("triangles", "List triangles", cmd_triangles);
  sub("interval", "One application of the interval operator", cmd_interval)
      ->add_option("--set", o.sets, "Vertex set, e.g. 0,1")->allow_extra_args(false)->required();
  sub("hull", "Convex hull of a set", cmd_hull)->add_option("--set", o.sets, "Vertex set")->allow_extra_args(false)->required();
  sub("hull-number", "Minimum hull set", cmd_hull_number);
  sub("is-convex", "Test convexity of a set", cmd_is_convex)
      ->add_option("--set", o.sets, "Vertex set")->allow_extra_args(false)->required();
  sub("extreme", "Vertices in no triangle", cmd_extreme);
  sub("two-partition", "Convex 2-partition by triangle closure", cmd_two_partition)
      ->add_option("--seed-triangle", o.seed_triangle, "'lexmin' or a,b,c");
  for (bool cover : {true, false}) {
    auto* s = sub(cover ? "phi" : "theta", cover ? "Convex cover number" : "Convex partition number",
                  [cover](const Options& opt, std::istream& is) { return family_number(opt, is, cover); });
    s->add_flag("--exact", o.exact, "Table-based exact solver (default)");
    s->add_flag("--brute-force", o.brute_force, "Iterative deepening over convex-set combinations");
  }
  sub("blocks", "Block decomposition", cmd_blocks);
  sub("chordal", "Chordality with elimination order", cmd_chordal);
  sub("chi", "Chromatic number", cmd_chi);
  sub("product", "Graph product", cmd_product, 2)
      ->add_option("--kind", o.product_kind, "cartesian | strong | lexicographic");
  sub("product-check", "Check the product theorems on two factors", cmd_product_check, 2)
      ->add_option("--kind", o.product_kind, "cartesian | strong | lexicographic");
  sub("reduce", "k-colorability to convex (k+1)-partition instance", cmd_reduce)
      ->add_option("--k", o.k, "Number of colors (>= 3)");
  auto* extract = sub("extract", "Recover a k-coloring from a convex (k+1)-cover", cmd_extract);
  extract->add_option("--k", o.k, "Number of colors (>= 3)");
  extract->add_option("--set", o.sets, "Family member (repeat)")->allow_extra_args(false)->required();
  auto* verify = sub("verify", "Validate a convex cover or partition", cmd_verify);
  verify->add_option("--set", o.sets, "Family member (repeat)")->allow_extra_args(false);
  verify->add_option("--kind", o.family_kind, "cover | partition");
  verify->add_option("--witness-json", o.witness_json, "Result document produced with --json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Output result;
  double ms = 0;
  try {
    const auto start = std::chrono::steady_clock::now();
    result = handlers.at(command)(o, in);
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << " (raise --cap to override)\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (o.deterministic) ms = 0;

  if (o.json) {
    json doc{{"command", command},
             {"graph", {{"n", result.n}, {"m", result.m}}},
             {"result", result.result},
             {"witness", result.witness},
             {"ms", ms}};
    out << doc.dump() << "\n";
  } else {
    out << result.text << "\n";
  }
  return result.exit_code;
}

}  // namespace deltacvx::cli
