#include "vcgen/graph_io.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace vcgen {

namespace {

Instance parse(std::istream& in, bool want_budget) {
  std::optional<Graph> g;
  std::optional<long> budget;
  int expected_edges = 0;
  int seen_edges = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& what) {
      throw InputError("line " + std::to_string(lineno) + ": " + what);
    };
    if (tag == "p") {
      std::string kind;
      int n = 0;
      if (!(ls >> kind >> n >> expected_edges) || kind != "vc" || n < 0 || expected_edges < 0)
        fail("expected 'p vc <n> <m>'");
      if (g) fail("duplicate header");
      g.emplace(n);
    } else if (tag == "e") {
      if (!g) fail("edge before header");
      long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (u < 0 || v < 0 || u >= g->id_bound() || v >= g->id_bound()) fail("endpoint out of range");
      if (u == v) fail("self-loop");
      if (g->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail("parallel edge");
      g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      ++seen_edges;
    } else if (tag == "k") {
      long k = 0;
      if (!(ls >> k)) fail("expected 'k <budget>'");
      budget = k;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!g) throw InputError("missing 'p vc' header");
  if (seen_edges != expected_edges)
    throw InputError("header announces " + std::to_string(expected_edges) + " edges, found " +
                     std::to_string(seen_edges));
  if (want_budget && !budget) throw InputError("missing 'k <budget>' line");
  return Instance{std::move(*g), budget.value_or(0)};
}

}  // namespace

Graph read_graph(std::istream& in) { return parse(in, false).graph; }

Instance read_instance(std::istream& in) { return parse(in, true); }

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_instance(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p vc " << g.id_bound() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_instance(std::ostream& out, const Instance& inst) {
  write_graph(out, inst.graph);
  out << "k " << inst.budget << '\n';
}

}  // namespace vcgen
