#include "vcgen/local_config.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "vcgen/graph_io.hpp"

namespace vcgen {

std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int LocalConfiguration::add_vertex(int incomplete) {
  if (slots() >= kMaxConfigSlots) throw CapacityError("configuration has too many vertex slots");
  if (incomplete < 0 || incomplete > delta_) throw InputError("incomplete-edge count out of range");
  adj_.push_back(0);
  d_.push_back(incomplete);
  present_ |= bit(slots() - 1);
  return slots() - 1;
}

void LocalConfiguration::add_edge(int u, int v) {
  if (!present(u) || !present(v)) throw InputError("edge endpoint is not a configuration vertex");
  if (u == v) throw InputError("self-loop in configuration");
  if (has_edge(u, v)) return;
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  if (degree(u) + d_[u] > delta_ || degree(v) + d_[v] > delta_)
    throw InputError("true degree exceeds the degree bound");
}

void LocalConfiguration::set_incomplete(int v, int count) {
  if (!present(v)) throw InputError("unknown configuration vertex " + std::to_string(v));
  if (count < 0 || degree(v) + count > delta_) throw InputError("incomplete-edge count out of range");
  d_[v] = count;
}

int LocalConfiguration::num_edges() const {
  int total = 0;
  for (int v : mask_vertices(present_)) total += degree(v);
  return total / 2;
}

LocalConfiguration LocalConfiguration::without(VertexMask removed) const {
  LocalConfiguration out = *this;
  removed &= present_;
  out.present_ &= ~removed;
  for (int v = 0; v < slots(); ++v) {
    if (removed & bit(v)) {
      out.adj_[v] = 0;
    } else {
      out.adj_[v] &= ~removed;
    }
  }
  return out;
}

Graph LocalConfiguration::to_graph() const {
  Graph g(slots());
  for (int v = 0; v < slots(); ++v)
    for (int u : mask_vertices(adj_[v]))
      if (v < u) g.add_edge(v, u);
  for (int v = 0; v < slots(); ++v)
    if (!present(v)) g.remove_vertex(v);
  return g;
}

VertexMask boundary(const LocalConfiguration& l) {
  VertexMask out = 0;
  for (int v : mask_vertices(l.vertices()))
    if (l.incomplete(v) > 0) out |= bit(v);
  return out;
}

int true_degree(const LocalConfiguration& l, int v) {
  if (!l.present(v)) throw InputError("unknown configuration vertex " + std::to_string(v));
  return l.degree(v) + l.incomplete(v);
}

std::string to_string(const ExpansionLabel& label) {
  return (label.kind == ExpansionLabel::Kind::internal ? "internal(" : "new(") +
         std::to_string(label.value) + ")";
}

ExpansionLabel parse_label(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InputError("malformed expansion label '" + text + "'");
  std::string head = text.substr(0, open);
  int value = std::stoi(text.substr(open + 1, close - open - 1));
  if (head == "internal") return {ExpansionLabel::Kind::internal, value};
  if (head == "new") return {ExpansionLabel::Kind::fresh, value};
  throw InputError("malformed expansion label '" + text + "'");
}

int select_boundary_vertex(const LocalConfiguration& l) {
  int best = -1;
  for (int v : mask_vertices(boundary(l))) {
    if (best < 0 || l.incomplete(v) < l.incomplete(best) ||
        (l.incomplete(v) == l.incomplete(best) && l.degree(v) < l.degree(best)))
      best = v;
  }
  return best;
}

std::vector<ExpansionChild> expand(const LocalConfiguration& l, int delta) {
  const int v = select_boundary_vertex(l);
  if (v < 0) throw ContractError("expand: configuration has an empty boundary");
  std::vector<ExpansionChild> out;
  for (int u : mask_vertices(boundary(l) & ~bit(v))) {
    if (l.has_edge(u, v)) continue;
    ExpansionChild child{{ExpansionLabel::Kind::internal, u}, l, v, u};
    child.config.set_incomplete(u, l.incomplete(u) - 1);
    child.config.set_incomplete(v, l.incomplete(v) - 1);
    child.config.add_edge(u, v);
    out.push_back(std::move(child));
  }
  for (int dd = 1; dd <= delta; ++dd) {
    ExpansionChild child{{ExpansionLabel::Kind::fresh, dd}, l, v, -1};
    child.config.set_incomplete(v, l.incomplete(v) - 1);
    int u = child.config.add_vertex(dd - 1);
    child.config.add_edge(u, v);
    child.other = u;
    out.push_back(std::move(child));
  }
  return out;
}

std::optional<std::vector<int>> is_expansion(const LocalConfiguration& big,
                                             const LocalConfiguration& small) {
  const std::vector<int> order = mask_vertices(small.vertices());
  const std::vector<int> targets = mask_vertices(big.vertices());
  std::vector<int> phi(static_cast<std::size_t>(small.slots()), -1);
  VertexMask used = 0;

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    for (int w : targets) {
      if (used & bit(w)) continue;
      if (true_degree(big, w) != true_degree(small, v) || big.degree(w) < small.degree(v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (small.has_edge(v, order[j]) && !big.has_edge(w, phi[order[j]])) ok = false;
      if (!ok) continue;
      phi[v] = w;
      used |= bit(w);
      if (self(self, i + 1)) return true;
      used &= ~bit(w);
      phi[v] = -1;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return phi;
}

std::string canonical_key(const LocalConfiguration& l) { return canonical_form(l).key; }

void write_config(std::ostream& out, const LocalConfiguration& l) {
  out << "delta " << l.delta() << '\n';
  write_graph(out, l.to_graph());
  for (int v : mask_vertices(l.vertices()))
    if (l.incomplete(v) > 0) out << "d " << v << ' ' << l.incomplete(v) << '\n';
}

LocalConfiguration read_config(std::istream& in) {
  std::stringstream graph_part;
  std::vector<std::pair<int, int>> counts;
  int delta = 3;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "d") {
      int v = 0, c = 0;
      if (!(ls >> v >> c)) throw InputError("expected 'd <v> <count>'");
      counts.emplace_back(v, c);
    } else if (tag == "delta") {
      if (!(ls >> delta)) throw InputError("expected 'delta <n>'");
    } else {
      graph_part << line << '\n';
    }
  }
  Graph g = read_graph(graph_part);
  LocalConfiguration l(delta);
  for (int v = 0; v < g.id_bound(); ++v) l.add_vertex(0);
  for (auto [v, c] : counts) {
    if (!l.present(v)) throw InputError("d line for unknown vertex");
    l.set_incomplete(v, c);
  }
  for (auto [u, v] : g.edges()) l.add_edge(u, v);
  return l;
}

std::string describe(const LocalConfiguration& l) {
  std::ostringstream os;
  os << "V={";
  bool first = true;
  for (int v : mask_vertices(l.vertices())) {
    os << (first ? "" : ",") << v << ":d" << l.incomplete(v);
    first = false;
  }
  os << "} E={";
  first = true;
  for (int v : mask_vertices(l.vertices()))
    for (int u : mask_vertices(l.neighbors(v)))
      if (v < u) {
        os << (first ? "" : ",") << v << '-' << u;
        first = false;
      }
  os << '}';
  return os.str();
}

}  // namespace vcgen
