#include "vcgen/subspace.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

namespace vcgen {

namespace {

constexpr int kLongestCycle = 8;

using EdgeKey = std::pair<Vertex, Vertex>;

std::vector<EdgeKey> cycle_edges(const Cycle& c) {
  std::vector<EdgeKey> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i], b = c[(i + 1) % c.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Graph plus the degree every vertex has in the instances it stands for.
class Structures {
 public:
  Structures(const Graph& g, std::vector<int> deg) : g_(g), deg_(std::move(deg)) {
    for (Cycle& c : enumerate_cycles(g_, kLongestCycle)) {
      auto len = c.size();
      by_len_[len].push_back(std::move(c));
    }
  }

  bool fires(int id) const {
    switch (id) {
      case 1:
        return any_vertex([&](Vertex v) { return deg_[v] <= 1; });
      case 2:
        return any_vertex([&](Vertex v) {
          if (deg_[v] != 3) return false;
          int twos = 0;
          for (Vertex u : g_.neighbors(v)) twos += deg_[u] == 2;
          return twos >= 2;
        });
      case 3:
        return cycle_with_one_deg2(4);
      case 4:
        return cycle_with_one_deg2(5);
      case 5:
        return cycle_with_one_deg2(6);
      case 6:
        return any_vertex([&](Vertex v) { return deg_[v] == 2; });
      case 7:
        return has(3);
      case 8:
        return has(4);
      case 9:
        return sharing(5, 5, [](int s) { return s >= 1; });
      case 10:
        return sharing(5, 7, [](int s) { return s >= 1; });
      case 11:
        return has(5);
      case 12:
        return sharing(6, 6, [](int s) { return s >= 1; });
      case 13:
        return has(6);
      case 14:
        return sharing(7, 7, [](int s) { return s == 3; });
      case 15:
        return sharing(7, 7, [](int s) { return s == 2; });
      case 16:
        return sharing(7, 7, [](int s) { return s == 1; });
      case 17:
        return has(7);
      case 18:
        return has(8);
      default:
        throw InputError("no detector for subspace " + std::to_string(id));
    }
  }

 private:
  template <class Pred>
  bool any_vertex(Pred pred) const {
    for (Vertex v : g_.vertices())
      if (pred(v)) return true;
    return false;
  }

  const std::vector<Cycle>& cycles(std::size_t len) const {
    static const std::vector<Cycle> none;
    auto it = by_len_.find(len);
    return it == by_len_.end() ? none : it->second;
  }

  bool has(std::size_t len) const { return !cycles(len).empty(); }

  bool cycle_with_one_deg2(std::size_t len) const {
    for (const Cycle& c : cycles(len)) {
      int twos = 0, threes = 0;
      for (Vertex v : c) {
        twos += deg_[v] == 2;
        threes += deg_[v] == 3;
      }
      if (twos == 1 && threes == static_cast<int>(len) - 1) return true;
    }
    return false;
  }

  template <class Pred>
  bool sharing(std::size_t la, std::size_t lb, Pred accept) const {
    const auto& a = cycles(la);
    const auto& b = cycles(lb);
    std::vector<std::vector<EdgeKey>> ea, eb;
    for (const Cycle& c : a) ea.push_back(cycle_edges(c));
    for (const Cycle& c : b) eb.push_back(cycle_edges(c));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = (la == lb ? i + 1 : 0); j < b.size(); ++j) {
        std::vector<EdgeKey> common;
        std::set_intersection(ea[i].begin(), ea[i].end(), eb[j].begin(), eb[j].end(),
                              std::back_inserter(common));
        if (accept(static_cast<int>(common.size()))) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> deg_;
  std::map<std::size_t, std::vector<Cycle>> by_len_;
};

std::vector<int> instance_degrees(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.id_bound()), 0);
  for (Vertex v : g.vertices()) deg[v] = g.degree(v);
  return deg;
}

void check_id(int id) {
  if (id < 1 || id > kSubspaceCount) throw InputError("subspace id out of range: " + std::to_string(id));
}

LocalConfiguration cycle_config(int len, int deg2_count) {
  LocalConfiguration l;
  for (int i = 0; i < len; ++i) l.add_vertex(i < deg2_count ? 0 : 1);
  for (int i = 0; i < len; ++i) l.add_edge(i, (i + 1) % len);
  return l;
}

}  // namespace

std::string subspace_name(int id) {
  check_id(id);
  return "P" + std::to_string(id);
}

int parse_subspace(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'P' || digits[0] == 'p')) digits.erase(0, 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("unknown subspace '" + text + "'");
  int id = std::stoi(digits);
  check_id(id);
  return id;
}

bool detect(int id, const Graph& g) {
  return Structures(g, instance_degrees(g)).fires(id);
}

int classify(const Graph& g) {
  if (g.max_degree() > 3) throw InputError("classify needs a graph of maximum degree 3");
  Structures s(g, instance_degrees(g));
  for (int id = 1; id < kSubspaceCount; ++id)
    if (s.fires(id)) return id;
  return kSubspaceCount;
}

Assertions assertions_for(int id) {
  check_id(id);
  Assertions a;
  a.no_degree_le1 = id >= 2;
  a.no_deg3_with_two_deg2 = id >= 3;
  a.no_degree_2 = id >= 7;
  a.excluded_below = id;
  return a;
}

LocalConfiguration root_config(int id) {
  check_id(id);
  LocalConfiguration l;
  switch (id) {
    case 1:
      l.add_vertex(1);
      return l;
    case 2: {
      int c = l.add_vertex(1);
      for (int i = 0; i < 2; ++i) l.add_edge(c, l.add_vertex(1));
      return l;
    }
    case 3:
    case 4:
    case 5:
      return cycle_config(id + 1, 1);
    case 6:
      l.add_vertex(2);
      return l;
    case 7:
      return cycle_config(3, 0);
    case 8:
      return cycle_config(4, 0);
    case 9:
    case 10:
    case 11:
      return cycle_config(5, 0);
    case 12:
    case 13:
      return cycle_config(6, 0);
    case 14:
    case 15:
    case 16:
    case 17:
      return cycle_config(7, 0);
    case 18:
      return cycle_config(8, 0);
    default:
      l.add_vertex(3);
      return l;
  }
}

SubspaceDescriptor describe_subspace(int id) {
  SubspaceDescriptor d;
  d.id = id;
  d.assertions = assertions_for(id);
  d.root = root_config(id);
  d.cost_lemma = cost_lemma(d.assertions);
  return d;
}

bool contains_forbidden(const LocalConfiguration& l, int id) {
  check_id(id);
  if (id == 1) return false;
  Graph h = l.to_graph();
  std::vector<int> deg(static_cast<std::size_t>(h.id_bound()), 0);
  for (int v : mask_vertices(l.vertices())) deg[v] = true_degree(l, v);
  Structures s(h, std::move(deg));
  for (int j = 1; j < id; ++j)
    if (s.fires(j)) return true;
  return false;
}

}  // namespace vcgen
