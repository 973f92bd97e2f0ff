#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "vcgen/rulegen.hpp"
#include "vcgen/subspace.hpp"

namespace vcgen {

using Json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

constexpr int kFormatVersion = 1;

double parse_double(const std::string& s) {
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw InputError("bad number '" + s + "'");
  return x;
}

Json config_json(const LocalConfiguration& l) {
  Json d = Json::array();
  for (int v = 0; v < l.slots(); ++v) d.push_back(l.present(v) ? l.incomplete(v) : -1);
  Json edges = Json::array();
  for (int v = 0; v < l.slots(); ++v)
    for (int u : mask_vertices(l.neighbors(v)))
      if (v < u) edges.push_back(Json::array({v, u}));
  return Json{{"d", d}, {"edges", edges}};
}

LocalConfiguration config_from(const Json& j, int delta) {
  LocalConfiguration l(delta);
  const auto& d = j.at("d");
  std::vector<int> absent;
  for (std::size_t v = 0; v < d.size(); ++v) {
    int c = d[v].get<int>();
    l.add_vertex(c < 0 ? 0 : c);
    if (c < 0) absent.push_back(static_cast<int>(v));
  }
  for (const auto& e : j.at("edges")) l.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (!absent.empty()) {
    VertexMask gone = 0;
    for (int v : absent) gone |= bit(v);
    l = l.without(gone);
  }
  return l;
}

Json mask_json(VertexMask m) {
  Json out = Json::array();
  for (int v : mask_vertices(m)) out.push_back(v);
  return out;
}

VertexMask mask_from(const Json& j) {
  VertexMask m = 0;
  for (const auto& v : j) {
    int x = v.get<int>();
    if (x < 0 || x >= kMaxConfigSlots) throw InputError("vertex out of range in rule table");
    m |= bit(x);
  }
  return m;
}

}  // namespace

std::string table_to_json(const RuleTable& t) {
  Json j;
  j["format"] = "vcgen-rule-table";
  j["version"] = kFormatVersion;
  j["subspace"] = t.subspace_id > 0 ? subspace_name(t.subspace_id) : std::string("custom");
  j["measure"] = to_string(t.measure);
  j["mode"] = to_string(t.mode);
  j["delta"] = t.delta;
  j["assertions"] = Json{{"no_degree_le1", t.assertions.no_degree_le1},
                         {"no_deg3_with_two_deg2", t.assertions.no_deg3_with_two_deg2},
                         {"no_degree_2", t.assertions.no_degree_2},
                         {"excluded_below", t.assertions.excluded_below}};

  Json nodes = Json::array();
  Json leaves = Json::array();
  for (std::size_t i = 0; i < t.tree.nodes.size(); ++i) {
    const TreeNode& n = t.tree.nodes[i];
    Json jn;
    jn["id"] = i;
    jn["kind"] = to_string(n.kind);
    jn["depth"] = n.depth;
    jn["config"] = config_json(n.config);
    switch (n.kind) {
      case NodeKind::expanded: {
        jn["selected"] = n.selected;
        Json ch = Json::array();
        for (const TreeEdge& e : n.children) ch.push_back(Json{{"label", to_string(e.label)}, {"node", e.node}});
        jn["children"] = ch;
        break;
      }
      case NodeKind::simplification:
        jn["simplification_rule"] = n.simplification_rule;
        break;
      case NodeKind::reference:
        jn["target"] = n.target;
        jn["perm"] = n.perm;
        break;
      case NodeKind::rule: {
        Json branches = Json::array();
        Json weights = Json::array();
        for (std::size_t b = 0; b < n.branches.size(); ++b) {
          branches.push_back(mask_json(n.branches[b]));
          weights.push_back(format_double(n.weights[b]));
        }
        leaves.push_back(Json{{"node", i},
                              {"rule", to_string(n.rule_kind)},
                              {"branches", branches},
                              {"weights", weights},
                              {"objective", format_double(n.objective)}});
        break;
      }
      default:
        break;
    }
    nodes.push_back(jn);
  }
  j["nodes"] = nodes;
  j["leaves"] = leaves;

  const GenMetadata& md = t.metadata;
  j["metadata"] = Json{{"nodes", md.nodes},
                       {"rules", md.rules},
                       {"references", md.references},
                       {"simplifications", md.simplifications},
                       {"constants", md.constants},
                       {"unreachable", md.unreachable},
                       {"depth_reached", md.depth_reached},
                       {"limit_hit", md.limit_hit},
                       {"limit", md.limit}};
  // one line per node and leaf keeps files readable and diffs small
  std::string out = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    out += first ? "" : ",\n";
    first = false;
    out += " " + Json(key).dump() + ": ";
    if (value.is_array() && (key == "nodes" || key == "leaves")) {
      out += "[";
      for (std::size_t i = 0; i < value.size(); ++i) out += (i ? ",\n  " : "\n  ") + value[i].dump();
      out += value.empty() ? "]" : "\n ]";
    } else {
      out += value.dump();
    }
  }
  return out + "\n}\n";
}

void write_table(std::ostream& out, const RuleTable& t) { out << table_to_json(t); }

RuleTable table_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("rule table is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "vcgen-rule-table") throw InputError("not a rule table");
    if (j.at("version").get<int>() != kFormatVersion) throw InputError("unsupported rule table version");
    RuleTable t;
    const std::string sub = j.at("subspace").get<std::string>();
    t.subspace_id = sub == "custom" ? 0 : parse_subspace(sub);
    t.measure = parse_measure(j.at("measure").get<std::string>());
    t.mode = parse_rule_kind(j.at("mode").get<std::string>());
    t.delta = j.at("delta").get<int>();
    const Json& a = j.at("assertions");
    t.assertions.no_degree_le1 = a.at("no_degree_le1").get<bool>();
    t.assertions.no_deg3_with_two_deg2 = a.at("no_deg3_with_two_deg2").get<bool>();
    t.assertions.no_degree_2 = a.at("no_degree_2").get<bool>();
    t.assertions.excluded_below = a.at("excluded_below").get<int>();

    const Json& nodes = j.at("nodes");
    t.tree.nodes.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Json& jn = nodes[i];
      if (jn.at("id").get<std::size_t>() != i) throw InputError("node ids out of order");
      TreeNode& n = t.tree.nodes[i];
      n.kind = parse_node_kind(jn.at("kind").get<std::string>());
      n.depth = jn.at("depth").get<int>();
      n.config = config_from(jn.at("config"), t.delta);
      if (n.kind == NodeKind::expanded) {
        n.selected = jn.at("selected").get<int>();
        for (const Json& e : jn.at("children"))
          n.children.push_back(TreeEdge{parse_label(e.at("label").get<std::string>()), e.at("node").get<int>()});
      } else if (n.kind == NodeKind::simplification) {
        n.simplification_rule = jn.at("simplification_rule").get<int>();
      } else if (n.kind == NodeKind::reference) {
        n.target = jn.at("target").get<int>();
        n.perm = jn.at("perm").get<std::vector<int>>();
      }
    }
    for (const Json& leaf : j.at("leaves")) {
      const std::size_t at = leaf.at("node").get<std::size_t>();
      if (at >= t.tree.nodes.size() || t.tree.nodes[at].kind != NodeKind::rule)
        throw InputError("leaf entry does not name a rule node");
      TreeNode& n = t.tree.nodes[at];
      n.rule_kind = parse_rule_kind(leaf.at("rule").get<std::string>());
      for (const Json& b : leaf.at("branches")) n.branches.push_back(mask_from(b));
      for (const Json& w : leaf.at("weights")) n.weights.push_back(parse_double(w.get<std::string>()));
      n.objective = parse_double(leaf.at("objective").get<std::string>());
    }

    const Json& md = j.at("metadata");
    t.metadata.nodes = md.at("nodes").get<long>();
    t.metadata.rules = md.at("rules").get<long>();
    t.metadata.references = md.at("references").get<long>();
    t.metadata.simplifications = md.at("simplifications").get<long>();
    t.metadata.constants = md.at("constants").get<long>();
    t.metadata.unreachable = md.at("unreachable").get<long>();
    t.metadata.depth_reached = md.at("depth_reached").get<int>();
    t.metadata.limit_hit = md.at("limit_hit").get<bool>();
    t.metadata.limit = md.at("limit").get<std::string>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed rule table: ") + e.what());
  } catch (const ContractError& e) {
    throw InputError(std::string("malformed rule table: ") + e.what());
  }
}

RuleTable read_table(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return table_from_json(buf.str());
}

}  // namespace vcgen
