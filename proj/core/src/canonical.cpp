#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "vcgen/local_config.hpp"

namespace vcgen {

namespace {

// Colour refinement seeded with (d, deg_H). Colour ranks are assigned by
// sorting signatures, so they depend only on the isomorphism class.
std::vector<int> refined_colors(const LocalConfiguration& l, const std::vector<int>& verts) {
  std::vector<int> color(static_cast<std::size_t>(l.slots()), -1);
  {
    std::map<std::pair<int, int>, int> rank;
    for (int v : verts) rank[{l.incomplete(v), l.degree(v)}] = 0;
    int r = 0;
    for (auto& [sig, value] : rank) value = r++;
    for (int v : verts) color[v] = rank[{l.incomplete(v), l.degree(v)}];
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> rank;
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(l.slots()));
    for (int v : verts) {
      std::vector<int> s{color[v]};
      std::vector<int> around;
      for (int u : mask_vertices(l.neighbors(v))) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
      rank[s] = 0;
      sig[v] = std::move(s);
    }
    int r = 0;
    for (auto& [s, value] : rank) value = r++;
    for (int v : verts) color[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

struct Partial {
  std::vector<int> order;
  VertexMask used = 0;
};

}  // namespace

CanonicalForm canonical_form(const LocalConfiguration& l) {
  const std::vector<int> verts = mask_vertices(l.vertices());
  const int n = static_cast<int>(verts.size());
  if (n > kCanonicalCap)
    throw CapacityError("canonical_key: " + std::to_string(n) + " vertices exceeds cap " +
                        std::to_string(kCanonicalCap));

  const std::vector<int> color = refined_colors(l, verts);
  std::vector<int> slot_colors;
  for (int v : verts) slot_colors.push_back(color[v]);
  std::sort(slot_colors.begin(), slot_colors.end());

  std::string key;
  key.push_back(static_cast<char>(n));
  std::vector<Partial> level{Partial{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Partial> next;
    std::uint32_t best_row = 0;
    bool have = false;
    for (const Partial& p : level) {
      for (int w : verts) {
        if ((p.used & bit(w)) || color[w] != slot_colors[i]) continue;
        std::uint32_t row = 0;
        for (int j = 0; j < i; ++j)
          if (l.has_edge(w, p.order[j])) row |= std::uint32_t{1} << (i - 1 - j);
        if (have && row < best_row) continue;
        if (!have || row > best_row) {
          next.clear();
          best_row = row;
          have = true;
        }
        Partial q = p;
        q.order.push_back(w);
        q.used |= bit(w);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
    const int w = level.front().order.back();
    key.push_back(static_cast<char>(l.incomplete(w)));
    key.push_back(static_cast<char>(l.degree(w)));
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((best_row >> (8 * b)) & 0xff));
  }
  return CanonicalForm{std::move(key), level.front().order};
}

}  // namespace vcgen
