#include "vcgen/requirements.hpp"

#include <algorithm>

#include "vcgen/graph.hpp"

namespace vcgen {

CoverTable::CoverTable(const LocalConfiguration& l) : present_(l.vertices()) {
  adj_.resize(static_cast<std::size_t>(l.slots()));
  for (int v = 0; v < l.slots(); ++v) adj_[v] = l.present(v) ? l.neighbors(v) : 0;
}

int CoverTable::without(VertexMask removed) {
  const VertexMask alive = present_ & ~removed;
  auto it = memo_.find(alive);
  if (it != memo_.end()) return it->second;
  int value = min_cover_size(adj_, alive);
  memo_.emplace(alive, value);
  return value;
}

bool CoverTable::satisfies(VertexMask branch, Requirement r) {
  return without(r) == without(r | branch) + popcount(branch & ~r);
}

std::vector<Requirement> crucial_set(const LocalConfiguration& l) {
  CoverTable table(l);
  return crucial_set(l, table);
}

std::vector<Requirement> crucial_set(const LocalConfiguration& l, CoverTable& table) {
  const std::vector<int> bd = mask_vertices(boundary(l));
  const int m = static_cast<int>(bd.size());
  if (m > kRequirementBoundaryCap)
    throw CapacityError("crucial_set: boundary of " + std::to_string(m) + " vertices exceeds cap " +
                        std::to_string(kRequirementBoundaryCap));

  std::vector<int> vc(std::size_t{1} << m);
  auto expand_mask = [&](std::uint32_t sub) {
    Requirement r = 0;
    for (int i = 0; i < m; ++i)
      if (sub & (1u << i)) r |= bit(bd[i]);
    return r;
  };
  for (std::uint32_t sub = 0; sub < vc.size(); ++sub) vc[sub] = table.without(expand_mask(sub));

  // Edge between S and S+v points S+v -> S when VC(H-S) == VC(H-S-v) + 1,
  // otherwise S -> S+v. Keep nodes with no incoming edge.
  std::vector<Requirement> out;
  for (std::uint32_t sub = 0; sub < vc.size(); ++sub) {
    bool incoming = false;
    for (int i = 0; i < m && !incoming; ++i) {
      const std::uint32_t b = 1u << i;
      if (sub & b) {
        incoming = vc[sub & ~b] != vc[sub] + 1;
      } else {
        incoming = vc[sub] == vc[sub | b] + 1;
      }
    }
    if (!incoming) out.push_back(expand_mask(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Requirement> eb(const LocalConfiguration& l, VertexMask b, std::span<const Requirement> reqs) {
  CoverTable table(l);
  std::vector<Requirement> out;
  for (Requirement r : reqs)
    if (table.satisfies(b, r)) out.push_back(r);
  return out;
}

}  // namespace vcgen
