#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "vcgen/local_config.hpp"

namespace vcgen {

// A boundary requirement: the boundary vertices the exterior forces into the
// cover. Stored as a mask over the configuration's vertex slots.
using Requirement = VertexMask;

inline constexpr int kRequirementBoundaryCap = 12;

// Memoized VC(H - removed) for one configuration.
class CoverTable {
 public:
  explicit CoverTable(const LocalConfiguration& l);

  int without(VertexMask removed);

  // VC(H - R) == VC(H - R - b) + |b \ R|
  bool satisfies(VertexMask branch, Requirement r);

 private:
  std::vector<std::uint64_t> adj_;
  VertexMask present_;
  std::unordered_map<VertexMask, int> memo_;
};

// In-degree-0 nodes of the requirement DAG over all subsets of the boundary,
// ascending by mask. Throws CapacityError when the boundary exceeds the cap.
std::vector<Requirement> crucial_set(const LocalConfiguration& l);
std::vector<Requirement> crucial_set(const LocalConfiguration& l, CoverTable& table);

// The members of `reqs` that branch `b` satisfies.
std::vector<Requirement> eb(const LocalConfiguration& l, VertexMask b, std::span<const Requirement> reqs);

}  // namespace vcgen
