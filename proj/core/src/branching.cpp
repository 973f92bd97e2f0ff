#include "vcgen/branching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vcgen {

int cost_lemma(const Assertions& a) {
  if (a.no_degree_2) return 14;
  if (a.no_deg3_with_two_deg2) return 13;
  return 12;
}

std::vector<Branch> seed_branches(const LocalConfiguration& l) {
  if (l.size() > kBranchSeedCap) throw CapacityError("seed_branches: configuration too large");
  const std::vector<int> verts = mask_vertices(l.vertices());
  std::vector<Branch> out;
  for (std::uint32_t sub = 1; sub < (1u << verts.size()); ++sub) {
    Branch b = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (sub & (1u << i)) b |= bit(verts[i]);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Branch> extend_branches(std::span<const Branch> prev, int u, int v) {
  std::vector<Branch> out;
  out.reserve(prev.size() * 4);
  for (Branch b : prev) {
    out.push_back(b);
    out.push_back(b | bit(u));
    out.push_back(b | bit(v));
    out.push_back(b | bit(u) | bit(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LocalConfiguration apply_branch(const LocalConfiguration& l, Branch b) {
  if ((b & ~l.vertices()) != 0) throw InputError("branch contains vertices outside the configuration");
  return l.without(b);
}

CostBound cost_bound(const LocalConfiguration& l, Branch b, const Measure& m, int lemma) {
  const LocalConfiguration after = apply_branch(l, b);
  long before_n[4] = {0, 0, 0, 0};
  long after_n[4] = {0, 0, 0, 0};
  for (int v : mask_vertices(l.vertices())) {
    int t = true_degree(l, v);
    if (t <= 3) ++before_n[t];
  }
  for (int v : mask_vertices(after.vertices())) {
    int t = true_degree(after, v);
    if (t <= 3) ++after_n[t];
  }

  CostBound out;
  out.lemma = lemma;
  out.dk = Rational(-popcount(b));
  out.dn1 = Rational(after_n[1] - before_n[1]);
  out.dn2 = Rational(after_n[2] - before_n[2]);
  out.dn3 = Rational(after_n[3] - before_n[3]);

  BoundaryProfile& p = out.profile;
  for (int v : mask_vertices(boundary(l))) {
    if (b & bit(v)) {
      const int t = true_degree(l, v), d = l.incomplete(v);
      if (t == 3 && d == 1) ++p.d31;
      if (t == 3 && d == 2) ++p.d32;
      if (t == 2 && d == 1) ++p.d21;
      if (t == 3 && d == 3) ++p.d33;
      if (t == 2 && d == 2) ++p.d22;
    } else {
      const int t = true_degree(after, v), d = after.incomplete(v);
      if (t == 2 && d == 1) ++p.r21;
      if (t == 2 && d == 2) ++p.r22;
      if (t == 1 && d == 1) ++p.r11;
    }
  }

  const int receivers = p.r21 + 2 * p.r22 + p.r11;
  int count = 0;
  switch (lemma) {
    case 12: count = p.d31 + 2 * p.d32 + 3 * p.d33 + std::min(p.d21 + 2 * p.d22, receivers); break;
    case 13:
      count = p.d31 + p.d32 + p.d33 + std::min(p.d32 + 2 * p.d33 + p.d21 + 2 * p.d22, receivers);
      break;
    case 14: count = std::min(p.d31 + 2 * p.d32 + 3 * p.d33 + p.d21 + 2 * p.d22, receivers); break;
    default: throw InputError("unknown cost lemma " + std::to_string(lemma));
  }
  const Rational per_edge = std::max(m.beta1 - m.beta2, -m.beta1);
  const Rational correction = std::max(Rational(0), Rational(count) * per_edge);
  out.exponent = m.alpha * out.dk + m.beta1 * out.dn1 + m.beta2 * out.dn2 + m.beta3 * out.dn3 + correction;
  return out;
}

CostBound cost_bound(const LocalConfiguration& l, Branch b, const Measure& m, const Assertions& a) {
  return cost_bound(l, b, m, cost_lemma(a));
}

double rounded_cost(const Rational& exponent) {
  if (exponent.denominator() == 1) return std::ldexp(1.0, static_cast<int>(exponent.numerator()));
  return std::exp2(to_double(exponent)) * (1.0 + kCostMargin);
}

std::vector<std::size_t> prune_dominated(std::span<const double> costs,
                                         std::span<const std::vector<int>> satisfied) {
  std::vector<std::size_t> order(costs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // A dominating branch always sorts before the branches it dominates.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (costs[a] != costs[b]) return costs[a] < costs[b];
    return satisfied[a].size() > satisfied[b].size();
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : kept) {
      if (costs[j] <= costs[i] &&
          std::includes(satisfied[j].begin(), satisfied[j].end(), satisfied[i].begin(), satisfied[i].end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Branch> prune_dominated(const LocalConfiguration& l, std::span<const Branch> branches,
                                    std::span<const Requirement> crucial, const Measure& m,
                                    const Assertions& a) {
  CoverTable table(l);
  std::vector<double> costs;
  std::vector<std::vector<int>> sat;
  for (Branch b : branches) {
    costs.push_back(rounded_cost(cost_bound(l, b, m, a).exponent));
    std::vector<int> s;
    for (std::size_t r = 0; r < crucial.size(); ++r)
      if (table.satisfies(b, crucial[r])) s.push_back(static_cast<int>(r));
    sat.push_back(std::move(s));
  }
  std::vector<Branch> out;
  for (std::size_t i : prune_dominated(costs, sat)) out.push_back(branches[i]);
  return out;
}

}  // namespace vcgen
