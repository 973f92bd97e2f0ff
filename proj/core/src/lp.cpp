#include "vcgen/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

namespace vcgen {

namespace {

constexpr double kPivotEps = 1e-12;

// Dense tableau for: maximize sum_r y_r, s.t. A y <= c, y >= 0, where
// A[i][r] = 1 iff branch i satisfies requirement r. The origin is feasible
// because every cost is positive.
class PackingSimplex {
 public:
  PackingSimplex(const CoverProgram& p)
      : rows_(p.costs.size()), reqs_(static_cast<std::size_t>(p.num_requirements)), cols_(reqs_ + rows_) {
    tab_.assign(rows_ * (cols_ + 1), 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (int r : p.satisfied[i]) at(i, static_cast<std::size_t>(r)) = 1.0;
      at(i, reqs_ + i) = 1.0;
      at(i, cols_) = p.costs[i];
    }
    profit_.assign(cols_ + 1, 0.0);
    for (std::size_t r = 0; r < reqs_; ++r) profit_[r] = 1.0;
    basis_.resize(rows_);
    std::iota(basis_.begin(), basis_.end(), reqs_);
  }

  // false when unbounded (some requirement cannot be covered)
  bool run() {
    for (;;) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (profit_[j] > kPivotEps) {
          enter = j;
          break;
        }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        double a = at(i, enter);
        if (a <= kPivotEps) continue;
        double ratio = at(i, cols_) / a;
        if (ratio < best - kPivotEps || (leave != rows_ && std::abs(ratio - best) <= kPivotEps && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows_) return false;
      pivot(leave, enter);
    }
  }

  // Dual price of row i: the covering weight of branch i.
  double price(std::size_t i) const { return std::max(0.0, -profit_[reqs_ + i]); }
  double value() const { return -profit_[cols_]; }

 private:
  double& at(std::size_t i, std::size_t j) { return tab_[i * (cols_ + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return tab_[i * (cols_ + 1) + j]; }

  void pivot(std::size_t row, std::size_t col) {
    const double inv = 1.0 / at(row, col);
    for (std::size_t j = 0; j <= cols_; ++j) at(row, j) *= inv;
    at(row, col) = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const double f = at(i, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(row, j);
      at(i, col) = 0.0;
    }
    const double f = profit_[col];
    if (f != 0.0) {
      for (std::size_t j = 0; j <= cols_; ++j) profit_[j] -= f * at(row, j);
      profit_[col] = 0.0;
    }
    basis_[row] = col;
  }

  std::size_t rows_, reqs_, cols_;
  std::vector<double> tab_;
  std::vector<double> profit_;
  std::vector<std::size_t> basis_;
};

bool every_requirement_reachable(const CoverProgram& p) {
  std::vector<char> hit(static_cast<std::size_t>(p.num_requirements), 0);
  for (const auto& s : p.satisfied)
    for (int r : s) hit[r] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

}  // namespace

double objective(std::span<const double> costs, std::span<const double> weights) {
  double total = 0.0;
  for (std::size_t i = 0; i < costs.size(); ++i) total += costs[i] * weights[i];
  return total;
}

double min_coverage(const CoverProgram& p, std::span<const double> weights) {
  std::vector<double> cover(static_cast<std::size_t>(p.num_requirements), 0.0);
  for (std::size_t i = 0; i < p.satisfied.size(); ++i)
    for (int r : p.satisfied[i]) cover[r] += weights[i];
  double worst = std::numeric_limits<double>::infinity();
  for (double c : cover) worst = std::min(worst, c);
  return worst;
}

CoverSolution solve_lp(const CoverProgram& p) {
  CoverSolution out;
  if (!every_requirement_reachable(p)) return out;
  out.weights.assign(p.costs.size(), 0.0);
  if (p.num_requirements == 0) {
    out.feasible = true;
    return out;
  }
  PackingSimplex simplex(p);
  if (!simplex.run()) return out;
  out.feasible = true;
  for (std::size_t i = 0; i < p.costs.size(); ++i) out.weights[i] = std::min(1.0, simplex.price(i));
  out.objective = objective(p.costs, out.weights);
  return out;
}

std::vector<double> snap_weights(const CoverProgram& p, std::span<const double> weights) {
  constexpr double kGrid = 1073741824.0;  // 2^30
  std::vector<double> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    out[i] = std::min(1.0, std::ceil(std::max(0.0, weights[i]) * kGrid) / kGrid);

  std::vector<std::vector<std::size_t>> by_req(static_cast<std::size_t>(p.num_requirements));
  for (std::size_t i = 0; i < p.satisfied.size(); ++i)
    for (int r : p.satisfied[i]) by_req[r].push_back(i);
  for (std::size_t r = 0; r < by_req.size(); ++r) {
    double have = 0.0;
    for (std::size_t i : by_req[r]) have += out[i];
    if (have >= 1.0 || by_req[r].empty()) continue;
    std::size_t cheapest = by_req[r].front();
    for (std::size_t i : by_req[r])
      if (p.costs[i] < p.costs[cheapest]) cheapest = i;
    out[cheapest] = std::min(1.0, out[cheapest] + std::ceil((1.0 - have) * kGrid) / kGrid);
  }
  return out;
}

CoverSolution solve_ilp(const CoverProgram& p) {
  CoverSolution out;
  if (!every_requirement_reachable(p)) return out;
  const std::size_t n = p.costs.size();
  const std::size_t m = static_cast<std::size_t>(p.num_requirements);
  out.feasible = true;
  out.weights.assign(n, 0.0);
  if (m == 0) return out;

  std::vector<boost::dynamic_bitset<>> covers(n, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (int r : p.satisfied[i]) covers[i].set(static_cast<std::size_t>(r));

  const bool use_lp_bound = n > kIlpExhaustiveCap;
  double best = std::numeric_limits<double>::infinity();
  std::vector<char> chosen(n, 0), best_choice(n, 0), banned(n, 0);

  auto lower_bound = [&](const boost::dynamic_bitset<>& uncovered) {
    if (!use_lp_bound) return 0.0;
    std::vector<int> index(m, -1);
    int k = 0;
    for (std::size_t r = uncovered.find_first(); r != boost::dynamic_bitset<>::npos; r = uncovered.find_next(r))
      index[r] = k++;
    std::vector<double> costs;
    std::vector<std::vector<int>> sat;
    for (std::size_t i = 0; i < n; ++i) {
      if (banned[i] || chosen[i]) continue;
      std::vector<int> s;
      for (int r : p.satisfied[i])
        if (index[r] >= 0) s.push_back(index[r]);
      if (s.empty()) continue;
      costs.push_back(p.costs[i]);
      sat.push_back(std::move(s));
    }
    CoverSolution relax = solve_lp(CoverProgram{costs, sat, k});
    return relax.feasible ? relax.objective : std::numeric_limits<double>::infinity();
  };

  auto dfs = [&](auto&& self, const boost::dynamic_bitset<>& uncovered, double spent) -> void {
    if (spent >= best) return;
    if (uncovered.none()) {
      best = spent;
      best_choice = chosen;
      return;
    }
    if (spent + lower_bound(uncovered) >= best * (1 + 1e-12)) return;
    // most constrained uncovered requirement
    std::size_t pick = m;
    std::size_t options = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = uncovered.find_first(); r != boost::dynamic_bitset<>::npos; r = uncovered.find_next(r)) {
      std::size_t c = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!banned[i] && !chosen[i] && covers[i].test(r)) ++c;
      if (c < options) {
        options = c;
        pick = r;
      }
    }
    if (options == 0) return;
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < n; ++i)
      if (!banned[i] && !chosen[i] && covers[i].test(pick)) cands.push_back(i);
    std::sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
      return p.costs[a] < p.costs[b] || (p.costs[a] == p.costs[b] && a < b);
    });
    std::vector<std::size_t> newly_banned;
    for (std::size_t i : cands) {
      chosen[i] = 1;
      self(self, uncovered - covers[i], spent + p.costs[i]);
      chosen[i] = 0;
      banned[i] = 1;
      newly_banned.push_back(i);
    }
    for (std::size_t i : newly_banned) banned[i] = 0;
  };

  boost::dynamic_bitset<> all(m);
  all.set();
  dfs(dfs, all, 0.0);
  if (!std::isfinite(best)) {
    out.feasible = false;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) out.weights[i] = best_choice[i] ? 1.0 : 0.0;
  out.objective = objective(p.costs, out.weights);
  return out;
}

}  // namespace vcgen
