#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "torus_transport/errors.hpp"
#include "torus_transport/ot.hpp"

namespace torus_transport {

namespace {

constexpr int kAtomCap = 256;

// Dense transportation simplex (MODI / u-v method) on the complete bipartite
// graph.  Sizes are capped, so dense scans are the simple and fast choice.
class TransportSimplex {
 public:
  TransportSimplex(std::vector<double> supply, std::vector<double> demand,
                   std::vector<double> cost)
      : n_(static_cast<int>(supply.size())),
        m_(static_cast<int>(demand.size())),
        supply_(std::move(supply)),
        demand_(std::move(demand)),
        cost_(std::move(cost)),
        flow_(static_cast<std::size_t>(n_) * m_, 0.0),
        basic_(static_cast<std::size_t>(n_) * m_, 0) {}

  void solve() {
    northwest_corner();
    cost_scale_ = 1e-12;
    for (double c : cost_) cost_scale_ = std::max(cost_scale_, std::fabs(c));

    int degenerate_streak = 0;
    bool bland = false;
    for (long iter = 0; iter < 200000; ++iter) {
      compute_potentials();
      int ei = -1, ej = -1;
      if (!find_entering(bland, &ei, &ej)) return;
      const double delta = pivot(ei, ej);
      if (delta <= 1e-15) {
        if (++degenerate_streak > 4 * (n_ + m_)) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }
    }
    throw numeric_failure("discrete_ot_oracle: simplex did not converge in 200000 pivots");
  }

  double total_cost() const {
    double acc = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) acc += flow_[idx(i, j)] * cost_[idx(i, j)];
    return acc;
  }

  std::vector<PlanEntry> plan() const {
    std::vector<PlanEntry> entries;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j)
        if (flow_[idx(i, j)] > 1e-15) entries.push_back({i, j, flow_[idx(i, j)]});
    return entries;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * m_ + j; }

  void northwest_corner() {
    std::vector<double> ws = supply_, vs = demand_;
    int i = 0, j = 0;
    while (true) {
      const double t = std::min(ws[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]);
      flow_[idx(i, j)] = t;
      basic_[idx(i, j)] = 1;
      if (i == n_ - 1 && j == m_ - 1) break;
      ws[static_cast<std::size_t>(i)] -= t;
      vs[static_cast<std::size_t>(j)] -= t;
      if (i < n_ - 1 && (ws[static_cast<std::size_t>(i)] <= vs[static_cast<std::size_t>(j)] ||
                         j == m_ - 1)) {
        ++i;
      } else {
        ++j;
      }
    }
  }

  // Solve u_i + v_j = c_ij on the basis tree, u_0 = 0.
  void compute_potentials() {
    u_.assign(static_cast<std::size_t>(n_), 0.0);
    v_.assign(static_cast<std::size_t>(m_), 0.0);
    std::vector<char> row_done(static_cast<std::size_t>(n_), 0);
    std::vector<char> col_done(static_cast<std::size_t>(m_), 0);
    std::vector<std::vector<int>> row_adj(static_cast<std::size_t>(n_));
    std::vector<std::vector<int>> col_adj(static_cast<std::size_t>(m_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j)
        if (basic_[idx(i, j)]) {
          row_adj[static_cast<std::size_t>(i)].push_back(j);
          col_adj[static_cast<std::size_t>(j)].push_back(i);
        }
    std::queue<int> q;  // rows are 0..n-1, cols are n..n+m-1
    row_done[0] = 1;
    q.push(0);
    while (!q.empty()) {
      const int node = q.front();
      q.pop();
      if (node < n_) {
        for (int j : row_adj[static_cast<std::size_t>(node)])
          if (!col_done[static_cast<std::size_t>(j)]) {
            v_[static_cast<std::size_t>(j)] = cost_[idx(node, j)] - u_[static_cast<std::size_t>(node)];
            col_done[static_cast<std::size_t>(j)] = 1;
            q.push(n_ + j);
          }
      } else {
        const int j = node - n_;
        for (int i : col_adj[static_cast<std::size_t>(j)])
          if (!row_done[static_cast<std::size_t>(i)]) {
            u_[static_cast<std::size_t>(i)] = cost_[idx(i, j)] - v_[static_cast<std::size_t>(j)];
            row_done[static_cast<std::size_t>(i)] = 1;
            q.push(i);
          }
      }
    }
  }

  bool find_entering(bool bland, int* ei, int* ej) const {
    const double tol = -1e-12 * cost_scale_;
    double best = tol;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) {
        if (basic_[idx(i, j)]) continue;
        const double rc = cost_[idx(i, j)] - u_[static_cast<std::size_t>(i)] -
                          v_[static_cast<std::size_t>(j)];
        if (rc < best) {
          best = rc;
          *ei = i;
          *ej = j;
          if (bland) return true;
        }
      }
    return *ei >= 0 && best < tol;
  }

  // Bring (ei, ej) into the basis; returns the amount of flow moved.
  double pivot(int ei, int ej) {
    // Find the tree path from row ei to column ej through basic cells.
    const int total = n_ + m_;
    std::vector<int> parent(static_cast<std::size_t>(total), -1);
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::queue<int> q;
    seen[static_cast<std::size_t>(ei)] = 1;
    q.push(ei);
    while (!q.empty() && !seen[static_cast<std::size_t>(n_ + ej)]) {
      const int node = q.front();
      q.pop();
      if (node < n_) {
        for (int j = 0; j < m_; ++j)
          if (basic_[idx(node, j)] && !seen[static_cast<std::size_t>(n_ + j)]) {
            seen[static_cast<std::size_t>(n_ + j)] = 1;
            parent[static_cast<std::size_t>(n_ + j)] = node;
            q.push(n_ + j);
          }
      } else {
        const int j = node - n_;
        for (int i = 0; i < n_; ++i)
          if (basic_[idx(i, j)] && !seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = 1;
            parent[static_cast<std::size_t>(i)] = node;
            q.push(i);
          }
      }
    }
    if (!seen[static_cast<std::size_t>(n_ + ej)])
      throw numeric_failure("discrete_ot_oracle: basis lost connectivity");

    // Walk back from column ej to row ei; edges alternate -,+,-,... after the
    // entering edge, which takes +delta.
    std::vector<std::pair<int, int>> minus_cells, plus_cells;
    int node = n_ + ej;
    bool minus = true;
    while (node != ei) {
      const int par = parent[static_cast<std::size_t>(node)];
      const int i = (node < n_) ? node : par;
      const int j = (node < n_) ? par - n_ : node - n_;
      (minus ? minus_cells : plus_cells).emplace_back(i, j);
      minus = !minus;
      node = par;
    }

    double delta = flow_[idx(minus_cells.front().first, minus_cells.front().second)];
    std::pair<int, int> leaving = minus_cells.front();
    for (const auto& cell : minus_cells) {
      const double f = flow_[idx(cell.first, cell.second)];
      if (f < delta || (f == delta && cell < leaving)) {
        delta = f;
        leaving = cell;
      }
    }

    basic_[idx(ei, ej)] = 1;
    flow_[idx(ei, ej)] += delta;
    for (const auto& cell : plus_cells) flow_[idx(cell.first, cell.second)] += delta;
    for (const auto& cell : minus_cells) {
      double& f = flow_[idx(cell.first, cell.second)];
      f = std::max(0.0, f - delta);
    }
    flow_[idx(leaving.first, leaving.second)] = 0.0;
    basic_[idx(leaving.first, leaving.second)] = 0;
    return delta;
  }

  int n_, m_;
  std::vector<double> supply_, demand_, cost_;
  std::vector<double> flow_;
  std::vector<char> basic_;
  std::vector<double> u_, v_;
  double cost_scale_ = 1.0;
};

}  // namespace

std::pair<double, DiscretePlan> discrete_ot_oracle(const AtomicMeasure& a,
                                                   const AtomicMeasure& b, double p) {
  if (!(p >= 1.0)) throw invalid_input("discrete_ot_oracle: p must be >= 1");
  const auto n = static_cast<int>(a.size());
  const auto m = static_cast<int>(b.size());
  if (n > kAtomCap || m > kAtomCap)
    throw invalid_input("discrete_ot_oracle: more than 256 atoms per side");
  if (std::fabs(a.total_mass() - b.total_mass()) > 1e-9)
    throw invalid_input("discrete_ot_oracle: total masses differ beyond 1e-9");

  std::vector<double> supply(static_cast<std::size_t>(n)), demand(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) supply[static_cast<std::size_t>(i)] = a.atoms()[static_cast<std::size_t>(i)].second;
  // Rebalance exactly so the LP is feasible to rounding.
  const double scale = a.total_mass() / b.total_mass();
  for (int j = 0; j < m; ++j)
    demand[static_cast<std::size_t>(j)] = b.atoms()[static_cast<std::size_t>(j)].second * scale;

  std::vector<double> cost(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      cost[static_cast<std::size_t>(i) * m + j] =
          std::pow(circle_distance(a.atoms()[static_cast<std::size_t>(i)].first,
                                   b.atoms()[static_cast<std::size_t>(j)].first),
                   p);

  TransportSimplex simplex(supply, demand, std::move(cost));
  simplex.solve();

  DiscretePlan plan{simplex.plan()};
  std::vector<double> row_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<double> col_sum(static_cast<std::size_t>(m), 0.0);
  for (const auto& e : plan.entries) {
    row_sum[static_cast<std::size_t>(e.source)] += e.mass;
    col_sum[static_cast<std::size_t>(e.target)] += e.mass;
  }
  for (int i = 0; i < n; ++i)
    if (std::fabs(row_sum[static_cast<std::size_t>(i)] - supply[static_cast<std::size_t>(i)]) > 1e-9)
      throw numeric_failure("discrete_ot_oracle: plan violates source marginals");
  for (int j = 0; j < m; ++j)
    if (std::fabs(col_sum[static_cast<std::size_t>(j)] - demand[static_cast<std::size_t>(j)]) > 1e-9)
      throw numeric_failure("discrete_ot_oracle: plan violates target marginals");

  return {simplex.total_cost(), std::move(plan)};
}

}  // namespace torus_transport
