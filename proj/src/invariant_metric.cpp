#include "urysohn/invariant_metric.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace urysohn {

Rational InvariantMetric::diameter() const {
  Rational d = 0;
  for (const auto &v : from_id)
    d = max(d, v);
  return d;
}

Rational InvariantMetric::min_positive() const {
  Rational m = 0;
  bool found = false;
  for (const auto &v : from_id)
    if (!v.is_zero() && (!found || v < m)) {
      m = v;
      found = true;
    }
  return m;
}

bool InvariantMetric::is_metric() const {
  for (std::size_t i = 1; i < from_id.size(); ++i)
    if (from_id[i].is_zero())
      return false;
  return true;
}

FiniteMetricSpace InvariantMetric::materialize(const GroupView &g,
                                               const std::vector<std::string> &names) const {
  const std::size_t n = g.order();
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      d[x][y] = at(g, static_cast<int>(x), static_cast<int>(y));
  return FiniteMetricSpace(names, std::move(d), is_metric());
}

WeightedCayleyGraph build_cayley_graph(const GroupView &g, const VValues &v) {
  const std::size_t k = v.v_elems.size();
  if (v.d.size() != k)
    throw std::invalid_argument("build_cayley_graph: value matrix size mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (v.d[i].size() != k)
      throw std::invalid_argument("build_cayley_graph: value matrix not square");
    if (!v.d[i][i].is_zero())
      throw std::invalid_argument("build_cayley_graph: nonzero d(v,v)");
    for (std::size_t j = 0; j < k; ++j) {
      if (v.d[i][j] != v.d[j][i])
        throw std::invalid_argument("build_cayley_graph: asymmetric d|V");
      if (v.d[i][j].is_negative())
        throw std::invalid_argument("build_cayley_graph: negative d|V");
    }
  }
  // least weight per connector; pairs (u,v) and (v,u) give c and c^-1 with
  // the same weight, so symmetry is automatic
  std::map<int, Rational> weight;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        continue;
      int c = g.mult(g.inv(v.v_elems[i]), v.v_elems[j]);
      if (c == 0)
        continue; // collapsed pair; certify_V_isometry reports it downstream
      auto it = weight.find(c);
      if (it == weight.end() || v.d[i][j] < it->second)
        weight[c] = v.d[i][j];
    }
  WeightedCayleyGraph graph;
  graph.connectors.reserve(weight.size());
  for (const auto &[elem, w] : weight)
    graph.connectors.push_back({elem, w});
  return graph;
}

namespace {

/// Dijkstra from the identity over connector edges x -> x*c. A nonnegative
/// stop threshold makes the bounded variant cheap: labels >= stop are never
/// expanded because every remaining value is clamped anyway.
std::vector<std::optional<Rational>> dijkstra_from_identity(
    const GroupView &g, const WeightedCayleyGraph &graph,
    const std::optional<Rational> &stop) {
  std::vector<std::optional<Rational>> dist(g.order());
  auto cmp = [](const std::pair<Rational, int> &a, const std::pair<Rational, int> &b) {
    if (a.first != b.first)
      return b.first < a.first;
    return a.second > b.second;
  };
  std::priority_queue<std::pair<Rational, int>, std::vector<std::pair<Rational, int>>,
                      decltype(cmp)>
      pq(cmp);
  dist[0] = Rational(0);
  pq.push({Rational(0), 0});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (*dist[x] < d)
      continue;
    if (stop && d >= *stop)
      continue;
    for (const auto &c : graph.connectors) {
      int y = g.mult(x, c.elem);
      Rational nd = d + c.weight;
      if (!dist[y] || nd < *dist[y]) {
        dist[y] = nd;
        pq.push({nd, y});
      }
    }
  }
  return dist;
}

} // namespace

InvariantMetric max_invariant_pseudometric(const GroupView &g, const VValues &v) {
  auto graph = build_cayley_graph(g, v);
  auto dist = dijkstra_from_identity(g, graph, std::nullopt);
  InvariantMetric rho;
  rho.from_id.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!dist[x])
      throw std::runtime_error(
          "max_invariant_pseudometric: V^-1 V does not connect the group; "
          "element " + std::to_string(x) + " is unreachable — use max_bounded_metric");
    rho.from_id.push_back(*dist[x]);
  }
  return rho;
}

InvariantMetric max_bounded_metric(const GroupView &g, const VValues &v) {
  const Rational one(1);
  for (const auto &row : v.d)
    for (const auto &val : row)
      if (val > one)
        throw std::invalid_argument("max_bounded_metric: d|V must be bounded by 1");
  auto graph = build_cayley_graph(g, v);
  auto dist = dijkstra_from_identity(g, graph, one);
  InvariantMetric rho;
  rho.from_id.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    rho.from_id.push_back(dist[x] ? min(one, *dist[x]) : one); // "1, otherwise"
  return rho;
}

InvariantMetric quotient_pseudometric(const QuotientGroup &q, const InvariantMetric &rho) {
  if (rho.from_id.size() != q.base().order())
    throw std::invalid_argument("quotient_pseudometric: metric size mismatch");
  InvariantMetric bar;
  bar.from_id.assign(q.order(), Rational(0));
  std::vector<bool> seen(q.order(), false);
  // bar_rho(H, yH) = min over the coset Hy = yH of rho(e, w)
  for (std::size_t w = 0; w < q.base().order(); ++w) {
    int c = q.coset_of(static_cast<int>(w));
    if (!seen[c] || rho.from_id[w] < bar.from_id[c]) {
      bar.from_id[c] = rho.from_id[w];
      seen[c] = true;
    }
  }
  return bar;
}

std::optional<std::pair<int, int>> certify_V_isometry(
    const GroupView &g, std::span<const int> v_images,
    const std::vector<std::vector<Rational>> &d_upstairs, const InvariantMetric &bar_rho) {
  for (std::size_t i = 0; i < v_images.size(); ++i)
    for (std::size_t j = 0; j < v_images.size(); ++j)
      if (bar_rho.at(g, v_images[i], v_images[j]) != d_upstairs[i][j])
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

std::vector<int> word_lengths(const GroupView &g, std::span<const int> v_elems) {
  std::vector<int> len(g.order(), -1);
  len[0] = 0;
  std::queue<int> q;
  q.push(0);
  std::vector<int> alphabet;
  for (int v : v_elems) {
    if (v != 0)
      alphabet.push_back(v);
    int vi = g.inv(v);
    if (vi != 0)
      alphabet.push_back(vi);
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int a : alphabet) {
      int y = g.mult(x, a);
      if (len[y] == -1) {
        len[y] = len[x] + 1;
        q.push(y);
      }
    }
  }
  return len;
}

} // namespace urysohn
