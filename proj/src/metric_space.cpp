#include "urysohn/metric_space.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace urysohn {

std::string Violation::to_string() const {
  std::ostringstream os;
  switch (kind) {
  case Kind::nonzero_diagonal:
    os << "nonzero diagonal at " << i;
    break;
  case Kind::negative:
    os << "negative distance at (" << i << "," << j << ")";
    break;
  case Kind::asymmetric:
    os << "asymmetric pair (" << i << "," << j << ")";
    break;
  case Kind::triangle:
    os << "triangle violation (" << i << "," << j << "," << k << ")";
    break;
  case Kind::zero_off_diagonal:
    os << "zero off-diagonal pair (" << i << "," << j << ") in a metric space";
    break;
  }
  return os.str();
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<std::vector<Rational>> dist,
                                     bool metric)
    : points_(std::move(points)), dist_(std::move(dist)), metric_(metric) {
  if (dist_.size() != points_.size())
    throw std::invalid_argument("FiniteMetricSpace: matrix size != point count");
  for (const auto &row : dist_)
    if (row.size() != points_.size())
      throw std::invalid_argument("FiniteMetricSpace: matrix is not square");
}

std::optional<int> FiniteMetricSpace::index_of(const std::string &name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name)
      return static_cast<int>(i);
  return std::nullopt;
}

Rational FiniteMetricSpace::diameter() const {
  Rational d = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      d = max(d, dist_[i][j]);
  return d;
}

Rational FiniteMetricSpace::min_positive_distance() const {
  Rational m = 0;
  bool found = false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (!dist_[i][j].is_zero() && (!found || dist_[i][j] < m)) {
        m = dist_[i][j];
        found = true;
      }
  return m;
}

FiniteMetricSpace FiniteMetricSpace::restrict(std::span<const int> idx) const {
  std::vector<std::string> pts;
  std::vector<std::vector<Rational>> d(idx.size(), std::vector<Rational>(idx.size()));
  pts.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    pts.push_back(points_[idx[i]]);
    for (std::size_t j = 0; j < idx.size(); ++j)
      d[i][j] = dist_[idx[i]][idx[j]];
  }
  return FiniteMetricSpace(std::move(pts), std::move(d), metric_);
}

std::vector<Violation> validate(const FiniteMetricSpace &space) {
  std::vector<Violation> out;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!space.dist(i, i).is_zero())
      out.push_back({Violation::Kind::nonzero_diagonal, static_cast<int>(i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.dist(i, j).is_negative())
        out.push_back({Violation::Kind::negative, static_cast<int>(i), static_cast<int>(j)});
      if (space.dist(i, j) != space.dist(j, i))
        out.push_back({Violation::Kind::asymmetric, static_cast<int>(i), static_cast<int>(j)});
      if (space.is_metric() && space.dist(i, j).is_zero())
        out.push_back({Violation::Kind::zero_off_diagonal, static_cast<int>(i), static_cast<int>(j)});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k &&
            space.dist(i, k) > space.dist(i, j) + space.dist(j, k))
          out.push_back({Violation::Kind::triangle, static_cast<int>(i),
                         static_cast<int>(j), static_cast<int>(k)});
  return out;
}

namespace {

// Dijkstra with exact rational labels. Unreached entries come back empty.
std::vector<std::optional<Rational>> shortest_paths(
    int n, const std::vector<std::vector<std::pair<int, Rational>>> &adj, int source) {
  std::vector<std::optional<Rational>> dist(n);
  // (distance, vertex); lowest index wins ties for determinism
  auto cmp = [](const std::pair<Rational, int> &a, const std::pair<Rational, int> &b) {
    if (a.first != b.first)
      return b.first < a.first;
    return a.second > b.second;
  };
  std::priority_queue<std::pair<Rational, int>, std::vector<std::pair<Rational, int>>,
                      decltype(cmp)>
      pq(cmp);
  dist[source] = Rational(0);
  pq.push({Rational(0), source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (*dist[v] < d)
      continue;
    for (const auto &[w, wt] : adj[v]) {
      Rational nd = d + wt;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

} // namespace

FiniteMetricSpace path_metric(const WeightedGraph &graph) {
  const int n = static_cast<int>(graph.vertices.size());
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  bool has_zero_weight = false;
  for (const auto &e : graph.edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw std::invalid_argument("path_metric: edge endpoint out of range");
    if (e.weight.is_negative())
      throw std::invalid_argument("path_metric: negative edge weight");
    if (e.weight.is_zero())
      has_zero_weight = true;
    adj[e.a].push_back({e.b, e.weight});
    adj[e.b].push_back({e.a, e.weight});
  }
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (int s = 0; s < n; ++s) {
    auto row = shortest_paths(n, adj, s);
    for (int t = 0; t < n; ++t) {
      if (!row[t]) {
        // name the components for the error message
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int v = 0; v < n; ++v) {
          if (comp[v] != -1)
            continue;
          std::queue<int> q;
          q.push(v);
          comp[v] = nc;
          while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const auto &[w, wt] : adj[u])
              if (comp[w] == -1) {
                comp[w] = nc;
                q.push(w);
              }
          }
          ++nc;
        }
        std::ostringstream os;
        os << "path_metric: graph is disconnected (" << nc << " components:";
        for (int c = 0; c < nc; ++c) {
          os << " {";
          bool first = true;
          for (int v = 0; v < n; ++v)
            if (comp[v] == c) {
              os << (first ? "" : ",") << graph.vertices[v];
              first = false;
            }
          os << "}";
        }
        os << ")";
        throw std::runtime_error(os.str());
      }
      d[s][t] = *row[t];
    }
  }
  return FiniteMetricSpace(graph.vertices, std::move(d), !has_zero_weight);
}

std::vector<int> epsilon_neighborhood(const FiniteMetricSpace &space,
                                      std::span<const int> subset, const Rational &eps,
                                      NeighborhoodMode mode) {
  std::vector<int> out;
  if (subset.empty())
    return out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    bool in = false;
    for (int a : subset) {
      const Rational &d = space.dist(x, a);
      if (mode == NeighborhoodMode::closed ? d <= eps : d < eps) {
        in = true;
        break;
      }
    }
    if (in)
      out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<std::pair<int, int>> KatetovFunction::violations(const FiniteMetricSpace &base) const {
  std::vector<std::pair<int, int>> bad;
  const std::size_t n = base.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i].is_negative())
      bad.push_back({static_cast<int>(i), static_cast<int>(i)});
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational &d = base.dist(i, j);
      if (abs(values[i] - values[j]) > d || d > values[i] + values[j])
        bad.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return bad;
}

FiniteMetricSpace katetov_extend(const FiniteMetricSpace &space, const KatetovFunction &f,
                                 const std::string &new_id) {
  if (f.values.size() != space.size())
    throw std::invalid_argument("katetov_extend: value count != point count");
  auto bad = f.violations(space);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "katetov_extend: Katetov inequality fails at pair (" << space.point(bad[0].first)
       << ", " << space.point(bad[0].second) << ")";
    throw std::invalid_argument(os.str());
  }
  const std::size_t n = space.size();
  std::vector<std::string> pts = space.points();
  pts.push_back(new_id);
  std::vector<std::vector<Rational>> d(n + 1, std::vector<Rational>(n + 1));
  bool zero_to_new = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = space.dist(i, j);
    d[i][n] = f.values[i];
    d[n][i] = f.values[i];
    if (f.values[i].is_zero())
      zero_to_new = true;
  }
  return FiniteMetricSpace(std::move(pts), std::move(d), space.is_metric() && !zero_to_new);
}

std::optional<std::pair<int, int>> PointedEmbedding::verify(const FiniteMetricSpace &source,
                                                            const FiniteMetricSpace &target,
                                                            std::span<const int> map) {
  for (std::size_t i = 0; i < source.size(); ++i)
    for (std::size_t j = 0; j < source.size(); ++j)
      if (target.dist(map[i], map[j]) != source.dist(i, j))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

FiniteMetricSpace amalgamate(const FiniteMetricSpace &Y, const FiniteMetricSpace &Z,
                             const FiniteMetricSpace &X, std::span<const int> embed_into_Y,
                             std::span<const int> embed_into_Z) {
  if (X.size() == 0)
    throw std::invalid_argument("amalgamate: common subspace is empty, gluing undefined");
  if (PointedEmbedding::verify(X, Y, embed_into_Y))
    throw std::invalid_argument("amalgamate: embedding into Y is not distance-preserving");
  if (PointedEmbedding::verify(X, Z, embed_into_Z))
    throw std::invalid_argument("amalgamate: embedding into Z is not distance-preserving");

  // carrier: all of Y, plus Z minus the glued image of X
  std::vector<int> z_extra;
  std::vector<int> z_to_out(Z.size(), -1);
  std::vector<int> x_image_in_z(Z.size(), -1);
  for (std::size_t i = 0; i < X.size(); ++i)
    x_image_in_z[embed_into_Z[i]] = static_cast<int>(i);
  for (std::size_t z = 0; z < Z.size(); ++z)
    if (x_image_in_z[z] >= 0)
      z_to_out[z] = embed_into_Y[x_image_in_z[z]];
    else
      z_extra.push_back(static_cast<int>(z));

  const std::size_t ny = Y.size();
  const std::size_t n = ny + z_extra.size();
  std::vector<std::string> pts = Y.points();
  for (std::size_t e = 0; e < z_extra.size(); ++e) {
    z_to_out[z_extra[e]] = static_cast<int>(ny + e);
    pts.push_back(Z.point(z_extra[e]));
  }
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      d[i][j] = Y.dist(i, j);
  for (std::size_t e = 0; e < z_extra.size(); ++e)
    for (std::size_t f = 0; f < z_extra.size(); ++f)
      d[ny + e][ny + f] = Z.dist(z_extra[e], z_extra[f]);
  // cross distances through X
  for (std::size_t e = 0; e < z_extra.size(); ++e)
    for (std::size_t y = 0; y < ny; ++y) {
      bool found = false;
      Rational best = 0;
      for (std::size_t x = 0; x < X.size(); ++x) {
        Rational v = Z.dist(z_extra[e], embed_into_Z[x]) + Y.dist(embed_into_Y[x], y);
        if (!found || v < best) {
          best = v;
          found = true;
        }
      }
      d[ny + e][y] = best;
      d[y][ny + e] = best;
    }
  return FiniteMetricSpace(std::move(pts), std::move(d), Y.is_metric() && Z.is_metric());
}

FiniteMetricSpace displaced_copy(const FiniteMetricSpace &space, std::span<const int> S,
                                 const Rational &delta, const std::string &suffix) {
  if (!(delta > Rational(0)))
    throw std::invalid_argument("displaced_copy: delta must be positive");
  if (S.empty())
    throw std::invalid_argument("displaced_copy: S must be nonempty");
  const std::size_t n = space.size();
  const std::size_t m = S.size();
  std::vector<std::string> pts = space.points();
  for (int s : S)
    pts.push_back(space.point(s) + suffix);
  std::vector<std::vector<Rational>> d(n + m, std::vector<Rational>(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = space.dist(i, j);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      d[n + a][n + b] = space.dist(S[a], S[b]);
    for (std::size_t z = 0; z < n; ++z) {
      d[n + a][z] = space.dist(S[a], z) + delta;
      d[z][n + a] = d[n + a][z];
    }
  }
  return FiniteMetricSpace(std::move(pts), std::move(d), space.is_metric());
}

FiniteMetricSpace rescale(const FiniteMetricSpace &space, const Rational &factor) {
  if (!(factor > Rational(0)))
    throw std::invalid_argument("rescale: factor must be positive");
  std::vector<std::vector<Rational>> d = space.matrix();
  for (auto &row : d)
    for (auto &v : row)
      v = v * factor;
  return FiniteMetricSpace(space.points(), std::move(d), space.is_metric());
}

FiniteMetricSpace hamming_power_explicit(const FiniteMetricSpace &space, int m,
                                         std::size_t cap) {
  if (m < 1)
    throw std::invalid_argument("hamming_power_explicit: m must be positive");
  const std::size_t b = space.size();
  std::size_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > cap / b + 1 || total * b > cap)
      throw std::runtime_error("hamming_power_explicit: |X|^m exceeds cap; use the implicit handle");
    total *= b;
  }
  // tuples in lexicographic order, coordinate 0 most significant
  std::vector<std::vector<int>> tuples(total, std::vector<int>(m));
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t v = t;
    for (int c = m - 1; c >= 0; --c) {
      tuples[t][c] = static_cast<int>(v % b);
      v /= b;
    }
  }
  std::vector<std::string> pts(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::string name = "(";
    for (int c = 0; c < m; ++c)
      name += (c ? "," : "") + space.point(tuples[t][c]);
    pts[t] = name + ")";
  }
  const Rational inv_m(1, m);
  std::vector<std::vector<Rational>> d(total, std::vector<Rational>(total));
  for (std::size_t s = 0; s < total; ++s)
    for (std::size_t t = s + 1; t < total; ++t) {
      Rational sum = 0;
      for (int c = 0; c < m; ++c)
        sum += space.dist(tuples[s][c], tuples[t][c]);
      d[s][t] = sum * inv_m;
      d[t][s] = d[s][t];
    }
  return FiniteMetricSpace(std::move(pts), std::move(d), space.is_metric());
}

} // namespace urysohn
