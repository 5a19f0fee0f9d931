#ifndef URYSOHN_INVARIANT_METRIC_HPP
#define URYSOHN_INVARIANT_METRIC_HPP

#include "urysohn/metric_space.hpp"
#include "urysohn/perm_group.hpp"
#include "urysohn/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace urysohn {

/// Left-invariant (pseudo)metric on an enumerated group, stored as the
/// distance-from-identity vector: d(x, y) = from_id[x^-1 y].
struct InvariantMetric {
  std::vector<Rational> from_id;

  const Rational &at(const GroupView &g, int x, int y) const {
    return from_id[g.mult(g.inv(x), y)];
  }
  Rational diameter() const;
  Rational min_positive() const;
  bool is_metric() const; // no zero away from the identity

  /// Full matrix over element indices; for tests and small spaces.
  FiniteMetricSpace materialize(const GroupView &g,
                                const std::vector<std::string> &names) const;
};

/// Weighted Cayley graph on connectors V^-1 V: edges x -> x*c with weight
/// w(c). Connector weights are the least d(u,v) over representing pairs,
/// symmetric by construction; the identity connector is dropped.
struct WeightedCayleyGraph {
  struct Connector {
    int elem;
    Rational weight;
  };
  std::vector<Connector> connectors;
};

/// Values of d on pairs of V (indices into V, not the group).
struct VValues {
  std::vector<int> v_elems;                  // group element index per V member
  std::vector<std::vector<Rational>> d;      // symmetric, zero diagonal
};

WeightedCayleyGraph build_cayley_graph(const GroupView &g, const VValues &v);

/// Maximal left-invariant pseudometric with restriction to V majorized by
/// d|V: single-source shortest path from the identity over the connector
/// graph. Throws if the connectors do not reach every element (the bounded
/// variant stays total).
InvariantMetric max_invariant_pseudometric(const GroupView &g, const VValues &v);

/// Maximal left-invariant pseudometric bounded by one: min(1, shortest
/// path), 1 across <V>-cosets. Requires d|V <= 1.
InvariantMetric max_bounded_metric(const GroupView &g, const VValues &v);

/// Largest pseudometric on G/H making the quotient map 1-Lipschitz:
/// quotient distance-from-identity is the least rho over each coset.
InvariantMetric quotient_pseudometric(const QuotientGroup &q, const InvariantMetric &rho);

/// Checks bar_rho(pi u, pi v) = d(u, v) on all pairs of V. Returns the first
/// violating pair of V indices, or nothing when certified.
std::optional<std::pair<int, int>> certify_V_isometry(const GroupView &g,
                                                      std::span<const int> v_images,
                                                      const std::vector<std::vector<Rational>> &d_upstairs,
                                                      const InvariantMetric &bar_rho);

/// Word length of every element over the connector alphabet {V u V^-1};
/// -1 for unreachable elements. Used by the Lemma word-length bound test.
std::vector<int> word_lengths(const GroupView &g, std::span<const int> v_elems);

} // namespace urysohn

#endif
