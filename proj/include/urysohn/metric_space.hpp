#ifndef URYSOHN_METRIC_SPACE_HPP
#define URYSOHN_METRIC_SPACE_HPP

#include "urysohn/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace urysohn {

/// One axiom violation found by validate(). Report-style: validate never
/// throws, it returns every offending entry.
struct Violation {
  enum class Kind { nonzero_diagonal, negative, asymmetric, triangle, zero_off_diagonal };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string to_string() const;
};

/// Finite metric (or pseudometric) space with exact rational distances.
/// Immutable after construction; all operations below are pure functions.
class FiniteMetricSpace {
public:
  FiniteMetricSpace(std::vector<std::string> points,
                    std::vector<std::vector<Rational>> dist,
                    bool metric = true);

  std::size_t size() const { return points_.size(); }
  const std::string &point(std::size_t i) const { return points_[i]; }
  const std::vector<std::string> &points() const { return points_; }
  std::optional<int> index_of(const std::string &name) const;
  const Rational &dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  const std::vector<std::vector<Rational>> &matrix() const { return dist_; }

  /// True when the space claims no zero distance off the diagonal.
  bool is_metric() const { return metric_; }

  Rational diameter() const;
  /// Least nonzero distance; zero for a one-point space.
  Rational min_positive_distance() const;

  /// Subspace on the given point indices, keeping names and order.
  FiniteMetricSpace restrict(std::span<const int> idx) const;

private:
  std::vector<std::string> points_;
  std::vector<std::vector<Rational>> dist_;
  bool metric_;
};

/// Checks every axiom of a (pseudo)metric on the full matrix: diagonal,
/// symmetry, nonnegativity, all triangles, and — when the space is flagged
/// metric — absence of zero off-diagonal entries.
std::vector<Violation> validate(const FiniteMetricSpace &space);

/// Plain weighted graph for path_metric.
struct WeightedGraph {
  struct Edge {
    int a, b;
    Rational weight;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
};

/// Path pseudometric: least edge-weight sum over vertex paths; the empty
/// path gives d(x,x) = 0. Throws listing the components if disconnected.
/// The result is flagged pseudometric when some weight is zero.
FiniteMetricSpace path_metric(const WeightedGraph &graph);

enum class NeighborhoodMode { closed, open };

/// {x : d(x, subset) <= eps} (closed, the default) or strict < (open).
/// Empty subset gives the empty set.
std::vector<int> epsilon_neighborhood(const FiniteMetricSpace &space,
                                      std::span<const int> subset,
                                      const Rational &eps,
                                      NeighborhoodMode mode = NeighborhoodMode::closed);

/// Distance prescription for one new point.
struct KatetovFunction {
  std::vector<Rational> values; // one per point of the base space
  /// Pairs violating |f(x)-f(y)| <= d(x,y) <= f(x)+f(y).
  std::vector<std::pair<int, int>> violations(const FiniteMetricSpace &base) const;
};

/// Adjoins one point at distance f(x) from each x. Throws naming the
/// offending pair if f is not a Katetov function.
FiniteMetricSpace katetov_extend(const FiniteMetricSpace &space,
                                 const KatetovFunction &f,
                                 const std::string &new_id);

/// Distance-preserving injection, checked exactly.
struct PointedEmbedding {
  std::vector<int> map; // source index -> target index
  /// First pair with a distance mismatch, if any.
  static std::optional<std::pair<int, int>> verify(const FiniteMetricSpace &source,
                                                   const FiniteMetricSpace &target,
                                                   std::span<const int> map);
};

/// Free amalgam of Y and Z over a common subspace X (given by two
/// distance-preserving embeddings). Cross distances are
/// d(y,z) = min over x of d(y,x) + d(x,z). Throws if X is empty or an
/// embedding is not distance-preserving.
FiniteMetricSpace amalgamate(const FiniteMetricSpace &Y, const FiniteMetricSpace &Z,
                             const FiniteMetricSpace &X,
                             std::span<const int> embed_into_Y,
                             std::span<const int> embed_into_Z);

/// Adds a fresh copy s' of every s in S with d(s',t') = d(s,t) and
/// d(s', z) = d(s, z) + delta for all original z. delta > 0, S nonempty.
/// Copy of point "p" is named "p" + suffix.
FiniteMetricSpace displaced_copy(const FiniteMetricSpace &space,
                                 std::span<const int> S, const Rational &delta,
                                 const std::string &suffix = "'");

/// Multiplies every distance by factor > 0.
FiniteMetricSpace rescale(const FiniteMetricSpace &space, const Rational &factor);

/// Explicit normalized Hamming power: carrier X^m with
/// d(f,g) = (1/m) * sum d(f_i, g_i). Throws when |X|^m exceeds the cap
/// (use the implicit handle in hamming.hpp instead).
FiniteMetricSpace hamming_power_explicit(const FiniteMetricSpace &space, int m,
                                         std::size_t cap = 4096);

} // namespace urysohn

#endif
