#ifndef URYSOHN_CONFIG_HPP
#define URYSOHN_CONFIG_HPP

#include <cstddef>
#include <cstdint>

namespace urysohn {

/// Caps and knobs shared by the pipelines. The seed is recorded in every
/// output artifact; all randomness derives from it.
struct RunConfig {
  std::uint64_t seed = 1;

  // group-core
  std::size_t ball_cap = 1000000;      // normal forms in a V-ball
  std::size_t group_cap = 400000;      // enumerated group order
  int max_quotient_degree = 12;        // permutation degree schedule upper end
  int quotient_attempts = 600;         // total random attempts before FAIL
  std::size_t full_ball_check_cap = 1000000; // direct kernel scan when ball fits

  // metric-core / concentration
  int exhaustive_cap = 20;             // points for exact subset enumeration
  std::size_t explicit_power_cap = 4096; // |X|^m for explicit Hamming powers

  // levy-construction
  int n_cap = 12;                      // cap on N from (N-2)*delta >= 1
  int truncation_radius = 0;           // Hamming truncation radius r
  std::size_t truncation_point_cap = 64;
  std::size_t materialize_cap = 512;   // points for explicit Y matrices
  int extend_retries = 3;              // re-search budget if a certificate fails

  // estimators
  int mc_samples = 20000;
};

} // namespace urysohn

#endif
