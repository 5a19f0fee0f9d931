#ifndef URYSOHN_QUOTIENT_SEARCH_HPP
#define URYSOHN_QUOTIENT_SEARCH_HPP

#include "urysohn/free_product.hpp"
#include "urysohn/perm_group.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace urysohn {

struct QuotientSearchParams {
  std::uint64_t seed = 1;
  int max_degree = 12;
  int max_attempts = 600;
  std::size_t ball_cap = 1000000;
  std::size_t group_cap = 400000;
};

enum class KernelCheck {
  full_ball, // every nontrivial word of B_V(N) mapped away from the identity
  half_ball  // injectivity on B_V(ceil(N/2)); implies the full-ball condition
};

struct QuotientSearchResult {
  HomAssignment phi;
  std::shared_ptr<EnumeratedGroup> quotient;
  std::vector<int> v_images;   // quotient element index per V word
  std::vector<int> g_images;   // quotient element index per G element
  int z_image = 0;             // quotient element index of phi(t)
  BallStats stats;
  KernelCheck check = KernelCheck::full_ball;
  int degree = 0;
  int attempt = 0;
};

struct QuotientSearchFail : std::runtime_error {
  BallStats stats;
  int attempts = 0;
  QuotientSearchFail(BallStats s, int att)
      : std::runtime_error("finite_quotient_search: no certified quotient after " +
                           std::to_string(att) + " attempts (ball of " +
                           std::to_string(s.total) + " words at radius " +
                           std::to_string(s.radius) + ")"),
        stats(std::move(s)), attempts(att) {}
};

/// Searches for a homomorphism phi from F = G * F_n * Z onto a small
/// permutation group Q such that (a) phi restricted to G is injective and
/// (b) no nontrivial word of V-length <= N lies in the kernel. Both are
/// verified by explicit ball enumeration, never trusted from randomness:
/// (b) directly on B_V(N) when it fits the cap, otherwise via injectivity
/// on B_V(ceil(N/2)) which implies it. The G part uses G's own faithful
/// permutation representation padded with fixed points; free letters and t
/// get seeded random permutations (uniform and full-cycle ensembles) over
/// an ascending degree schedule.
QuotientSearchResult finite_quotient_search(const FreeProductSignature &sig,
                                            const GeneratingSet &V, int N,
                                            const QuotientSearchParams &params,
                                            std::uint64_t attempt_salt = 0);

} // namespace urysohn

#endif
