#pragma once

// Constructive, desk-scale checks of the Devaney chaos properties for chaotic
// iterations seen as a dynamical system on phase points (state, strategy):
//   G(x, S) = (ci_step(x, f, S^0), shift(S)).
// The metric is
//   d(p, q) = Hamming(p.x, q.x) + sum_k |p.S^k - q.S^k| / (N * 10^(k+1)),
// truncated at a finite horizon. Its strategy part is always < 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "chaoswm/bit_vector.hpp"
#include "chaoswm/chaotic_iterations.hpp"

namespace chaoswm {

/// A state and a strategy prefix. A cyclic point repeats `strategy` forever.
struct PhasePoint {
  BitVector state;
  std::vector<std::size_t> strategy;
  bool cyclic = false;

  std::size_t cell_count() const noexcept { return state.size(); }
  /// Throws InsufficientStrategyError past the end of a non-cyclic prefix.
  std::size_t term(std::size_t k) const;
  /// Number of terms available; SIZE_MAX when cyclic.
  std::size_t available_terms() const noexcept;
};

/// Throws DimensionMismatchError when N differs.
double distance(const PhasePoint& p, const PhasePoint& q, std::size_t horizon);

/// G applied `steps` times; the strategy is shifted accordingly.
PhasePoint iterate(const PhasePoint& p, const IterationFunction& f, std::size_t steps);

/// Smallest k >= 1 with 10^-k <= epsilon: strategies agreeing on their first k
/// terms are closer than epsilon.
std::size_t agreement_horizon(double epsilon);

struct ConnectivityResult {
  bool strongly_connected = false;
  /// Witness pair. When connected, `path` leads from `from` to `to` (inclusive);
  /// otherwise `to` is unreachable from `from` and `path` is empty.
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::vector<std::uint32_t> path;
};

/// Strong connectivity of the graph on B^N with edges x -> ci_step(x, f, c).
/// States are encoded with cell i as bit i. Throws CapacityError for N > 12.
ConnectivityResult transition_graph_strongly_connected(const IterationFunction& f,
                                                       std::size_t cell_count,
                                                       std::uint64_t witness_seed = 0);

struct PeriodicWitness {
  PhasePoint point;
  std::size_t period = 0;
  bool verified = false;
};

/// A periodic point within epsilon of p under the negation function.
PeriodicWitness periodic_witness(const PhasePoint& p, double epsilon);

struct SensitivityWitness {
  PhasePoint point;
  /// Iterations after which the states differ.
  std::size_t steps = 0;
  double initial_distance = 0.0;
  std::size_t final_hamming = 0;
  bool verified = false;
};

/// A point q closer than epsilon to p whose trajectory separates from p's by more
/// than delta under the negation function. Requires N >= 2, 0 < delta <= 1;
/// throws DomainError otherwise.
SensitivityWitness sensitivity_witness(const PhasePoint& p, double epsilon, double delta);

}  // namespace chaoswm
