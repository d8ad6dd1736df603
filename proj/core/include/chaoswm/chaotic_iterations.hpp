#pragma once

// Chaotic iterations over boolean cell systems.
//
// Given x^0 in B^N, an iteration function f and a strategy S, step n updates
// only cell S^n:  x^n_i = x^{n-1}_i for i != S^n, and x^n_{S^n} = f(x^{n-1})_{S^n}.
// Cells are 0-based (the usual mathematical statement indexes them 1..N).

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chaoswm/bit_vector.hpp"

namespace chaoswm {

/// A map f: B^N -> B^N, queried one cell at a time as f(x)_i.
class IterationFunction {
 public:
  using CellFn = std::function<bool(const BitVector&, std::size_t)>;

  IterationFunction(std::string name, CellFn cell_fn);

  /// Vectorial logical negation: f(x)_i = NOT x_i.
  static IterationFunction negation();
  /// f(x) = x; every step is a fixed point.
  static IterationFunction identity();

  bool operator()(const BitVector& x, std::size_t cell) const { return cell_fn_(x, cell); }
  /// Full application f(x).
  BitVector apply(const BitVector& x) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  CellFn cell_fn_;
};

/// Materialized chaotic strategy: a finite sequence of cell indices in [0, cell_count).
class Strategy {
 public:
  Strategy(std::size_t cell_count, std::vector<std::size_t> terms);

  std::size_t cell_count() const noexcept { return cell_count_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t operator[](std::size_t k) const noexcept { return terms_[k]; }
  const std::vector<std::size_t>& terms() const noexcept { return terms_; }

  bool operator==(const Strategy&) const = default;

 private:
  std::size_t cell_count_;
  std::vector<std::size_t> terms_;
};

BitVector negation_all(const BitVector& x);

/// One chaotic-iteration step updating `cell` only. Throws IndexError.
BitVector ci_step(const BitVector& x, const IterationFunction& f, std::size_t cell);

/// Folds ci_step over S^0..S^{steps-1}.
/// Throws InsufficientStrategyError if S has fewer than `steps` terms.
BitVector ci_run(const BitVector& x0, const IterationFunction& f, const Strategy& strategy,
                 std::size_t steps);

/// Per-cell parity of occurrence counts in S^0..S^{steps-1}. For f = negation,
/// ci_run(x0, negation, S, steps) == x0 ^ parity_vector(S, steps, N).
BitVector parity_vector(const Strategy& strategy, std::size_t steps, std::size_t cell_count);

}  // namespace chaoswm
