#include "chaoswm/chaotic_iterations.hpp"

#include <utility>

#include "chaoswm/errors.hpp"

namespace chaoswm {

IterationFunction::IterationFunction(std::string name, CellFn cell_fn)
    : name_(std::move(name)), cell_fn_(std::move(cell_fn)) {}

IterationFunction IterationFunction::negation() {
  return {"negation", [](const BitVector& x, std::size_t i) { return !x[i]; }};
}

IterationFunction IterationFunction::identity() {
  return {"identity", [](const BitVector& x, std::size_t i) { return x[i]; }};
}

BitVector IterationFunction::apply(const BitVector& x) const {
  BitVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y.set(i, cell_fn_(x, i));
  return y;
}

Strategy::Strategy(std::size_t cell_count, std::vector<std::size_t> terms)
    : cell_count_(cell_count), terms_(std::move(terms)) {
  if (cell_count_ == 0) throw DomainError("strategy cell count must be >= 1");
  for (auto t : terms_) {
    if (t >= cell_count_) {
      throw IndexError("strategy term " + std::to_string(t) + " outside [0, " +
                       std::to_string(cell_count_) + ")");
    }
  }
}

BitVector negation_all(const BitVector& x) { return ~x; }

BitVector ci_step(const BitVector& x, const IterationFunction& f, std::size_t cell) {
  if (cell >= x.size()) {
    throw IndexError("cell " + std::to_string(cell) + " out of range for N=" +
                     std::to_string(x.size()));
  }
  BitVector next = x;
  next.set(cell, f(x, cell));
  return next;
}

BitVector ci_run(const BitVector& x0, const IterationFunction& f, const Strategy& strategy,
                 std::size_t steps) {
  if (strategy.size() < steps) {
    throw InsufficientStrategyError("strategy has " + std::to_string(strategy.size()) +
                                    " terms, " + std::to_string(steps) + " steps requested");
  }
  BitVector x = x0;
  for (std::size_t n = 0; n < steps; ++n) {
    const std::size_t cell = strategy[n];
    if (cell >= x.size()) throw IndexError("strategy term exceeds state length");
    // f reads the pre-step state; only the selected cell changes, so an
    // in-place update is equivalent to ci_step.
    x.set(cell, f(x, cell));
  }
  return x;
}

BitVector parity_vector(const Strategy& strategy, std::size_t steps, std::size_t cell_count) {
  if (strategy.size() < steps) {
    throw InsufficientStrategyError("strategy has fewer terms than requested steps");
  }
  BitVector p(cell_count);
  for (std::size_t n = 0; n < steps; ++n) {
    if (strategy[n] >= cell_count) throw IndexError("strategy term exceeds cell count");
    p.flip(strategy[n]);
  }
  return p;
}

}  // namespace chaoswm
