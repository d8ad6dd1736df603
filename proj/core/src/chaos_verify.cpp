#include "chaoswm/chaos_verify.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "chaoswm/errors.hpp"

namespace chaoswm {

std::size_t PhasePoint::term(std::size_t k) const {
  if (cyclic) {
    if (strategy.empty()) throw InsufficientStrategyError("cyclic point with empty strategy");
    return strategy[k % strategy.size()];
  }
  if (k >= strategy.size()) {
    throw InsufficientStrategyError("strategy term " + std::to_string(k) + " not available");
  }
  return strategy[k];
}

std::size_t PhasePoint::available_terms() const noexcept {
  return cyclic ? std::numeric_limits<std::size_t>::max() : strategy.size();
}

double distance(const PhasePoint& p, const PhasePoint& q, std::size_t horizon) {
  if (p.cell_count() != q.cell_count()) throw DimensionMismatchError("phase points differ in N");
  const double n = static_cast<double>(p.cell_count());
  double strategy_part = 0.0;
  double scale = 10.0;
  for (std::size_t k = 0; k < horizon; ++k, scale *= 10.0) {
    const auto a = static_cast<double>(p.term(k));
    const auto b = static_cast<double>(q.term(k));
    strategy_part += std::abs(a - b) / (n * scale);
  }
  return static_cast<double>(p.state.hamming_distance(q.state)) + strategy_part;
}

PhasePoint iterate(const PhasePoint& p, const IterationFunction& f, std::size_t steps) {
  PhasePoint out = p;
  for (std::size_t k = 0; k < steps; ++k) out.state = ci_step(out.state, f, p.term(k));
  if (p.cyclic) {
    std::vector<std::size_t> rotated(p.strategy.size());
    for (std::size_t i = 0; i < rotated.size(); ++i) rotated[i] = p.term(steps + i);
    out.strategy = std::move(rotated);
  } else {
    out.strategy.assign(p.strategy.begin() + static_cast<std::ptrdiff_t>(steps), p.strategy.end());
  }
  return out;
}

std::size_t agreement_horizon(double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  std::size_t k = 1;
  double bound = 0.1;
  while (bound > epsilon) {
    bound /= 10.0;
    ++k;
    if (k > 300) throw DomainError("epsilon too small");
  }
  return k;
}

namespace {

std::vector<bool> reachable(const std::vector<std::vector<std::uint32_t>>& adj,
                            std::uint32_t start, std::vector<std::uint32_t>* parent) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<std::uint32_t> frontier;
  seen[start] = true;
  frontier.push(start);
  if (parent) parent->assign(adj.size(), start);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      if (parent) (*parent)[w] = v;
      frontier.push(w);
    }
  }
  return seen;
}

BitVector decode_state(std::uint32_t s, std::size_t n) {
  BitVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, (s >> i) & 1u);
  return x;
}

std::uint32_t encode_state(const BitVector& x) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s |= static_cast<std::uint32_t>(x[i]) << i;
  return s;
}

}  // namespace

ConnectivityResult transition_graph_strongly_connected(const IterationFunction& f,
                                                       std::size_t cell_count,
                                                       std::uint64_t witness_seed) {
  if (cell_count == 0) throw DomainError("N must be >= 1");
  if (cell_count > 12) throw CapacityError("state enumeration limited to N <= 12");
  const std::uint32_t states = 1u << cell_count;
  std::vector<std::vector<std::uint32_t>> adj(states), radj(states);
  for (std::uint32_t s = 0; s < states; ++s) {
    const auto x = decode_state(s, cell_count);
    for (std::size_t c = 0; c < cell_count; ++c) {
      const auto t = encode_state(ci_step(x, f, c));
      adj[s].push_back(t);
      radj[t].push_back(s);
    }
  }

  ConnectivityResult result;
  std::vector<std::uint32_t> parent;
  const auto forward = reachable(adj, 0, &parent);
  const auto backward = reachable(radj, 0, nullptr);
  for (std::uint32_t s = 0; s < states; ++s) {
    if (!forward[s] || !backward[s]) {
      result.strongly_connected = false;
      // 0 cannot reach s, or s cannot reach 0.
      result.from = forward[s] ? s : 0;
      result.to = forward[s] ? 0 : s;
      return result;
    }
  }

  result.strongly_connected = true;
  std::mt19937_64 rng(witness_seed);
  result.from = static_cast<std::uint32_t>(rng() % states);
  result.to = static_cast<std::uint32_t>(rng() % states);
  // Route from -> 0 -> to. The first leg follows BFS parents on the reverse graph.
  std::vector<std::uint32_t> to_parent, rev_parent;
  reachable(adj, 0, &to_parent);
  reachable(radj, 0, &rev_parent);
  for (auto v = result.from; v != 0; v = rev_parent[v]) result.path.push_back(v);
  std::vector<std::uint32_t> tail;
  for (auto v = result.to; v != 0; v = to_parent[v]) tail.push_back(v);
  result.path.push_back(0);
  result.path.insert(result.path.end(), tail.rbegin(), tail.rend());
  return result;
}

PeriodicWitness periodic_witness(const PhasePoint& p, double epsilon) {
  const auto n = p.cell_count();
  if (n == 0) throw DomainError("phase point has no cells");
  const auto k = agreement_horizon(epsilon);

  PeriodicWitness w;
  w.point.state = p.state;
  w.point.cyclic = true;
  std::vector<std::size_t>& cycle = w.point.strategy;
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = p.term(i);
    if (t >= n) throw IndexError("strategy term exceeds N");
    cycle.push_back(t);
  }
  // Completion: revisit every cell flipped an odd number of times in the prefix.
  const auto parity = parity_vector(Strategy(n, cycle), cycle.size(), n);
  for (std::size_t c = 0; c < n; ++c) {
    if (parity[c]) cycle.push_back(c);
  }
  w.period = cycle.size();

  const auto negation = IterationFunction::negation();
  const auto replay = ci_run(w.point.state, negation, Strategy(n, cycle), w.period);
  w.verified = replay == w.point.state;
  return w;
}

SensitivityWitness sensitivity_witness(const PhasePoint& p, double epsilon, double delta) {
  const auto n = p.cell_count();
  if (n < 2) throw DomainError("sensitivity witness needs N >= 2");
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("delta must lie in (0, 1]");
  const auto k = agreement_horizon(epsilon);

  SensitivityWitness w;
  w.point = p;
  if (p.cyclic) {
    // Materialize so a single term can differ.
    w.point.cyclic = false;
    w.point.strategy.clear();
    for (std::size_t i = 0; i <= k; ++i) w.point.strategy.push_back(p.term(i));
  }
  if (w.point.strategy.size() <= k) {
    throw InsufficientStrategyError("phase point needs at least " + std::to_string(k + 1) +
                                    " strategy terms");
  }
  w.point.strategy[k] = (p.term(k) + 1) % n;
  w.steps = k + 1;

  const auto horizon = k + 1;
  w.initial_distance = distance(p, w.point, horizon);
  const auto negation = IterationFunction::negation();
  const auto px = iterate(p, negation, w.steps);
  const auto qx = iterate(w.point, negation, w.steps);
  w.final_hamming = px.state.hamming_distance(qx.state);
  w.verified = w.initial_distance < epsilon && static_cast<double>(w.final_hamming) > delta &&
               w.final_hamming >= 1;
  return w;
}

}  // namespace chaoswm
