#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "superteich/fatgraph.hpp"
#include "superteich/scalar.hpp"
#include "superteich/spin.hpp"
#include "superteich/super_teich.hpp"

namespace superteich {

// Property suites over randomly decorated states. All randomness comes from
// `seed`, so a report is reproducible for a given (graph, seed, mode).
struct CheckOptions {
  std::uint64_t seed = 1;
  ScalarMode mode = ScalarMode::Float;
  double tol = 1e-9;
  int cases = 0;  // 0 selects the suite's default
  unsigned threads = 0;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  int cases = 0;
  double max_error = 0;
  std::vector<std::string> details;
};

// Every flip of random mu = 0 states satisfies e f = ac + bd: exactly in
// rational mode, with relative error <= tol in float mode.
CheckReport check_ptolemy(const GraphPtr& graph, const CheckOptions& options);

// Double superflip on the same edge returns the starting state, after the
// first flip's recorded auto-reflection, modulo the global odd sign.
// Rational mode draws states whose chi and 1 + chi are rational squares.
CheckReport check_involution(const GraphPtr& graph, const CheckOptions& options);

// The alternating 5-flip sequence on two edges of a generic pentagon returns
// the initial state modulo relabeling, reflections and global odd sign.
// Rational mode runs the classical (mu = 0) pentagon exactly.
CheckReport check_pentagon(const GraphPtr& graph, const CheckOptions& options);

// Brute-force spin class count = 2^(E - rank) = 2^(2g + s - 1), and the
// enumerated representatives are pairwise inequivalent.
CheckReport check_spincount(const GraphPtr& graph, const CheckOptions& options);

// Edges (first, second) sharing a vertex such that flipping first, second,
// first, second, first is generic at every step and returns a graph
// isomorphic to the start with the two edge ids exchanged.
struct PentagonConfiguration {
  EdgeId first, second;
};
std::vector<PentagonConfiguration> pentagon_configurations(const FatGraph& g);

std::vector<EdgeId> generic_edges(const FatGraph& g);

// Random decorations. Lambda bodies are positive; souls are sparse even
// combinations; mus are random linear combinations of the generators
// (zero when `classical`).
template <class S>
DecoratedState<S> random_state(const GraphPtr& graph, std::mt19937_64& rng, bool classical);

// Rational state whose quadrilateral around e has chi = ac/bd and 1 + chi
// both rational squares (via a Pythagorean triple).
DecoratedState<Rational> random_square_friendly_state(const GraphPtr& graph, EdgeId e,
                                                      std::mt19937_64& rng);

}  // namespace superteich
