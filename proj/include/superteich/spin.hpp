#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superteich/fatgraph.hpp"
#include "superteich/gf2.hpp"

namespace superteich {

using GraphPtr = std::shared_ptr<const FatGraph>;

inline GraphPtr share(FatGraph g) { return std::make_shared<const FatGraph>(std::move(g)); }

// An orientation of every edge, as a sign relative to the edge's reference
// direction: +1 means tail -> head. Spin structures are classes of these
// modulo fatgraph reflections.
class OrientationState {
 public:
  OrientationState(GraphPtr graph, std::vector<int> signs);

  static OrientationState all_positive(GraphPtr graph);
  // Bit e of mask set means edge e carries sign -1.
  static OrientationState from_mask(GraphPtr graph, std::uint64_t mask);

  const FatGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int sign(EdgeId e) const { return signs_[e]; }
  const std::vector<int>& signs() const { return signs_; }

  // Edges with sign -1, as a GF(2) vector indexed by edge id.
  Gf2Row negative_edges() const;
  // "+-+..." in edge-id order.
  std::string sign_string() const;

  friend bool operator==(const OrientationState& a, const OrientationState& b) {
    return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.signs_ == b.signs_;
  }

 private:
  GraphPtr graph_;
  std::vector<int> signs_;
};

// Reverses every edge incident to v; a loop at v is toggled twice and keeps
// its sign.
OrientationState reflect(const OrientationState& o, VertexId v);

// Incidence vector of v over GF(2): one toggle per incidence.
Gf2Row reflection_vector(const FatGraph& g, VertexId v);

// Elimination basis of the reflection subgroup, rows inserted in vertex order.
Gf2Elimination reflection_basis(const FatGraph& g);

bool same_spin_class(const OrientationState& a, const OrientationState& b);

// Lexicographically smallest sign vector in the class (edge 0 first, + < -).
OrientationState canonical_representative(const OrientationState& o);

// A vertex set whose reflections take `from` to `to`, if the two are in the
// same class. On a connected graph the set is unique up to complement; the
// one returned is the combination found by elimination.
std::optional<std::vector<VertexId>> reflections_between(const OrientationState& from,
                                                         const OrientationState& to);

// One canonical representative per spin class, sorted lexicographically.
std::vector<OrientationState> enumerate_spin_classes(const GraphPtr& graph);

int incidence_rank(const FatGraph& g);

// 2^(E - rank) from the GF(2) rank of the vertex incidence vectors.
std::uint64_t spin_class_count_by_rank(const FatGraph& g);

// Independent oracle: counts orientations that are the lexicographic minimum
// of their reflection orbit, scanning all 2^E sign vectors. Splits the scan
// over `threads` workers (0 = hardware concurrency) and sums in fixed order.
// Limited to graphs with at most 30 edges.
std::uint64_t spin_class_count_brute_force(const FatGraph& g, unsigned threads = 0);

enum class PunctureType { Ramond, NeveuSchwarz };

std::string to_string(PunctureType t);

// Number of traversals along the cycle against the oriented edge direction.
int opposing_traversals(const OrientationState& o, const BoundaryCycle& cycle);

// R/NS type per boundary cycle, indexed like boundary_cycles(graph):
// an even number of opposing traversals is Ramond, odd is Neveu-Schwarz.
std::vector<PunctureType> classify_punctures(const OrientationState& o);

// Orientation evolution under the flip of e. The canonical configuration has
// e pointing from the (c,d)-vertex to the (a,b)-vertex (sign -1); otherwise
// the state is first reflected at e's tail vertex and the reflection is
// recorded. Then a, c, d keep their orientation, b is reversed and f points
// from the (b,c)-vertex to the (a,d)-vertex.
std::pair<OrientationState, FlipRecord> flip_orientation(const OrientationState& o, EdgeId e);

// Moves an orientation along a fatgraph isomorphism onto `target`.
OrientationState transport(const OrientationState& o, const Isomorphism& iso, GraphPtr target);

}  // namespace superteich
