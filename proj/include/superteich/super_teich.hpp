#pragma once

#include <utility>
#include <vector>

#include "superteich/fatgraph.hpp"
#include "superteich/grassmann.hpp"
#include "superteich/spin.hpp"

namespace superteich {

// Decorated super-Teichmueller coordinates on one fatgraph: an even
// lambda-length per edge (positive body) and an odd mu-invariant per vertex,
// all in one Grassmann algebra, together with the spin structure given by an
// edge orientation. The odd generators are fixed once; flips only form
// linear combinations of them.
template <class S>
class DecoratedState {
 public:
  using Element = Grassmann<S>;

  // Throws PreconditionError unless |lambda| = E, |mu| = V, every lambda is
  // even with positive body and every mu is odd.
  DecoratedState(OrientationState orientation, unsigned num_generators,
                 std::vector<Element> lambda, std::vector<Element> mu);

  // lambda = 1 on every edge, mu at vertex v = t_v, one generator per vertex.
  static DecoratedState standard(OrientationState orientation);

  const FatGraph& graph() const { return orientation_.graph(); }
  const GraphPtr& graph_ptr() const { return orientation_.graph_ptr(); }
  const OrientationState& orientation() const { return orientation_; }
  unsigned num_generators() const { return num_generators_; }
  const std::vector<Element>& lambda() const { return lambda_; }
  const std::vector<Element>& mu() const { return mu_; }
  const Element& lambda(EdgeId e) const { return lambda_[e]; }
  const Element& mu(VertexId v) const { return mu_[v]; }

 private:
  OrientationState orientation_;
  unsigned num_generators_;
  std::vector<Element> lambda_;
  std::vector<Element> mu_;
};

// Reflection acting on a decorated state: reverses the orientation at v and
// negates mu_v. Reflecting at every vertex is the global odd sign change.
template <class S>
DecoratedState<S> reflect(const DecoratedState<S>& s, VertexId v);

// Super Ptolemy transformation on edge e. With theta = mu at the
// (a,b)-vertex and sigma = mu at the (c,d)-vertex, chi = ac/bd:
//
//   e f = (ac + bd) (1 + sigma theta sqrt(chi) / (1 + chi))
//   nu  = (sigma - theta sqrt(chi)) / sqrt(1 + chi)     at the (b,c)-vertex
//   mu  = (theta + sigma sqrt(chi)) / sqrt(1 + chi)     at the (a,d)-vertex
//
// The state is first reflected into the canonical arrow configuration if
// needed (recorded in the FlipRecord); the orientation then evolves as in
// flip_orientation. When theta = sigma = 0 no square roots are taken.
// Throws PreconditionError for non-generic flips and AlgebraError when an
// exact square root does not exist.
template <class S>
std::pair<DecoratedState<S>, FlipRecord> superflip(const DecoratedState<S>& s, EdgeId e);

// z_e = log(a c / (b d)) per edge for the quadrilateral labels around e.
template <class S>
std::vector<Grassmann<S>> shear_coordinates(const DecoratedState<S>& s);

template <class S>
struct PunctureResidual {
  Grassmann<S> residual;  // sum of z over the cycle's traversals
  double body = 0;
  Grassmann<S> soul;
};

// One residual per boundary cycle, indexed like boundary_cycles(graph).
template <class S>
std::vector<PunctureResidual<S>> check_puncture_relation(const DecoratedState<S>& s);

// All mu set to zero and every lambda replaced by its body.
template <class S>
DecoratedState<S> classical_limit(const DecoratedState<S>& s);

// lambdas agree (exactly in rational mode, within tol otherwise) and the mus
// agree either all with the same sign or all with opposite sign.
template <class S>
bool states_equal_mod_sign(const DecoratedState<S>& a, const DecoratedState<S>& b,
                           double tol = 1e-9);

// Equality modulo the reflection gauge: orientations in the same spin class,
// and after applying the reflections relating them the states agree modulo
// global odd sign.
template <class S>
bool states_equivalent(const DecoratedState<S>& a, const DecoratedState<S>& b,
                       double tol = 1e-9);

// Largest coefficient difference between the lambdas and between the mus
// (taking the better of the two global signs).
template <class S>
double state_distance_mod_sign(const DecoratedState<S>& a, const DecoratedState<S>& b);

// Moves a state along a fatgraph isomorphism onto `target`.
template <class S>
DecoratedState<S> transport(const DecoratedState<S>& s, const Isomorphism& iso, GraphPtr target);

}  // namespace superteich
