#include "superteich/super_teich.hpp"

#include <algorithm>

#include "superteich/errors.hpp"

namespace superteich {

template <class S>
DecoratedState<S>::DecoratedState(OrientationState orientation, unsigned num_generators,
                                  std::vector<Element> lambda, std::vector<Element> mu)
    : orientation_(std::move(orientation)),
      num_generators_(num_generators),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)) {
  const FatGraph& g = orientation_.graph();
  if (static_cast<int>(lambda_.size()) != g.num_edges()) {
    throw PreconditionError("need one lambda-length per edge");
  }
  if (static_cast<int>(mu_.size()) != g.num_vertices()) {
    throw PreconditionError("need one mu-invariant per vertex");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Element& l = lambda_[e];
    if (l.num_generators() != num_generators_) {
      throw PreconditionError("lambda on edge " + std::to_string(e) + " is in another algebra");
    }
    if (!l.is_even()) throw PreconditionError("lambda on edge " + std::to_string(e) + " is not even");
    if (ScalarTraits<S>::sign(l.body()) <= 0) {
      throw PreconditionError("lambda on edge " + std::to_string(e) + " has non-positive body");
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const Element& m = mu_[v];
    if (m.num_generators() != num_generators_) {
      throw PreconditionError("mu at vertex " + std::to_string(v) + " is in another algebra");
    }
    if (!m.is_odd()) throw PreconditionError("mu at vertex " + std::to_string(v) + " is not odd");
  }
}

template <class S>
DecoratedState<S> DecoratedState<S>::standard(OrientationState orientation) {
  const FatGraph& g = orientation.graph();
  const auto n = static_cast<unsigned>(g.num_vertices());
  std::vector<Element> lambda(g.num_edges(), Element(n, S(1)));
  std::vector<Element> mu;
  for (unsigned v = 0; v < n; ++v) mu.push_back(Element::generator(n, v));
  return DecoratedState(std::move(orientation), n, std::move(lambda), std::move(mu));
}

template <class S>
DecoratedState<S> reflect(const DecoratedState<S>& s, VertexId v) {
  auto orientation = reflect(s.orientation(), v);
  auto mu = s.mu();
  mu[v] = -mu[v];
  return DecoratedState<S>(std::move(orientation), s.num_generators(), s.lambda(), std::move(mu));
}

template <class S>
std::pair<DecoratedState<S>, FlipRecord> superflip(const DecoratedState<S>& s, EdgeId e) {
  using Element = Grassmann<S>;
  auto [orientation, record] = flip_orientation(s.orientation(), e);

  auto mu = s.mu();
  for (VertexId v : record.reflections_applied) mu[v] = -mu[v];

  const unsigned n = s.num_generators();
  const Element one(n, S(1));
  const Element& a = s.lambda(record.a);
  const Element& b = s.lambda(record.b);
  const Element& c = s.lambda(record.c);
  const Element& d = s.lambda(record.d);
  const Element& old = s.lambda(e);
  const Element& theta = mu[record.ab_vertex];
  const Element& sigma = mu[record.cd_vertex];

  const Element ac = a * c;
  const Element bd = b * d;
  const Element ptolemy = ac + bd;
  Element f(n), nu(n), mu_new(n);
  if (theta.is_zero() && sigma.is_zero()) {
    f = ginv(old) * ptolemy;
  } else {
    const Element chi = ac * ginv(bd);
    const Element root_chi = gsqrt(chi);
    const Element inv_root = ginv(gsqrt(one + chi));
    f = ginv(old) * ptolemy * (one + sigma * theta * root_chi * ginv(one + chi));
    nu = (sigma - theta * root_chi) * inv_root;
    mu_new = (theta + sigma * root_chi) * inv_root;
  }
  if (ScalarTraits<S>::sign(f.body()) <= 0) {
    throw std::logic_error("flip produced a lambda-length with non-positive body");
  }

  auto lambda = s.lambda();
  lambda[e] = std::move(f);
  mu[record.ad_vertex] = std::move(mu_new);
  mu[record.bc_vertex] = std::move(nu);
  return {DecoratedState<S>(std::move(orientation), n, std::move(lambda), std::move(mu)),
          std::move(record)};
}

template <class S>
std::vector<Grassmann<S>> shear_coordinates(const DecoratedState<S>& s) {
  const FatGraph& g = s.graph();
  std::vector<Grassmann<S>> z;
  z.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Quadrilateral q = quadrilateral(g, e);
    const auto ratio = s.lambda(q.a) * s.lambda(q.c) * ginv(s.lambda(q.b) * s.lambda(q.d));
    z.push_back(glog(ratio));
  }
  return z;
}

template <class S>
std::vector<PunctureResidual<S>> check_puncture_relation(const DecoratedState<S>& s) {
  const auto z = shear_coordinates(s);
  std::vector<PunctureResidual<S>> out;
  for (const auto& cycle : boundary_cycles(s.graph())) {
    PunctureResidual<S> r{Grassmann<S>(s.num_generators()), 0.0, Grassmann<S>(s.num_generators())};
    for (HalfEdge h : cycle) r.residual += z[s.graph().edge_of(h)];
    r.body = ScalarTraits<S>::to_double(r.residual.body());
    r.soul = r.residual.soul();
    out.push_back(std::move(r));
  }
  return out;
}

template <class S>
DecoratedState<S> classical_limit(const DecoratedState<S>& s) {
  const unsigned n = s.num_generators();
  std::vector<Grassmann<S>> lambda;
  for (const auto& l : s.lambda()) lambda.emplace_back(n, l.body());
  std::vector<Grassmann<S>> mu(s.mu().size(), Grassmann<S>(n));
  return DecoratedState<S>(s.orientation(), n, std::move(lambda), std::move(mu));
}

namespace {

template <class S>
void require_compatible(const DecoratedState<S>& a, const DecoratedState<S>& b) {
  if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph())) {
    throw PreconditionError("decorated states live on different graphs");
  }
  if (a.num_generators() != b.num_generators()) {
    throw PreconditionError("decorated states use different algebras");
  }
}

}  // namespace

template <class S>
bool states_equal_mod_sign(const DecoratedState<S>& a, const DecoratedState<S>& b, double tol) {
  require_compatible(a, b);
  for (std::size_t e = 0; e < a.lambda().size(); ++e) {
    if (!approx_equal(a.lambda()[e], b.lambda()[e], tol)) return false;
  }
  bool same = true, opposite = true;
  for (std::size_t v = 0; v < a.mu().size() && (same || opposite); ++v) {
    same = same && approx_equal(a.mu()[v], b.mu()[v], tol);
    opposite = opposite && approx_equal(a.mu()[v], -b.mu()[v], tol);
  }
  return same || opposite;
}

template <class S>
bool states_equivalent(const DecoratedState<S>& a, const DecoratedState<S>& b, double tol) {
  require_compatible(a, b);
  const auto reflections = reflections_between(a.orientation(), b.orientation());
  if (!reflections) return false;
  DecoratedState<S> gauged = a;
  for (VertexId v : *reflections) gauged = reflect(gauged, v);
  return gauged.orientation() == b.orientation() && states_equal_mod_sign(gauged, b, tol);
}

template <class S>
double state_distance_mod_sign(const DecoratedState<S>& a, const DecoratedState<S>& b) {
  require_compatible(a, b);
  double lambda_distance = 0;
  for (std::size_t e = 0; e < a.lambda().size(); ++e) {
    lambda_distance = std::max(lambda_distance, max_abs_difference(a.lambda()[e], b.lambda()[e]));
  }
  double same = 0, opposite = 0;
  for (std::size_t v = 0; v < a.mu().size(); ++v) {
    same = std::max(same, max_abs_difference(a.mu()[v], b.mu()[v]));
    opposite = std::max(opposite, max_abs_difference(a.mu()[v], -b.mu()[v]));
  }
  return std::max(lambda_distance, std::min(same, opposite));
}

template <class S>
DecoratedState<S> transport(const DecoratedState<S>& s, const Isomorphism& iso, GraphPtr target) {
  const unsigned n = s.num_generators();
  std::vector<Grassmann<S>> lambda(target->num_edges(), Grassmann<S>(n));
  std::vector<Grassmann<S>> mu(target->num_vertices(), Grassmann<S>(n));
  for (EdgeId e = 0; e < s.graph().num_edges(); ++e) lambda[iso.edge_map[e]] = s.lambda(e);
  for (VertexId v = 0; v < s.graph().num_vertices(); ++v) mu[iso.vertex_map[v]] = s.mu(v);
  auto orientation = transport(s.orientation(), iso, std::move(target));
  return DecoratedState<S>(std::move(orientation), n, std::move(lambda), std::move(mu));
}

#define SUPERTEICH_INSTANTIATE(S)                                                              \
  template class DecoratedState<S>;                                                            \
  template DecoratedState<S> reflect(const DecoratedState<S>&, VertexId);                      \
  template std::pair<DecoratedState<S>, FlipRecord> superflip(const DecoratedState<S>&,       \
                                                              EdgeId);                         \
  template std::vector<Grassmann<S>> shear_coordinates(const DecoratedState<S>&);             \
  template std::vector<PunctureResidual<S>> check_puncture_relation(const DecoratedState<S>&); \
  template DecoratedState<S> classical_limit(const DecoratedState<S>&);                        \
  template bool states_equal_mod_sign(const DecoratedState<S>&, const DecoratedState<S>&,     \
                                      double);                                                 \
  template bool states_equivalent(const DecoratedState<S>&, const DecoratedState<S>&, double); \
  template double state_distance_mod_sign(const DecoratedState<S>&, const DecoratedState<S>&); \
  template DecoratedState<S> transport(const DecoratedState<S>&, const Isomorphism&, GraphPtr);

SUPERTEICH_INSTANTIATE(Rational)
SUPERTEICH_INSTANTIATE(double)

#undef SUPERTEICH_INSTANTIATE

}  // namespace superteich
