#include "superteich/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "superteich/errors.hpp"

namespace superteich {

namespace {

constexpr std::size_t kMaxDetails = 10;

void note_failure(CheckReport& report, const std::string& message) {
  report.passed = false;
  if (report.details.size() < kMaxDetails) report.details.push_back(message);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class S>
S random_positive(std::mt19937_64& rng) {
  if constexpr (ScalarTraits<S>::exact) {
    Rational r(uniform_int(rng, 1, 9), uniform_int(rng, 1, 4));
    r.canonicalize();
    return r;
  } else {
    return std::uniform_real_distribution<double>(0.5, 3.0)(rng);
  }
}

template <class S>
S random_coefficient(std::mt19937_64& rng) {
  if constexpr (ScalarTraits<S>::exact) {
    int k = uniform_int(rng, -5, 4);
    if (k >= 0) ++k;
    Rational r(k, uniform_int(rng, 1, 4));
    r.canonicalize();
    return r;
  } else {
    return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  }
}

Monomial random_monomial(std::mt19937_64& rng, unsigned n, unsigned degree) {
  std::vector<unsigned> indices(n);
  for (unsigned i = 0; i < n; ++i) indices[i] = i;
  std::shuffle(indices.begin(), indices.end(), rng);
  Monomial m = 0;
  for (unsigned i = 0; i < degree; ++i) m |= Monomial{1} << indices[i];
  return m;
}

template <class S>
Grassmann<S> random_even_soul(std::mt19937_64& rng, unsigned n) {
  typename Grassmann<S>::Terms terms;
  if (n >= 2) {
    const int count = uniform_int(rng, 0, 3);
    for (int i = 0; i < count; ++i) {
      const unsigned degree = (n >= 4 && uniform_int(rng, 0, 3) == 0) ? 4 : 2;
      terms[random_monomial(rng, n, degree)] = random_coefficient<S>(rng);
    }
  }
  return Grassmann<S>::from_terms(n, std::move(terms));
}

template <class S>
Grassmann<S> random_odd(std::mt19937_64& rng, unsigned n) {
  typename Grassmann<S>::Terms terms;
  for (unsigned i = 0; i < n; ++i) {
    if (uniform_int(rng, 0, 1)) terms[Monomial{1} << i] = random_coefficient<S>(rng);
  }
  if (terms.empty() && n > 0) terms[Monomial{1} << uniform_int(rng, 0, n - 1)] = S(1);
  if (n >= 3 && uniform_int(rng, 0, 3) == 0) {
    terms[random_monomial(rng, n, 3)] = random_coefficient<S>(rng);
  }
  return Grassmann<S>::from_terms(n, std::move(terms));
}

template <class S>
OrientationState random_orientation(const GraphPtr& graph, std::mt19937_64& rng) {
  std::vector<int> signs(graph->num_edges());
  for (int& s : signs) s = uniform_int(rng, 0, 1) ? 1 : -1;
  return OrientationState(graph, std::move(signs));
}

// Distance to `target` after bringing `start` into the same reflection gauge.
template <class S>
double gauge_distance(const DecoratedState<S>& start, const DecoratedState<S>& target) {
  const auto reflections = reflections_between(start.orientation(), target.orientation());
  if (!reflections) return INFINITY;
  DecoratedState<S> gauged = start;
  for (VertexId v : *reflections) gauged = reflect(gauged, v);
  return state_distance_mod_sign(gauged, target);
}

template <class S>
double max_coefficient(const Grassmann<S>& x) {
  double m = 0;
  for (const auto& [mono, c] : x.terms()) m = std::max(m, std::abs(ScalarTraits<S>::to_double(c)));
  return m;
}

template <class S>
CheckReport run_ptolemy(const GraphPtr& graph, const CheckOptions& options) {
  CheckReport report;
  report.name = "ptolemy";
  const int cases = options.cases > 0 ? options.cases : 1000;
  constexpr int kFlipsPerCase = 4;
  std::mt19937_64 rng(options.seed);
  if (generic_edges(*graph).empty()) {
    report.details.push_back("no generic edges; no flips to check");
    return report;
  }
  for (int i = 0; i < cases; ++i) {
    DecoratedState<S> state = random_state<S>(graph, rng, true);
    for (int step = 0; step < kFlipsPerCase; ++step) {
      const auto edges = generic_edges(state.graph());
      if (edges.empty()) break;
      const EdgeId e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
      auto [next, record] = superflip(state, e);
      const auto lhs = state.lambda(e) * next.lambda(e);
      const auto rhs = state.lambda(record.a) * state.lambda(record.c) +
                       state.lambda(record.b) * state.lambda(record.d);
      double error;
      bool ok;
      if constexpr (ScalarTraits<S>::exact) {
        ok = lhs == rhs;
        error = ok ? 0.0 : max_abs_difference(lhs, rhs);
      } else {
        error = max_abs_difference(lhs, rhs) / std::max(1e-300, max_coefficient(rhs));
        ok = error <= options.tol;
      }
      report.max_error = std::max(report.max_error, error);
      if (!ok) {
        std::ostringstream msg;
        msg << "case " << i << " flip " << step << " edge " << e << ": e*f = " << to_string(lhs)
            << " but ac+bd = " << to_string(rhs);
        note_failure(report, msg.str());
      }
      state = std::move(next);
    }
    ++report.cases;
  }
  return report;
}

template <class S>
CheckReport run_involution(const GraphPtr& graph, const CheckOptions& options) {
  CheckReport report;
  report.name = "involution";
  const int cases = options.cases > 0 ? options.cases : 500;
  const auto edges = generic_edges(*graph);
  if (edges.empty()) throw PreconditionError("graph has no generic edge to flip");
  std::mt19937_64 rng(options.seed);
  std::vector<EdgeId> identity(graph->num_edges());
  for (EdgeId e = 0; e < graph->num_edges(); ++e) identity[e] = e;

  for (int i = 0; i < cases; ++i) {
    const EdgeId e = edges[uniform_int(rng, 0, static_cast<int>(edges.size()) - 1)];
    DecoratedState<S> start = [&] {
      if constexpr (ScalarTraits<S>::exact) {
        return random_square_friendly_state(graph, e, rng);
      } else {
        return random_state<double>(graph, rng, false);
      }
    }();
    auto [once, first] = superflip(start, e);
    auto [twice, second] = superflip(once, e);

    auto iso = find_isomorphism(start.graph(), twice.graph(), identity);
    if (!iso) {
      note_failure(report, "case " + std::to_string(i) + ": double flip changed the graph");
      continue;
    }
    DecoratedState<S> expected = start;
    for (VertexId v : first.reflections_applied) expected = reflect(expected, v);
    const auto moved = transport(expected, *iso, twice.graph_ptr());
    const double error = state_distance_mod_sign(moved, twice);
    report.max_error = std::max(report.max_error, error);
    const bool ok = moved.orientation() == twice.orientation() &&
                    states_equal_mod_sign(moved, twice, options.tol);
    if (!ok) {
      std::ostringstream msg;
      msg << "case " << i << " edge " << e << ": distance " << error;
      note_failure(report, msg.str());
    }
    ++report.cases;
  }
  return report;
}

template <class S>
CheckReport run_pentagon(const GraphPtr& graph, const CheckOptions& options) {
  CheckReport report;
  report.name = "pentagon";
  const int cases = options.cases > 0 ? options.cases : 100;
  const auto configurations = pentagon_configurations(*graph);
  if (configurations.empty()) {
    throw PreconditionError("graph has no pentagon configuration with generic flips");
  }
  std::mt19937_64 rng(options.seed);
  for (int i = 0; i < cases; ++i) {
    const auto config = configurations[i % configurations.size()];
    const DecoratedState<S> start = random_state<S>(graph, rng, ScalarTraits<S>::exact);
    DecoratedState<S> state = start;
    for (EdgeId e : {config.first, config.second, config.first, config.second, config.first}) {
      state = superflip(state, e).first;
    }
    std::vector<EdgeId> swapped(graph->num_edges());
    for (EdgeId e = 0; e < graph->num_edges(); ++e) swapped[e] = e;
    std::swap(swapped[config.first], swapped[config.second]);
    auto iso = find_isomorphism(start.graph(), state.graph(), swapped);
    if (!iso) {
      note_failure(report, "case " + std::to_string(i) + ": pentagon did not close combinatorially");
      continue;
    }
    const auto moved = transport(start, *iso, state.graph_ptr());
    const double error = gauge_distance(moved, state);
    report.max_error = std::max(report.max_error, error);
    if (!states_equivalent(moved, state, options.tol)) {
      std::ostringstream msg;
      msg << "case " << i << " edges (" << config.first << "," << config.second << "): distance "
          << error;
      note_failure(report, msg.str());
    }
    ++report.cases;
  }
  return report;
}

}  // namespace

std::vector<EdgeId> generic_edges(const FatGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_generic_flip(g, e)) out.push_back(e);
  }
  return out;
}

std::vector<PentagonConfiguration> pentagon_configurations(const FatGraph& g) {
  std::vector<PentagonConfiguration> out;
  for (EdgeId first = 0; first < g.num_edges(); ++first) {
    for (EdgeId second = 0; second < g.num_edges(); ++second) {
      if (first == second) continue;
      const std::array<VertexId, 2> ends_first{g.vertex_of(g.tail(first)), g.vertex_of(g.head(first))};
      const VertexId s0 = g.vertex_of(g.tail(second)), s1 = g.vertex_of(g.head(second));
      const bool adjacent = std::find(ends_first.begin(), ends_first.end(), s0) != ends_first.end() ||
                            std::find(ends_first.begin(), ends_first.end(), s1) != ends_first.end();
      if (!adjacent) continue;
      FatGraph current = g;
      bool generic = true;
      for (EdgeId e : {first, second, first, second, first}) {
        if (!is_generic_flip(current, e)) {
          generic = false;
          break;
        }
        current = whitehead_flip(current, e).first;
      }
      if (!generic) continue;
      std::vector<EdgeId> swapped(g.num_edges());
      for (EdgeId e = 0; e < g.num_edges(); ++e) swapped[e] = e;
      std::swap(swapped[first], swapped[second]);
      if (find_isomorphism(g, current, swapped)) out.push_back({first, second});
    }
  }
  return out;
}

template <class S>
DecoratedState<S> random_state(const GraphPtr& graph, std::mt19937_64& rng, bool classical) {
  const auto n = static_cast<unsigned>(graph->num_vertices());
  std::vector<Grassmann<S>> lambda, mu;
  for (EdgeId e = 0; e < graph->num_edges(); ++e) {
    lambda.push_back(Grassmann<S>(n, random_positive<S>(rng)) + random_even_soul<S>(rng, n));
  }
  for (VertexId v = 0; v < graph->num_vertices(); ++v) {
    mu.push_back(classical ? Grassmann<S>(n) : random_odd<S>(rng, n));
  }
  return DecoratedState<S>(random_orientation<S>(graph, rng), n, std::move(lambda), std::move(mu));
}

DecoratedState<Rational> random_square_friendly_state(const GraphPtr& graph, EdgeId e,
                                                      std::mt19937_64& rng) {
  DecoratedState<Rational> base = random_state<Rational>(graph, rng, false);
  const Quadrilateral q = quadrilateral(*graph, e);
  if (!q.generic()) throw PreconditionError("square-friendly states need a generic edge");

  // chi = (p/q)^2 with p^2 + q^2 a square makes sqrt(chi) and sqrt(1 + chi)
  // rational; with a, b, c squares d = (x_a x_c q / (x_b p))^2 is one too.
  const int m = uniform_int(rng, 2, 6);
  const int k = uniform_int(rng, 1, m - 1);
  Rational leg1 = m * m - k * k, leg2 = 2 * m * k;
  if (uniform_int(rng, 0, 1)) std::swap(leg1, leg2);
  auto root = [&] {
    Rational r(uniform_int(rng, 1, 5), uniform_int(rng, 1, 3));
    r.canonicalize();
    return r;
  };
  const Rational xa = root(), xb = root(), xc = root();
  const Rational xd = xa * xc * leg2 / (xb * leg1);

  const unsigned n = base.num_generators();
  auto lambda = base.lambda();
  auto with_body = [&](EdgeId edge, const Rational& x) {
    lambda[edge] = Grassmann<Rational>(n, Rational(x * x)) + lambda[edge].soul();
  };
  with_body(q.a, xa);
  with_body(q.b, xb);
  with_body(q.c, xc);
  with_body(q.d, xd);
  return DecoratedState<Rational>(base.orientation(), n, std::move(lambda), base.mu());
}

CheckReport check_ptolemy(const GraphPtr& graph, const CheckOptions& options) {
  return options.mode == ScalarMode::Rational ? run_ptolemy<Rational>(graph, options)
                                              : run_ptolemy<double>(graph, options);
}

CheckReport check_involution(const GraphPtr& graph, const CheckOptions& options) {
  return options.mode == ScalarMode::Rational ? run_involution<Rational>(graph, options)
                                              : run_involution<double>(graph, options);
}

CheckReport check_pentagon(const GraphPtr& graph, const CheckOptions& options) {
  return options.mode == ScalarMode::Rational ? run_pentagon<Rational>(graph, options)
                                              : run_pentagon<double>(graph, options);
}

CheckReport check_spincount(const GraphPtr& graph, const CheckOptions& options) {
  CheckReport report;
  report.name = "spincount";
  const Topology t = topology(*graph);
  const std::uint64_t brute = spin_class_count_brute_force(*graph, options.threads);
  const std::uint64_t by_rank = spin_class_count_by_rank(*graph);
  const std::uint64_t formula = std::uint64_t{1} << (2 * t.genus + t.punctures - 1);
  const auto classes = enumerate_spin_classes(graph);
  report.cases = 1;
  std::ostringstream line;
  line << "brute_force=" << brute << " rank_formula=" << by_rank << " topology_formula=" << formula
       << " enumerated=" << classes.size();
  report.details.push_back(line.str());
  if (brute != by_rank || by_rank != formula || classes.size() != formula) {
    note_failure(report, "spin class counts disagree");
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!(canonical_representative(classes[i]) == classes[i])) {
      note_failure(report, "representative " + classes[i].sign_string() + " is not canonical");
    }
    if (i > 0 && same_spin_class(classes[i - 1], classes[i])) {
      note_failure(report, "representatives " + std::to_string(i - 1) + " and " +
                               std::to_string(i) + " share a class");
    }
  }
  return report;
}

template DecoratedState<Rational> random_state<Rational>(const GraphPtr&, std::mt19937_64&, bool);
template DecoratedState<double> random_state<double>(const GraphPtr&, std::mt19937_64&, bool);

}  // namespace superteich
