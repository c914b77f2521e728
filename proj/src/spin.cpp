#include "superteich/spin.hpp"

#include <algorithm>
#include <thread>

#include "superteich/errors.hpp"

namespace superteich {

OrientationState::OrientationState(GraphPtr graph, std::vector<int> signs)
    : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (!graph_) throw PreconditionError("orientation without a graph");
  if (static_cast<int>(signs_.size()) != graph_->num_edges()) {
    throw PreconditionError("orientation must give exactly one sign per edge");
  }
  for (int s : signs_) {
    if (s != 1 && s != -1) throw PreconditionError("orientation signs must be +1 or -1");
  }
}

OrientationState OrientationState::all_positive(GraphPtr graph) {
  const int n = graph->num_edges();
  return OrientationState(std::move(graph), std::vector<int>(n, 1));
}

OrientationState OrientationState::from_mask(GraphPtr graph, std::uint64_t mask) {
  std::vector<int> signs(graph->num_edges());
  for (EdgeId e = 0; e < graph->num_edges(); ++e) signs[e] = (mask >> e) & 1 ? -1 : 1;
  return OrientationState(std::move(graph), std::move(signs));
}

Gf2Row OrientationState::negative_edges() const {
  Gf2Row row(signs_.size());
  for (std::size_t e = 0; e < signs_.size(); ++e) row[e] = signs_[e] < 0;
  return row;
}

std::string OrientationState::sign_string() const {
  std::string s;
  for (int sign : signs_) s += sign > 0 ? '+' : '-';
  return s;
}

OrientationState reflect(const OrientationState& o, VertexId v) {
  const FatGraph& g = o.graph();
  if (v < 0 || v >= g.num_vertices()) {
    throw PreconditionError("unknown vertex " + std::to_string(v));
  }
  auto signs = o.signs();
  for (HalfEdge h : g.vertex(v)) signs[g.edge_of(h)] = -signs[g.edge_of(h)];
  return OrientationState(o.graph_ptr(), std::move(signs));
}

Gf2Row reflection_vector(const FatGraph& g, VertexId v) {
  Gf2Row row(g.num_edges());
  for (HalfEdge h : g.vertex(v)) row.flip(g.edge_of(h));
  return row;
}

Gf2Elimination reflection_basis(const FatGraph& g) {
  Gf2Elimination basis(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) basis.insert(reflection_vector(g, v));
  return basis;
}

namespace {

void require_same_graph(const OrientationState& a, const OrientationState& b) {
  if (a.graph_ptr() != b.graph_ptr() && !(a.graph() == b.graph())) {
    throw PreconditionError("orientations live on different graphs");
  }
}

OrientationState from_row(const GraphPtr& graph, const Gf2Row& negative) {
  std::vector<int> signs(graph->num_edges());
  for (EdgeId e = 0; e < graph->num_edges(); ++e) signs[e] = negative.test(e) ? -1 : 1;
  return OrientationState(graph, std::move(signs));
}

}  // namespace

bool same_spin_class(const OrientationState& a, const OrientationState& b) {
  require_same_graph(a, b);
  const Gf2Row difference = a.negative_edges() ^ b.negative_edges();
  return reflection_basis(a.graph()).reduce(difference).none();
}

OrientationState canonical_representative(const OrientationState& o) {
  return from_row(o.graph_ptr(), reflection_basis(o.graph()).reduce(o.negative_edges()));
}

std::optional<std::vector<VertexId>> reflections_between(const OrientationState& from,
                                                         const OrientationState& to) {
  require_same_graph(from, to);
  const Gf2Elimination basis = reflection_basis(from.graph());
  Gf2Row combination;
  const Gf2Row rest = basis.reduce(from.negative_edges() ^ to.negative_edges(), combination);
  if (rest.any()) return std::nullopt;
  std::vector<VertexId> vertices;
  for (auto v = combination.find_first(); v != Gf2Row::npos; v = combination.find_next(v)) {
    vertices.push_back(static_cast<VertexId>(v));
  }
  return vertices;
}

std::vector<OrientationState> enumerate_spin_classes(const GraphPtr& graph) {
  const int n = graph->num_edges();
  const Gf2Elimination basis = reflection_basis(*graph);
  std::vector<char> is_pivot(n, 0);
  for (auto p : basis.pivots()) is_pivot[p] = 1;
  std::vector<int> free_edges;
  for (int e = 0; e < n; ++e) {
    if (!is_pivot[e]) free_edges.push_back(e);
  }
  if (free_edges.size() >= 63) throw PreconditionError("too many spin classes to enumerate");

  // Reduced rows vanish on pivots and are free on the rest. Counting the
  // free bits with the lowest edge as most significant visits them in
  // lexicographic order.
  const std::uint64_t count = std::uint64_t{1} << free_edges.size();
  const int k = static_cast<int>(free_edges.size());
  std::vector<OrientationState> classes;
  classes.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Gf2Row row(n);
    for (int j = 0; j < k; ++j) {
      if ((i >> (k - 1 - j)) & 1) row.set(free_edges[j]);
    }
    classes.push_back(from_row(graph, row));
  }
  return classes;
}

int incidence_rank(const FatGraph& g) { return static_cast<int>(reflection_basis(g).rank()); }

std::uint64_t spin_class_count_by_rank(const FatGraph& g) {
  const int free = g.num_edges() - incidence_rank(g);
  if (free >= 64) throw PreconditionError("spin class count overflows 64 bits");
  return std::uint64_t{1} << free;
}

namespace {

// Edge 0 is the most significant position and '+' (bit clear) sorts first.
bool lex_less(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t diff = x ^ y;
  if (!diff) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (x & lowest) == 0;
}

}  // namespace

std::uint64_t spin_class_count_brute_force(const FatGraph& g, unsigned threads) {
  const int n = g.num_edges();
  if (n > 30) throw PreconditionError("brute-force enumeration limited to 30 edges");

  std::vector<std::uint64_t> incidence(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (HalfEdge h : g.vertex(v)) incidence[v] ^= std::uint64_t{1} << g.edge_of(h);
  }
  // Every product of reflections, by Gray code over vertex subsets.
  const int nv = g.num_vertices();
  if (nv > 24) throw PreconditionError("brute-force enumeration limited to 24 vertices");
  std::vector<std::uint64_t> group;
  group.reserve(std::size_t{1} << nv);
  std::uint64_t current = 0;
  group.push_back(current);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << nv); ++i) {
    current ^= incidence[__builtin_ctzll(i)];
    group.push_back(current);
  }
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());

  const std::uint64_t total = std::uint64_t{1} << n;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      std::uint64_t count = 0;
      for (std::uint64_t m = begin; m < end; ++m) {
        bool minimal = true;
        for (std::uint64_t r : group) {
          if (lex_less(m ^ r, m)) {
            minimal = false;
            break;
          }
        }
        count += minimal;
      }
      partial[t] = count;
    });
  }
  for (auto& w : workers) w.join();
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

std::string to_string(PunctureType t) { return t == PunctureType::Ramond ? "R" : "NS"; }

int opposing_traversals(const OrientationState& o, const BoundaryCycle& cycle) {
  const FatGraph& g = o.graph();
  int k = 0;
  for (HalfEdge h : cycle) {
    const bool along_reference = g.is_tail(h);
    const bool along_orientation = (o.sign(g.edge_of(h)) > 0) == along_reference;
    if (!along_orientation) ++k;
  }
  return k;
}

std::vector<PunctureType> classify_punctures(const OrientationState& o) {
  std::vector<PunctureType> types;
  for (const auto& cycle : boundary_cycles(o.graph())) {
    types.push_back(opposing_traversals(o, cycle) % 2 == 0 ? PunctureType::Ramond
                                                            : PunctureType::NeveuSchwarz);
  }
  return types;
}

std::pair<OrientationState, FlipRecord> flip_orientation(const OrientationState& o, EdgeId e) {
  const FatGraph& g = o.graph();
  if (!is_generic_flip(g, e)) {
    // Let whitehead_flip produce the precise diagnostic.
    whitehead_flip(g, e);
  }
  OrientationState current = o;
  std::vector<VertexId> reflected;
  if (current.sign(e) > 0) {
    const VertexId tail_vertex = g.vertex_of(g.tail(e));
    current = reflect(current, tail_vertex);
    reflected.push_back(tail_vertex);
  }

  auto [flipped, record] = whitehead_flip(g, e);
  record.reflections_applied = std::move(reflected);

  auto signs = current.signs();
  signs[record.b] = -signs[record.b];
  // f's reference direction already runs from the (b,c)- to the (a,d)-vertex.
  signs[e] = 1;
  return {OrientationState(share(std::move(flipped)), std::move(signs)), std::move(record)};
}

OrientationState transport(const OrientationState& o, const Isomorphism& iso, GraphPtr target) {
  std::vector<int> signs(target->num_edges(), 1);
  for (EdgeId e = 0; e < o.graph().num_edges(); ++e) {
    signs[iso.edge_map[e]] = iso.reversed[e] ? -o.sign(e) : o.sign(e);
  }
  return OrientationState(std::move(target), std::move(signs));
}

}  // namespace superteich
