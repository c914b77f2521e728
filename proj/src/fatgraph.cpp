#include "superteich/fatgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "superteich/errors.hpp"

namespace superteich {

FatGraph::FatGraph(std::vector<std::array<HalfEdge, 3>> vertices,
                   std::vector<std::array<HalfEdge, 2>> edges,
                   std::vector<std::string> vertex_names, std::vector<int> edge_labels)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      vertex_names_(std::move(vertex_names)),
      edge_labels_(std::move(edge_labels)) {
  const int n = num_half_edges();
  if (edges_.empty()) throw GraphError("fatgraph has no edges");
  if (3 * num_vertices() != n) {
    throw GraphError("half-edge count " + std::to_string(n) + " does not match " +
                     std::to_string(num_vertices()) + " trivalent vertices");
  }

  alpha_.assign(n, -1);
  edge_of_.assign(n, -1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    for (HalfEdge h : edges_[e]) {
      if (h < 0 || h >= n) throw GraphError("half-edge " + std::to_string(h) + " out of range");
      if (edge_of_[h] != -1) {
        throw GraphError("half-edge " + std::to_string(h) + " belongs to two edges");
      }
      edge_of_[h] = e;
    }
    if (edges_[e][0] == edges_[e][1]) throw GraphError("edge pairs a half-edge with itself");
    alpha_[edges_[e][0]] = edges_[e][1];
    alpha_[edges_[e][1]] = edges_[e][0];
  }

  sigma_.assign(n, -1);
  vertex_of_.assign(n, -1);
  for (VertexId v = 0; v < num_vertices(); ++v) {
    const auto& hs = vertices_[v];
    for (int i = 0; i < 3; ++i) {
      const HalfEdge h = hs[i];
      if (h < 0 || h >= n) throw GraphError("half-edge " + std::to_string(h) + " out of range");
      if (vertex_of_[h] != -1) {
        throw GraphError("half-edge " + std::to_string(h) + " appears at two vertex slots");
      }
      vertex_of_[h] = v;
      sigma_[h] = hs[(i + 1) % 3];
    }
  }
  for (HalfEdge h = 0; h < n; ++h) {
    if (edge_of_[h] == -1 || vertex_of_[h] == -1) {
      throw GraphError("dangling half-edge " + std::to_string(h));
    }
  }

  // Connectivity under <alpha, sigma>.
  std::vector<char> seen(n, 0);
  std::vector<HalfEdge> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const HalfEdge h = stack.back();
    stack.pop_back();
    for (HalfEdge next : {alpha_[h], sigma_[h]}) {
      if (!seen[next]) {
        seen[next] = 1;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  if (reached != n) throw GraphError("fatgraph is disconnected");

  if (vertex_names_.empty()) {
    for (VertexId v = 0; v < num_vertices(); ++v) vertex_names_.push_back("v" + std::to_string(v));
  }
  if (edge_labels_.empty()) {
    for (EdgeId e = 0; e < num_edges(); ++e) edge_labels_.push_back(e);
  }
  if (static_cast<int>(vertex_names_.size()) != num_vertices() ||
      static_cast<int>(edge_labels_.size()) != num_edges()) {
    throw GraphError("name tables do not match the graph size");
  }

  // Euler characteristic of the punctured surface must be negative.
  const int boundary = static_cast<int>(boundary_cycles(*this).size());
  const int chi = num_vertices() - num_edges();  // = 2 - 2g - s
  if (chi >= 0) {
    throw GraphError("punctured surface has non-negative Euler characteristic " +
                     std::to_string(chi));
  }
  if ((2 - chi - boundary) % 2 != 0 || 2 - chi - boundary < 0) {
    throw GraphError("Euler relation gives a non-integral genus");
  }
}

std::optional<VertexId> FatGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> FatGraph::find_edge(int label) const {
  auto it = std::find(edge_labels_.begin(), edge_labels_.end(), label);
  if (it == edge_labels_.end()) return std::nullopt;
  return static_cast<EdgeId>(it - edge_labels_.begin());
}

std::vector<BoundaryCycle> boundary_cycles(const FatGraph& g) {
  std::vector<BoundaryCycle> cycles;
  std::vector<char> seen(g.num_half_edges(), 0);
  for (HalfEdge start = 0; start < g.num_half_edges(); ++start) {
    if (seen[start]) continue;
    BoundaryCycle cycle;
    for (HalfEdge h = start; !seen[h]; h = g.phi(h)) {
      seen[h] = 1;
      cycle.push_back(h);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<int> cycle_index(const FatGraph& g) {
  std::vector<int> index(g.num_half_edges(), -1);
  const auto cycles = boundary_cycles(g);
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
    for (HalfEdge h : cycles[i]) index[h] = i;
  }
  return index;
}

Topology topology(const FatGraph& g) {
  Topology t;
  t.edges = g.num_edges();
  t.vertices = g.num_vertices();
  t.punctures = static_cast<int>(boundary_cycles(g).size());
  const int twice_genus = 2 - t.vertices + t.edges - t.punctures;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw GraphError("Euler relation gives a non-integral genus");
  }
  t.genus = twice_genus / 2;
  // A trivalent graph always satisfies these; a failure means corrupted data.
  if (t.edges != t.even_dimension() || t.vertices != t.odd_dimension()) {
    throw std::logic_error("coordinate counts disagree with the Euler relation");
  }
  return t;
}

bool Quadrilateral::generic() const {
  const std::array<EdgeId, 5> ids{e, a, b, c, d};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (ids[i] == ids[j]) return false;
    }
  }
  return true;
}

Quadrilateral quadrilateral(const FatGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) {
    throw PreconditionError("edge " + std::to_string(e) + " does not exist");
  }
  if (g.is_loop(e)) throw PreconditionError("edge " + std::to_string(e) + " is a loop");
  Quadrilateral q;
  q.e = e;
  q.tail = g.tail(e);
  q.head = g.head(e);
  q.ha = g.sigma(q.tail);
  q.hb = g.sigma(q.ha);
  q.hc = g.sigma(q.head);
  q.hd = g.sigma(q.hc);
  q.a = g.edge_of(q.ha);
  q.b = g.edge_of(q.hb);
  q.c = g.edge_of(q.hc);
  q.d = g.edge_of(q.hd);
  q.ab_vertex = g.vertex_of(q.tail);
  q.cd_vertex = g.vertex_of(q.head);
  return q;
}

bool is_generic_flip(const FatGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges() || g.is_loop(e)) return false;
  return quadrilateral(g, e).generic();
}

std::pair<FatGraph, FlipRecord> whitehead_flip(const FatGraph& g, EdgeId e) {
  const Quadrilateral q = quadrilateral(g, e);
  if (!q.generic()) {
    throw PreconditionError("non-generic flip unsupported: quadrilateral around edge " +
                            std::to_string(e) + " has repeated edges");
  }
  auto vertices = g.vertices();
  auto edges = g.edges();
  // Collapsing e gives the 4-valent cyclic order (a, b, c, d); split it the
  // other way so that d, a share one vertex and b, c the other.
  vertices[q.ab_vertex] = {q.tail, q.hd, q.ha};
  vertices[q.cd_vertex] = {q.head, q.hb, q.hc};
  edges[e] = {q.head, q.tail};

  FlipRecord record;
  record.flipped_edge = e;
  record.a = q.a;
  record.b = q.b;
  record.c = q.c;
  record.d = q.d;
  record.ab_vertex = q.ab_vertex;
  record.cd_vertex = q.cd_vertex;
  record.ad_vertex = q.ab_vertex;
  record.bc_vertex = q.cd_vertex;
  record.relabeling.resize(g.num_edges());
  for (EdgeId i = 0; i < g.num_edges(); ++i) record.relabeling[i] = i;

  return {FatGraph(std::move(vertices), std::move(edges), g.vertex_names(), g.edge_labels()),
          std::move(record)};
}

std::vector<int> boundary_correspondence(const FatGraph& before, const FatGraph& after,
                                         EdgeId flipped_edge) {
  const auto old_index = cycle_index(before);
  const auto new_index = cycle_index(after);
  const int count = *std::max_element(old_index.begin(), old_index.end()) + 1;
  std::vector<int> map(count, -1);
  for (HalfEdge h = 0; h < before.num_half_edges(); ++h) {
    if (before.edge_of(h) == flipped_edge) continue;
    int& target = map[old_index[h]];
    if (target == -1) {
      target = new_index[h];
    } else if (target != new_index[h]) {
      throw std::logic_error("boundary cycles do not correspond across the flip");
    }
  }
  if (std::find(map.begin(), map.end(), -1) != map.end()) {
    throw std::logic_error("boundary cycle without a surviving half-edge");
  }
  return map;
}

std::optional<Isomorphism> find_isomorphism(const FatGraph& from, const FatGraph& to,
                                            std::optional<std::span<const EdgeId>> edge_map) {
  const int n = from.num_half_edges();
  if (n != to.num_half_edges()) return std::nullopt;
  if (edge_map && static_cast<int>(edge_map->size()) != from.num_edges()) {
    throw PreconditionError("edge map size does not match the graph");
  }

  for (HalfEdge target = 0; target < n; ++target) {
    std::vector<HalfEdge> map(n, -1);
    std::vector<char> used(n, 0);
    map[0] = target;
    used[target] = 1;
    std::vector<HalfEdge> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      const HalfEdge h = stack.back();
      stack.pop_back();
      const std::array<std::pair<HalfEdge, HalfEdge>, 2> steps{
          std::pair{from.alpha(h), to.alpha(map[h])},
          std::pair{from.sigma(h), to.sigma(map[h])}};
      for (auto [next, image] : steps) {
        if (map[next] == -1) {
          if (used[image]) {
            ok = false;
            break;
          }
          map[next] = image;
          used[image] = 1;
          stack.push_back(next);
        } else if (map[next] != image) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;

    Isomorphism iso;
    iso.half_edge_map = map;
    iso.vertex_map.resize(from.num_vertices());
    iso.edge_map.resize(from.num_edges());
    iso.reversed.resize(from.num_edges());
    for (VertexId v = 0; v < from.num_vertices(); ++v) {
      iso.vertex_map[v] = to.vertex_of(map[from.vertex(v)[0]]);
    }
    for (EdgeId e = 0; e < from.num_edges(); ++e) {
      const HalfEdge image = map[from.tail(e)];
      iso.edge_map[e] = to.edge_of(image);
      iso.reversed[e] = !to.is_tail(image);
    }
    if (edge_map && !std::equal(iso.edge_map.begin(), iso.edge_map.end(), edge_map->begin())) {
      continue;
    }
    return iso;
  }
  return std::nullopt;
}

}  // namespace superteich
