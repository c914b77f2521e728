#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superteich {

using HalfEdge = int;
using EdgeId = int;
using VertexId = int;

// A connected trivalent fatgraph given by its half-edge structure.
//
//   alpha  pairs the two half-edges of each edge;
//   sigma  sends a half-edge to the counterclockwise-next one at its vertex;
//   phi  = sigma o alpha walks the boundary cycles (punctures).
//
// Each edge stores (tail, head); that ordered pair is the edge's reference
// direction, against which orientations are measured. Construction validates
// everything, so a FatGraph value is always well formed.
class FatGraph {
 public:
  // vertices[v] lists the half-edges at v in counterclockwise order;
  // edges[e] = {tail, head}. Half-edges must be exactly 0 .. 2E-1.
  FatGraph(std::vector<std::array<HalfEdge, 3>> vertices,
           std::vector<std::array<HalfEdge, 2>> edges,
           std::vector<std::string> vertex_names = {}, std::vector<int> edge_labels = {});

  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  HalfEdge alpha(HalfEdge h) const { return alpha_[h]; }
  HalfEdge sigma(HalfEdge h) const { return sigma_[h]; }
  HalfEdge phi(HalfEdge h) const { return sigma_[alpha_[h]]; }
  EdgeId edge_of(HalfEdge h) const { return edge_of_[h]; }
  VertexId vertex_of(HalfEdge h) const { return vertex_of_[h]; }
  bool is_tail(HalfEdge h) const { return edges_[edge_of_[h]][0] == h; }

  HalfEdge tail(EdgeId e) const { return edges_[e][0]; }
  HalfEdge head(EdgeId e) const { return edges_[e][1]; }
  bool is_loop(EdgeId e) const { return vertex_of(tail(e)) == vertex_of(head(e)); }

  const std::array<HalfEdge, 3>& vertex(VertexId v) const { return vertices_[v]; }
  const std::vector<std::array<HalfEdge, 3>>& vertices() const { return vertices_; }
  const std::vector<std::array<HalfEdge, 2>>& edges() const { return edges_; }

  // Display names: vertex names from the input file, edge labels are the
  // file's edge ids (dense ids are the positions).
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  int edge_label(EdgeId e) const { return edge_labels_[e]; }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<int>& edge_labels() const { return edge_labels_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(int label) const;

  friend bool operator==(const FatGraph& a, const FatGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::array<HalfEdge, 3>> vertices_;
  std::vector<std::array<HalfEdge, 2>> edges_;
  std::vector<std::string> vertex_names_;
  std::vector<int> edge_labels_;
  std::vector<HalfEdge> alpha_, sigma_;
  std::vector<EdgeId> edge_of_;
  std::vector<VertexId> vertex_of_;
};

// A boundary cycle as the phi-orbit of half-edges, starting from its
// smallest half-edge. Stepping through h traverses edge_of(h) from h to
// alpha(h).
using BoundaryCycle = std::vector<HalfEdge>;

// Cycles sorted by their first (smallest) half-edge.
std::vector<BoundaryCycle> boundary_cycles(const FatGraph& g);

// cycle_index[h] = index into boundary_cycles(g) of the cycle containing h.
std::vector<int> cycle_index(const FatGraph& g);

struct Topology {
  int genus = 0;
  int punctures = 0;
  int edges = 0;
  int vertices = 0;

  // Dimensions of the decorated super-Teichmueller coordinate space.
  int even_dimension() const { return 6 * genus - 6 + 3 * punctures; }
  int odd_dimension() const { return 4 * genus - 4 + 2 * punctures; }
  friend bool operator==(const Topology&, const Topology&) = default;
};

Topology topology(const FatGraph& g);

// Quadrilateral around edge e. With h = tail(e) at vertex u and h' = head(e)
// at vertex w:
//   a = edge(sigma h), b = edge(sigma^2 h), c = edge(sigma h'), d = edge(sigma^2 h').
// The triangle dual to u is (a, b, e), the one dual to w is (c, d, e).
struct Quadrilateral {
  EdgeId e, a, b, c, d;
  HalfEdge tail, head;
  HalfEdge ha, hb, hc, hd;
  VertexId ab_vertex, cd_vertex;

  bool generic() const;
};

// Throws PreconditionError for loops.
Quadrilateral quadrilateral(const FatGraph& g, EdgeId e);

// True when e is not a loop and e, a, b, c, d are pairwise distinct.
bool is_generic_flip(const FatGraph& g, EdgeId e);

struct FlipRecord {
  EdgeId flipped_edge = -1;
  EdgeId a = -1, b = -1, c = -1, d = -1;
  // Vertices before the flip (dual to triangles (a,b,e) and (c,d,e)) ...
  VertexId ab_vertex = -1, cd_vertex = -1;
  // ... and after it (dual to (a,d,f) and (b,c,f)).
  VertexId ad_vertex = -1, bc_vertex = -1;
  // Reflections applied to reach the canonical arrow before flipping,
  // as vertex ids of the graph before the flip.
  std::vector<VertexId> reflections_applied;
  // old edge id -> new edge id; the flipped edge keeps its id.
  std::vector<EdgeId> relabeling;
};

// Whitehead move on edge e: the returned graph has triangles (a,d,f) and
// (b,c,f) in place of (a,b,e), (c,d,e). f keeps e's id, with reference
// direction from the (b,c)-vertex to the (a,d)-vertex; the (a,d)-vertex keeps
// the old tail-vertex id and the (b,c)-vertex the old head-vertex id.
// Throws PreconditionError on loops and non-generic configurations.
std::pair<FatGraph, FlipRecord> whitehead_flip(const FatGraph& g, EdgeId e);

// old cycle index -> new cycle index, matching cycles through the half-edges
// of edges other than the flipped one (those keep their side of the surface).
std::vector<int> boundary_correspondence(const FatGraph& before, const FatGraph& after,
                                         EdgeId flipped_edge);

// A fatgraph isomorphism: a bijection of half-edges commuting with alpha and
// sigma. The induced maps on vertices and edges are included; reversed[e]
// says whether edge e's reference direction is mapped against the target's.
struct Isomorphism {
  std::vector<HalfEdge> half_edge_map;
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
  std::vector<bool> reversed;
};

// Finds an isomorphism from `from` to `to`. When edge_map is given, only
// isomorphisms inducing exactly that edge map are accepted. Returns the one
// with the smallest image of half-edge 0.
std::optional<Isomorphism> find_isomorphism(const FatGraph& from, const FatGraph& to,
                                            std::optional<std::span<const EdgeId>> edge_map = {});

}  // namespace superteich
