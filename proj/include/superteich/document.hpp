#pragma once

#include <map>
#include <string>
#include <string_view>

#include "superteich/fatgraph.hpp"
#include "superteich/spin.hpp"
#include "superteich/super_teich.hpp"

namespace superteich {

// Contents of a fatgraph file:
//
//   fatgraph v1
//   vertex <name>: <h> <h> <h>       counterclockwise cyclic order
//   edge <id>: <tail_h> <head_h>     reference direction tail -> head
//   orient <edge_id>: +|-
//   lambda <edge_id>: <rational|float>
//   mu <vertex>: <linear combination of t<i>>
//
// '#' starts a comment. Half-edge tokens are renumbered densely in ascending
// order, edges by ascending file id, vertices in order of appearance.
// Decoration values are kept as text until a scalar mode is chosen.
struct Document {
  GraphPtr graph;
  std::map<EdgeId, int> orient;
  std::map<EdgeId, std::string> lambda;
  std::map<VertexId, std::string> mu;
};

// Throws ParseError (GraphError for structural problems).
Document parse_document(std::string_view text);
FatGraph parse_fatgraph(std::string_view text);

// Missing orient lines default to '+'.
OrientationState document_orientation(const Document& doc);

// Missing lambdas default to 1, missing mus to the vertex's own generator;
// one generator per vertex.
template <class S>
DecoratedState<S> document_state(const Document& doc);

std::string format_fatgraph(const FatGraph& g);

// A complete document (graph, orientation and decoration) that parses back
// to the same state.
template <class S>
std::string format_document(const DecoratedState<S>& s);

std::string read_file(const std::string& path);

}  // namespace superteich
