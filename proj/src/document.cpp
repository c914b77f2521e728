#include "superteich/document.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "superteich/errors.hpp"

namespace superteich {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

long parse_non_negative(std::string_view token, int line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    fail(line, std::string("expected a non-negative integer ") + what + ", got '" +
                   std::string(token) + "'");
  }
  return value;
}

struct RawLine {
  int number;
  std::string key;    // token after the keyword
  std::string value;  // text after ':'
};

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<std::pair<std::string, std::vector<long>>> raw_vertices;
  std::vector<int> vertex_lines;
  std::vector<std::pair<long, std::array<long, 2>>> raw_edges;
  std::vector<int> edge_lines;
  std::vector<RawLine> orient_lines, lambda_lines, mu_lines;

  bool header = false;
  int number = 0;
  std::istringstream stream{std::string(text)};
  std::string buffer;
  while (std::getline(stream, buffer)) {
    ++number;
    std::string_view line = buffer;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!header) {
      if (split_words(line) != std::vector<std::string_view>{"fatgraph", "v1"}) {
        fail(number, "expected header 'fatgraph v1'");
      }
      header = true;
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(number, "expected '<keyword> <id>: ...'");
    const auto head = split_words(line.substr(0, colon));
    const std::string_view body = trim(line.substr(colon + 1));
    if (head.size() != 2) fail(number, "expected '<keyword> <id>:'");
    const std::string_view keyword = head[0];

    if (keyword == "vertex") {
      std::vector<long> hs;
      for (auto w : split_words(body)) hs.push_back(parse_non_negative(w, number, "half-edge"));
      if (hs.size() != 3) {
        throw GraphError("line " + std::to_string(number) + ": non-trivalent vertex '" +
                         std::string(head[1]) + "' has " + std::to_string(hs.size()) +
                         " half-edges");
      }
      raw_vertices.emplace_back(std::string(head[1]), hs);
      vertex_lines.push_back(number);
    } else if (keyword == "edge") {
      const long id = parse_non_negative(head[1], number, "edge id");
      const auto words = split_words(body);
      if (words.size() != 2) fail(number, "an edge needs exactly two half-edges");
      raw_edges.push_back({id,
                           {parse_non_negative(words[0], number, "half-edge"),
                            parse_non_negative(words[1], number, "half-edge")}});
      edge_lines.push_back(number);
    } else if (keyword == "orient") {
      orient_lines.push_back({number, std::string(head[1]), std::string(body)});
    } else if (keyword == "lambda") {
      lambda_lines.push_back({number, std::string(head[1]), std::string(body)});
    } else if (keyword == "mu") {
      mu_lines.push_back({number, std::string(head[1]), std::string(body)});
    } else {
      fail(number, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!header) throw ParseError("missing header 'fatgraph v1'");
  if (raw_edges.empty()) throw GraphError("fatgraph has no edges");

  // Every half-edge token must sit at exactly one vertex slot and one edge end.
  std::map<long, int> at_vertex, at_edge;
  for (auto& [name, hs] : raw_vertices) {
    for (long h : hs) ++at_vertex[h];
  }
  for (auto& [id, hs] : raw_edges) {
    for (long h : hs) ++at_edge[h];
  }
  std::set<long> tokens;
  for (auto& [h, count] : at_vertex) tokens.insert(h);
  for (auto& [h, count] : at_edge) tokens.insert(h);
  for (long h : tokens) {
    const int v = at_vertex.count(h) ? at_vertex[h] : 0;
    const int e = at_edge.count(h) ? at_edge[h] : 0;
    if (v == 0 || e == 0) throw GraphError("dangling half-edge " + std::to_string(h));
    if (v > 1) throw GraphError("half-edge " + std::to_string(h) + " listed at several vertex slots");
    if (e > 1) throw GraphError("half-edge " + std::to_string(h) + " listed in several edges");
  }
  std::map<long, HalfEdge> dense;
  for (long h : tokens) dense.emplace(h, static_cast<HalfEdge>(dense.size()));

  std::vector<std::string> names;
  std::vector<std::array<HalfEdge, 3>> vertices;
  for (size_t i = 0; i < raw_vertices.size(); ++i) {
    auto& [name, hs] = raw_vertices[i];
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      fail(vertex_lines[i], "duplicate vertex name '" + name + "'");
    }
    names.push_back(name);
    vertices.push_back({dense[hs[0]], dense[hs[1]], dense[hs[2]]});
  }

  std::vector<size_t> order(raw_edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return raw_edges[x].first < raw_edges[y].first; });
  std::vector<std::array<HalfEdge, 2>> edges;
  std::vector<int> labels;
  for (size_t i : order) {
    const auto& [id, hs] = raw_edges[i];
    if (!labels.empty() && labels.back() == id) {
      fail(edge_lines[i], "duplicate edge id " + std::to_string(id));
    }
    labels.push_back(static_cast<int>(id));
    edges.push_back({dense[hs[0]], dense[hs[1]]});
  }

  Document doc;
  doc.graph = share(FatGraph(std::move(vertices), std::move(edges), std::move(names), labels));
  const FatGraph& g = *doc.graph;

  auto edge_ref = [&](const RawLine& l) {
    const long label = parse_non_negative(l.key, l.number, "edge id");
    auto e = g.find_edge(static_cast<int>(label));
    if (!e) fail(l.number, "unknown edge " + l.key);
    return *e;
  };
  for (const auto& l : orient_lines) {
    const EdgeId e = edge_ref(l);
    if (l.value != "+" && l.value != "-") fail(l.number, "orientation must be '+' or '-'");
    if (!doc.orient.emplace(e, l.value == "+" ? 1 : -1).second) {
      fail(l.number, "duplicate orientation for edge " + l.key);
    }
  }
  for (const auto& l : lambda_lines) {
    const EdgeId e = edge_ref(l);
    if (l.value.empty()) fail(l.number, "missing lambda value");
    if (!doc.lambda.emplace(e, l.value).second) fail(l.number, "duplicate lambda for edge " + l.key);
  }
  for (const auto& l : mu_lines) {
    auto v = g.find_vertex(l.key);
    if (!v) fail(l.number, "unknown vertex '" + l.key + "'");
    if (l.value.empty()) fail(l.number, "missing mu value");
    if (!doc.mu.emplace(*v, l.value).second) fail(l.number, "duplicate mu for vertex " + l.key);
  }
  return doc;
}

FatGraph parse_fatgraph(std::string_view text) { return *parse_document(text).graph; }

OrientationState document_orientation(const Document& doc) {
  std::vector<int> signs(doc.graph->num_edges(), 1);
  for (auto [e, s] : doc.orient) signs[e] = s;
  return OrientationState(doc.graph, std::move(signs));
}

template <class S>
DecoratedState<S> document_state(const Document& doc) {
  const FatGraph& g = *doc.graph;
  const auto n = static_cast<unsigned>(g.num_vertices());
  std::vector<Grassmann<S>> lambda;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto it = doc.lambda.find(e);
    lambda.push_back(it == doc.lambda.end() ? Grassmann<S>(n, S(1))
                                            : parse_grassmann<S>(it->second, n));
  }
  std::vector<Grassmann<S>> mu;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto it = doc.mu.find(v);
    mu.push_back(it == doc.mu.end() ? Grassmann<S>::generator(n, v)
                                    : parse_grassmann<S>(it->second, n));
  }
  try {
    return DecoratedState<S>(document_orientation(doc), n, std::move(lambda), std::move(mu));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid decoration: ") + e.what());
  }
}

std::string format_fatgraph(const FatGraph& g) {
  std::ostringstream out;
  out << "fatgraph v1\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& hs = g.vertex(v);
    out << "vertex " << g.vertex_name(v) << ": " << hs[0] << ' ' << hs[1] << ' ' << hs[2] << '\n';
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "edge " << g.edge_label(e) << ": " << g.tail(e) << ' ' << g.head(e) << '\n';
  }
  return out.str();
}

template <class S>
std::string format_document(const DecoratedState<S>& s) {
  const FatGraph& g = s.graph();
  std::ostringstream out;
  out << format_fatgraph(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "orient " << g.edge_label(e) << ": " << (s.orientation().sign(e) > 0 ? '+' : '-')
        << '\n';
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "lambda " << g.edge_label(e) << ": " << to_string(s.lambda(e)) << '\n';
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "mu " << g.vertex_name(v) << ": " << to_string(s.mu(v)) << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template DecoratedState<Rational> document_state<Rational>(const Document&);
template DecoratedState<double> document_state<double>(const Document&);
template std::string format_document(const DecoratedState<Rational>&);
template std::string format_document(const DecoratedState<double>&);

}  // namespace superteich
