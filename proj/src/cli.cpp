#include "superteich/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "superteich/checks.hpp"
#include "superteich/document.hpp"
#include "superteich/errors.hpp"
#include "superteich/spin.hpp"
#include "superteich/super_teich.hpp"

namespace superteich {

namespace {

std::string format_double(double x) { return ScalarTraits<double>::format(x); }

std::string join_cycle(const BoundaryCycle& cycle) {
  std::string s;
  for (HalfEdge h : cycle) {
    if (!s.empty()) s += ' ';
    s += std::to_string(h);
  }
  return s;
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

void print_info(const Document& doc, std::ostream& out) {
  const FatGraph& g = *doc.graph;
  const Topology t = topology(g);
  out << "g=" << t.genus << " s=" << t.punctures << " E=" << t.edges << " V=" << t.vertices
      << " even=" << t.even_dimension() << " odd=" << t.odd_dimension() << '\n';
  const auto cycles = boundary_cycles(g);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    out << "cycle " << i << ": " << join_cycle(cycles[i]) << '\n';
  }
}

void print_spin_enumerate(const Document& doc, unsigned threads, std::ostream& out) {
  const auto classes = enumerate_spin_classes(doc.graph);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "class " << i << ": " << classes[i].sign_string();
    for (auto type : classify_punctures(classes[i])) out << ' ' << to_string(type);
    out << '\n';
  }
  out << "count=" << classes.size() << " rank_formula=" << spin_class_count_by_rank(*doc.graph);
  if (doc.graph->num_edges() <= 30) {
    out << " brute_force=" << spin_class_count_brute_force(*doc.graph, threads);
  }
  out << '\n';
}

void print_spin_classify(const Document& doc, std::ostream& out) {
  const OrientationState o = document_orientation(doc);
  out << "orient: " << o.sign_string() << '\n';
  out << "canonical: " << canonical_representative(o).sign_string() << '\n';
  const auto cycles = boundary_cycles(o.graph());
  const auto types = classify_punctures(o);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    out << "cycle " << i << ": " << to_string(types[i]) << " k=" << opposing_traversals(o, cycles[i])
        << '\n';
  }
}

std::string describe(const FlipRecord& r, const FatGraph& before) {
  std::ostringstream s;
  auto edge = [&](EdgeId e) { return before.edge_label(e); };
  auto vertex = [&](VertexId v) { return before.vertex_name(v); };
  s << "flip edge=" << edge(r.flipped_edge) << " a=" << edge(r.a) << " b=" << edge(r.b)
    << " c=" << edge(r.c) << " d=" << edge(r.d) << " ab_vertex=" << vertex(r.ab_vertex)
    << " cd_vertex=" << vertex(r.cd_vertex) << " ad_vertex=" << vertex(r.ad_vertex)
    << " bc_vertex=" << vertex(r.bc_vertex) << " reflections=";
  if (r.reflections_applied.empty()) s << '-';
  for (std::size_t i = 0; i < r.reflections_applied.size(); ++i) {
    s << (i ? "," : "") << vertex(r.reflections_applied[i]);
  }
  return s.str();
}

std::vector<EdgeId> resolve_edges(const FatGraph& g, const std::vector<int>& labels) {
  std::vector<EdgeId> edges;
  for (int label : labels) {
    auto e = g.find_edge(label);
    if (!e) throw PreconditionError("unknown edge " + std::to_string(label));
    edges.push_back(*e);
  }
  return edges;
}

template <class S>
void run_flips(const Document& doc, const std::vector<int>& labels, std::ostream& out) {
  DecoratedState<S> state = document_state<S>(doc);
  for (EdgeId e : resolve_edges(state.graph(), labels)) {
    auto [next, record] = superflip(state, e);
    out << "# " << describe(record, state.graph()) << '\n';
    state = std::move(next);
  }
  out << format_document(state);
}

void print_shear(const Document& doc, std::ostream& out) {
  const DecoratedState<double> state = document_state<double>(doc);
  const auto z = shear_coordinates(state);
  for (EdgeId e = 0; e < state.graph().num_edges(); ++e) {
    out << "z " << state.graph().edge_label(e) << ": " << to_string(z[e]) << '\n';
  }
  const auto residuals = check_puncture_relation(state);
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    out << "puncture " << i << ": body=" << format_double(residuals[i].body)
        << " soul=" << to_string(residuals[i].soul) << '\n';
  }
}

std::optional<double> tolerance_from_environment() {
  const char* value = std::getenv("SUPERTEICH_TOL");
  if (!value || !*value) return std::nullopt;
  try {
    return ScalarTraits<double>::parse(value);
  } catch (const ParseError&) {
    throw ParseError(std::string("SUPERTEICH_TOL is not a number: ") + value);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decorated super-Teichmueller coordinates on trivalent fatgraphs", "superteich"};
  app.require_subcommand(1);

  std::string path;
  std::string mode_name = "float";
  unsigned threads = 0;

  auto* info = app.add_subcommand("info", "topology, coordinate counts and boundary cycles");
  info->add_option("file", path, "fatgraph file")->required();

  auto* spin = app.add_subcommand("spin", "spin structures");
  spin->require_subcommand(1);
  auto* enumerate = spin->add_subcommand("enumerate", "one canonical orientation per spin class");
  enumerate->add_option("file", path, "fatgraph file")->required();
  enumerate->add_option("--threads", threads, "workers for the brute-force count (0 = all cores)");
  auto* classify = spin->add_subcommand("classify", "R/NS type of each puncture");
  classify->add_option("file", path, "fatgraph file")->required();

  std::vector<int> flip_edges;
  auto* flip = app.add_subcommand("flip", "apply super Ptolemy flips and print the result");
  flip->add_option("file", path, "fatgraph file")->required();
  flip->add_option("--edges", flip_edges, "edge ids to flip, in order")->delimiter(',')->required();
  flip->add_option("--mode", mode_name, "scalar mode")->check(CLI::IsMember({"rational", "float"}));

  auto* shear = app.add_subcommand("shear", "shear coordinates and puncture residuals");
  shear->add_option("file", path, "fatgraph file")->required();

  std::string suite;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int cases = 0;
  auto* check = app.add_subcommand("check", "run a property suite");
  check->add_option("suite", suite, "involution | pentagon | ptolemy | spincount")
      ->required()
      ->check(CLI::IsMember({"involution", "pentagon", "ptolemy", "spincount"}));
  check->add_option("file", path, "fatgraph file")->required();
  check->add_option("--seed", seed, "random seed");
  check->add_option("--mode", mode_name, "scalar mode")->check(CLI::IsMember({"rational", "float"}));
  check->add_option("--tol", tol, "tolerance (float mode)");
  check->add_option("--cases", cases, "number of random cases (0 = suite default)");
  check->add_option("--threads", threads, "worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }

  const ScalarMode mode = mode_name == "rational" ? ScalarMode::Rational : ScalarMode::Float;
  try {
    if (info->parsed()) {
      print_info(load(path), out);
    } else if (enumerate->parsed()) {
      print_spin_enumerate(load(path), threads, out);
    } else if (classify->parsed()) {
      print_spin_classify(load(path), out);
    } else if (flip->parsed()) {
      const Document doc = load(path);
      if (mode == ScalarMode::Rational) {
        run_flips<Rational>(doc, flip_edges, out);
      } else {
        run_flips<double>(doc, flip_edges, out);
      }
    } else if (shear->parsed()) {
      print_shear(load(path), out);
    } else if (check->parsed()) {
      const Document doc = load(path);
      CheckOptions options;
      options.seed = seed;
      options.mode = mode;
      options.cases = cases;
      options.threads = threads;
      const double default_tol = suite == "ptolemy" ? 1e-12 : 1e-9;
      options.tol = tol ? *tol : tolerance_from_environment().value_or(default_tol);

      CheckReport report;
      if (suite == "ptolemy") {
        report = check_ptolemy(doc.graph, options);
      } else if (suite == "involution") {
        report = check_involution(doc.graph, options);
      } else if (suite == "pentagon") {
        report = check_pentagon(doc.graph, options);
      } else {
        report = check_spincount(doc.graph, options);
      }
      out << "check=" << report.name << " mode=" << mode_name << " seed=" << seed
          << " tol=" << format_double(options.tol) << " cases=" << report.cases
          << " max_error=" << format_double(report.max_error)
          << " result=" << (report.passed ? "pass" : "fail") << '\n';
      for (const auto& line : report.details) out << "detail: " << line << '\n';
      return report.passed ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const AlgebraError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace superteich
