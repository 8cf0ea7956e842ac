#include "nestrep/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace nestrep {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Directive {
  std::size_t line;
  std::vector<std::string_view> words;
};

Json complex_to_json(Scalar c) { return Json::array({c.real(), c.imag()}); }

Scalar complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError(0, "complex numbers are [re, im] pairs");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

void check_schema(const Json& j) {
  if (j.contains("schema_version") && j.at("schema_version").get<int>() != kSchemaVersion)
    throw ParseError(0, "unsupported schema_version " + j.at("schema_version").dump());
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed JSON document: ") + e.what());
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  } catch (const CompositionError& e) {
    throw ParseError(0, e.what());
  }
}

Json names(const DirectedGraph& g, const std::vector<VertexIndex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(g.vertex_name(v));
  return out;
}

std::vector<VertexIndex> vertices_from(const DirectedGraph& g, const Json& j) {
  std::vector<VertexIndex> out;
  for (const auto& n : j) out.push_back(g.vertex_at(n.get<std::string>()));
  return out;
}

ComponentClass component_class_from(std::string_view s) {
  for (auto c : {ComponentClass::Trivial, ComponentClass::Cycle, ComponentClass::StronglyTransitive})
    if (s == to_string(c)) return c;
  throw ParseError(0, "unknown component class '" + std::string(s) + "'");
}

LoopMultiplicity loop_multiplicity_from(std::string_view s) {
  for (auto m : {LoopMultiplicity::Zero, LoopMultiplicity::One, LoopMultiplicity::Infinite})
    if (s == to_string(m)) return m;
  throw ParseError(0, "unknown loop multiplicity '" + std::string(s) + "'");
}

NNestCase n_nest_case_from(std::string_view s) {
  for (auto c : {NNestCase::One, NNestCase::Three, NNestCase::None})
    if (s == to_string(c)) return c;
  throw ParseError(0, "unknown case '" + std::string(s) + "'");
}

}  // namespace

DirectedGraph parse_graph(std::string_view text) {
  std::vector<Directive> vertices, edges;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = tokens(line);
    if (words.empty()) continue;
    if (words[0] == "vertex") {
      if (words.size() != 2) throw ParseError(number, "expected 'vertex <name>'");
      vertices.push_back({number, std::move(words)});
    } else if (words[0] == "edge") {
      if (words.size() != 4) throw ParseError(number, "expected 'edge <name> <source> <range>'");
      edges.push_back({number, std::move(words)});
    } else {
      throw ParseError(number, "unknown directive '" + std::string(words[0]) + "'");
    }
  }
  DirectedGraph g;
  for (const auto& d : vertices) {
    try {
      g.add_vertex(std::string(d.words[1]));
    } catch (const GraphError& e) {
      throw ParseError(d.line, e.what());
    }
  }
  for (const auto& d : edges) {
    try {
      g.add_edge(std::string(d.words[1]), d.words[2], d.words[3]);
    } catch (const GraphError& e) {
      throw ParseError(d.line, e.what());
    }
  }
  return g;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open '" + file.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + file.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw IoError("cannot write '" + file.string() + "'");
  out << text;
  if (!out) throw IoError("cannot write '" + file.string() + "'");
}

DirectedGraph read_graph_file(const std::filesystem::path& file) {
  return parse_graph(read_text_file(file));
}

std::string format_graph(const DirectedGraph& g) {
  std::string out;
  for (const auto& v : g.vertex_names()) out += "vertex " + v + "\n";
  for (const auto& e : g.edges())
    out += "edge " + e.name + " " + g.vertex_name(e.source) + " " + g.vertex_name(e.range) + "\n";
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
}

Json graph_to_json(const DirectedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"name", e.name},
                     {"source", g.vertex_name(e.source)},
                     {"range", g.vertex_name(e.range)}});
  return {{"schema_version", kSchemaVersion},
          {"vertices", Json(std::vector<std::string>(g.vertex_names().begin(), g.vertex_names().end()))},
          {"edges", edges}};
}

DirectedGraph graph_from_json(const Json& j) {
  return guarded([&] {
    check_schema(j);
    DirectedGraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges"))
      g.add_edge(e.at("name").get<std::string>(), e.at("source").get<std::string>(),
                 e.at("range").get<std::string>());
    return g;
  });
}

Json element_to_json(const FormalElement& a) {
  const auto& g = a.graph();
  Json terms = Json::array();
  for (const auto& [p, c] : a.terms()) {
    Json t = {{"coeff", complex_to_json(c)}};
    if (p.is_vertex()) {
      t["vertex"] = g.vertex_name(p.source());
    } else {
      Json path = Json::array();
      for (auto e : p.edges()) path.push_back(g.edge(e).name);
      t["path"] = path;
    }
    terms.push_back(std::move(t));
  }
  return {{"schema_version", kSchemaVersion}, {"terms", terms}};
}

FormalElement element_from_json(const DirectedGraph& g, const Json& j) {
  return guarded([&] {
    check_schema(j);
    FormalElement a(g);
    for (const auto& t : j.at("terms")) {
      const Scalar c = complex_from_json(t.at("coeff"));
      if (t.contains("vertex") == t.contains("path"))
        throw ParseError(0, "each term names exactly one of 'vertex' or 'path'");
      if (t.contains("vertex")) {
        a.add(Path::vertex(g.vertex_at(t.at("vertex").get<std::string>())), c);
      } else {
        std::vector<EdgeIndex> edges;
        for (const auto& e : t.at("path")) edges.push_back(g.edge_at(e.get<std::string>()));
        if (edges.empty()) throw ParseError(0, "empty edge path; use 'vertex' for length zero");
        a.add(Path::from_edges(g, std::move(edges)), c);
      }
    }
    return a;
  });
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(complex_to_json(m(i, k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const auto& entries = j.at("entries");
    if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows * cols))
      throw ParseError(0, "matrix entry count does not match its shape");
    Matrix m(rows, cols);
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(entries.at(n++));
    return m;
  });
}

Json representation_to_json(const FiniteRepresentation& rep,
                            const std::optional<NestStructure>& nest) {
  const auto& g = rep.graph();
  Json out = {{"schema_version", kSchemaVersion}, {"dimension", rep.dimension()}};
  if (nest) out["nest"] = nest->blocks;
  Json vertices = Json::object();
  for (VertexIndex x = 0; x < g.vertex_count(); ++x)
    vertices[g.vertex_name(x)] = matrix_to_json(rep.vertex_image(x));
  Json edges = Json::object();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    edges[g.edge(e).name] = matrix_to_json(rep.edge_image(e));
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  return out;
}

FiniteRepresentation representation_from_json(const DirectedGraph& g, const Json& j) {
  return guarded([&] {
    check_schema(j);
    const auto k = j.at("dimension").get<std::size_t>();
    FiniteRepresentation rep(g, k);
    const auto load = [k](const Json& m) {
      Matrix out = matrix_from_json(m);
      if (out.rows() != static_cast<Eigen::Index>(k) || out.cols() != static_cast<Eigen::Index>(k))
        throw ParseError(0, "image does not match the representation dimension");
      return out;
    };
    for (const auto& [name, m] : j.at("vertices").items()) rep.vertex_image(g.vertex_at(name)) = load(m);
    for (const auto& [name, m] : j.at("edges").items()) rep.edge_image(g.edge_at(name)) = load(m);
    return rep;
  });
}

std::optional<NestStructure> nest_from_json(const Json& j) {
  return guarded([&]() -> std::optional<NestStructure> {
    if (!j.contains("nest")) return std::nullopt;
    return NestStructure{j.at("nest").get<std::vector<std::size_t>>()};
  });
}

Json relations_to_json(const RelationReport& r) {
  Json out = {
      {"orthogonal_vertices", {{"residual", r.orthogonal_vertices}, {"ok", r.orthogonal_vertices_ok}}},
      {"orthogonal_edge_ranges",
       {{"residual", r.orthogonal_edge_ranges}, {"ok", r.orthogonal_edge_ranges_ok}}},
      {"partial_isometry", {{"residual", r.partial_isometry}, {"ok", r.partial_isometry_ok}}},
      {"range_bound", {{"residual", r.range_bound}, {"ok", r.range_bound_ok}}},
      {"partially_isometric", r.partially_isometric()},
      {"row_norm", r.row_norm},
      {"row_contractive", r.row_contractive},
  };
  if (r.restriction) out["restriction"] = *r.restriction;
  return out;
}

Json witness_to_json(const SeparationWitness& w, const DirectedGraph& g) {
  Json point = Json::array();
  for (auto l : w.witness_point) point.push_back(complex_to_json(l));
  return {{"schema_version", kSchemaVersion},
          {"family", to_string(w.family)},
          {"path", to_string(g, w.path)},
          {"recovered", complex_to_json(w.recovered)},
          {"witness_point", point},
          {"entry_value", complex_to_json(w.entry_value)},
          {"value", w.value},
          {"nest", w.nest.blocks}};
}

Json report_to_json(const ClassificationReport& r, const DirectedGraph& g) {
  Json components = Json::array();
  for (const auto& c : r.stats.components)
    components.push_back({{"vertices", names(g, c.vertices)},
                          {"class", to_string(c.kind)},
                          {"loop_multiplicity", to_string(c.loops)}});
  Json radical = Json::array();
  for (auto e : r.radical_generators) radical.push_back(g.edge(e).name);
  Json criteria = Json::array();
  for (const auto& c : r.criteria) criteria.push_back({{"field", c.field}, {"criterion", c.criterion}});
  const auto& fn = r.faithful_nest;
  return {
      {"schema_version", kSchemaVersion},
      {"stats",
       {{"vertices", r.stats.vertices},
        {"edges", r.stats.edges},
        {"sinks", names(g, r.stats.sinks)},
        {"sources", names(g, r.stats.sources)},
        {"components", components}}},
      {"semisimple", r.semisimple},
      {"strongly_semisimple", r.strongly_semisimple},
      {"radical_generators", radical},
      {"ut_separating", r.ut_separating},
      {"faithful_irreducible", r.faithful_irreducible},
      {"faithful_nest",
       {{"holds", fn.holds()},
        {"totally_ordered", fn.totally_ordered},
        {"no_cycle_component", fn.no_cycle_component},
        {"trivial_chain", fn.trivial_chain},
        {"trivial_chain_vacuous", fn.trivial_chain_vacuous}}},
      {"n_nest",
       {{"case", to_string(r.n_nest.kind)},
        {"requires_infinite", r.n_nest.requires_infinite},
        {"detail", r.n_nest.detail}}},
      {"criteria", criteria},
  };
}

ClassificationReport report_from_json(const DirectedGraph& g, const Json& j) {
  return guarded([&] {
    check_schema(j);
    ClassificationReport r;
    const auto& s = j.at("stats");
    r.stats.vertices = s.at("vertices").get<std::size_t>();
    r.stats.edges = s.at("edges").get<std::size_t>();
    r.stats.sinks = vertices_from(g, s.at("sinks"));
    r.stats.sources = vertices_from(g, s.at("sources"));
    for (const auto& c : s.at("components"))
      r.stats.components.push_back({vertices_from(g, c.at("vertices")),
                                    component_class_from(c.at("class").get<std::string>()),
                                    loop_multiplicity_from(c.at("loop_multiplicity").get<std::string>())});
    r.semisimple = j.at("semisimple").get<bool>();
    r.strongly_semisimple = j.at("strongly_semisimple").get<bool>();
    for (const auto& e : j.at("radical_generators")) r.radical_generators.push_back(g.edge_at(e.get<std::string>()));
    r.ut_separating = j.at("ut_separating").get<bool>();
    r.faithful_irreducible = j.at("faithful_irreducible").get<bool>();
    const auto& fn = j.at("faithful_nest");
    r.faithful_nest.totally_ordered = fn.at("totally_ordered").get<bool>();
    r.faithful_nest.no_cycle_component = fn.at("no_cycle_component").get<bool>();
    r.faithful_nest.trivial_chain = fn.at("trivial_chain").get<bool>();
    r.faithful_nest.trivial_chain_vacuous = fn.at("trivial_chain_vacuous").get<bool>();
    const auto& nn = j.at("n_nest");
    r.n_nest.kind = n_nest_case_from(nn.at("case").get<std::string>());
    r.n_nest.requires_infinite = nn.at("requires_infinite").get<bool>();
    r.n_nest.detail = nn.at("detail").get<std::string>();
    for (const auto& c : j.at("criteria"))
      r.criteria.push_back({c.at("field").get<std::string>(), c.at("criterion").get<std::string>()});
    return r;
  });
}

}  // namespace nestrep
