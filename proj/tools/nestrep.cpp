// nestrep: command-line front end.
//
// Exit codes: 0 ok, 2 parse error, 3 I/O error, 4 zero element,
// 5 precondition or limit violation.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nestrep/classify.hpp"
#include "nestrep/constructions.hpp"
#include "nestrep/fock.hpp"
#include "nestrep/io.hpp"
#include "nestrep/separation.hpp"

namespace {

using namespace nestrep;

enum Exit { kOk = 0, kParse = 2, kIo = 3, kZero = 4, kPrecondition = 5 };

constexpr std::size_t kMaxClosureDimension = 16;

struct Config {
  bool json = false;
  std::uint64_t seed = 0;
  ToleranceConfig tol;
  std::size_t max_len = 12;
  std::size_t max_basis = 2048;
};

std::string complex_text(Scalar c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g %.17g", c.real(), c.imag());
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

Scalar unit_from_turn(double t) { return std::polar(1.0, 2.0 * std::numbers::pi * t); }

FormalElement read_element(const DirectedGraph& g, const std::string& file) {
  return element_from_json(g, parse_json(read_text_file(file)));
}

LoopChoice parse_loops(const DirectedGraph& g, const std::string& spec) {
  LoopChoice loops(g.vertex_count());
  if (spec.empty()) return loops;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(0, "loop choices look like vertex=edge");
    loops[g.vertex_at(item.substr(0, eq))] = g.edge_at(item.substr(eq + 1));
  }
  return loops;
}

void print_report(const DirectedGraph& g, const ClassificationReport& r) {
  const auto yes = [](bool b) { return b ? "yes" : "no"; };
  const auto vertex_list = [&](const std::vector<VertexIndex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.vertex_name(v));
    return vs.empty() ? std::string("-") : join(out, " ");
  };
  std::vector<std::string> radical;
  for (auto e : r.radical_generators) radical.push_back(g.edge(e).name);
  std::printf("%-22s %zu\n", "vertices", r.stats.vertices);
  std::printf("%-22s %zu\n", "edges", r.stats.edges);
  std::printf("%-22s %s\n", "sinks", vertex_list(r.stats.sinks).c_str());
  std::printf("%-22s %s\n", "sources", vertex_list(r.stats.sources).c_str());
  for (const auto& c : r.stats.components)
    std::printf("%-22s {%s} %s, loops %s\n", "component", vertex_list(c.vertices).c_str(),
                to_string(c.kind), to_string(c.loops));
  std::printf("%-22s %s\n", "semisimple", yes(r.semisimple));
  std::printf("%-22s %s\n", "strongly semisimple", yes(r.strongly_semisimple));
  std::printf("%-22s %s\n", "radical generators", radical.empty() ? "-" : join(radical, " ").c_str());
  std::printf("%-22s %s\n", "ut separating", yes(r.ut_separating));
  std::printf("%-22s %s\n", "faithful irreducible", yes(r.faithful_irreducible));
  const auto& fn = r.faithful_nest;
  std::printf("%-22s %s (ordered %s, no cycle %s, trivial chain %s%s)\n", "faithful nest",
              yes(fn.holds()), yes(fn.totally_ordered), yes(fn.no_cycle_component),
              yes(fn.trivial_chain), fn.trivial_chain_vacuous ? ", vacuous" : "");
  std::printf("%-22s %s%s: %s\n", "N-nest case", to_string(r.n_nest.kind),
              r.n_nest.requires_infinite ? " (requires infinite chain)" : "",
              r.n_nest.detail.c_str());
}

int cmd_classify(const Config& cfg, const std::string& graph_file) {
  const auto g = read_graph_file(graph_file);
  const auto report = classify(g);
  if (cfg.json)
    print_json(report_to_json(report, g));
  else
    print_report(g, report);
  return kOk;
}

int cmd_separate(const Config& cfg, const std::string& graph_file, const std::string& element_file,
                 const std::string& family_name, const std::string& emit) {
  const auto family = parse_family(family_name);
  if (!family) throw ParseError(0, "unknown family '" + family_name + "'");
  const auto g = read_graph_file(graph_file);
  const auto a = read_element(g, element_file);
  const auto w = separate(a, *family);
  if (!emit.empty())
    write_text_file(emit, representation_to_json(w.rep, w.nest).dump(2) + "\n");
  if (cfg.json) {
    auto doc = witness_to_json(w, g);
    doc["agrees"] = std::abs(w.recovered - a.coefficient(w.path)) <= cfg.tol.recovery_tol;
    print_json(doc);
    return kOk;
  }
  std::vector<std::string> point, blocks;
  for (auto l : w.witness_point) point.push_back("(" + complex_text(l) + ")");
  for (auto b : w.nest.blocks) blocks.push_back(std::to_string(b));
  std::printf("%-12s %s\n", "family", to_string(w.family));
  std::printf("%-12s %s\n", "path", to_string(g, w.path).c_str());
  std::printf("%-12s %s\n", "recovered", complex_text(w.recovered).c_str());
  std::printf("%-12s %s\n", "lambda", join(point, " ").c_str());
  std::printf("%-12s %.17g\n", "value", w.value);
  std::printf("%-12s %s\n", "nest", join(blocks, " ").c_str());
  return kOk;
}

struct RepArgs {
  std::string kind;
  std::string cycle;
  std::string path;
  std::vector<double> turns;
  std::size_t depth = 2;
  std::size_t prefix_len = 4;
  std::string loops;
};

int cmd_rep(const Config& cfg, const std::string& graph_file, const RepArgs& args) {
  const auto g = read_graph_file(graph_file);
  std::vector<Scalar> lambda;
  for (auto t : args.turns) lambda.push_back(unit_from_turn(t));
  const auto need = [](const std::string& s, const char* flag) {
    if (s.empty()) throw ParseError(0, std::string("this kind needs ") + flag);
  };

  Json doc = {{"schema_version", kSchemaVersion}, {"kind", args.kind}};
  std::optional<FiniteRepresentation> rep;
  std::optional<NestStructure> nest;
  std::optional<std::vector<std::size_t>> interior;

  if (args.kind == "phi") {
    need(args.cycle, "--cycle");
    const auto u = parse_path(g, args.cycle);
    rep = phi_cycle(g, u, lambda.empty() ? Scalar(1.0) : lambda.at(0));
    nest = NestStructure{{u.length()}};
  } else if (args.kind == "rho") {
    need(args.path, "--path");
    const auto plan = plan_nest(g, parse_path(g, args.path));
    if (lambda.empty()) lambda.assign(plan.parameter_count(), 1.0);
    auto built = build_nest(plan, lambda);
    rep = std::move(built.rep);
    nest = built.nest;
  } else if (args.kind == "psi") {
    need(args.path, "--path");
    const auto plan = plan_upper(g, parse_path(g, args.path), parse_loops(g, args.loops));
    if (lambda.empty())
      for (std::size_t j = 0; j < plan.parameter_count(); ++j)
        lambda.push_back(unit_from_turn(static_cast<double>(j) /
                                        static_cast<double>(plan.parameter_count())));
    rep = build_upper(plan, lambda);
    nest = NestStructure{std::vector<std::size_t>(plan.dimension(), 1)};
  } else if (args.kind == "fock") {
    if (args.depth > cfg.max_len)
      throw LimitError("depth " + std::to_string(args.depth) + " exceeds --max-len");
    auto fock = truncated_left_regular(g, args.depth, cfg.max_basis);
    if (args.depth > 0) interior = fock.basis.indices_up_to(args.depth - 1);
    rep = std::move(fock.rep);
  } else if (args.kind == "nnest") {
    auto trunc = n_nest_truncation(g, args.prefix_len, cfg.seed, parse_loops(g, args.loops));
    doc["word"] = to_string(g, trunc.word);
    rep = std::move(trunc.rep);
    nest = NestStructure{std::vector<std::size_t>(rep->dimension(), 1)};
  } else {
    throw ParseError(0, "unknown representation kind '" + args.kind + "'");
  }
  doc["representation"] = representation_to_json(*rep, nest);
  doc["relations"] = relations_to_json(check_relations(*rep, interior, cfg.tol.norm_tol));
  // The closure works on k^2-dimensional vectors; skip it for large bases.
  if (rep->dimension() <= kMaxClosureDimension)
    doc["algebra_dimension"] = span_closure_dim(rep->generators(), rep->dimension(), cfg.tol.rank_tol);
  print_json(doc);
  return kOk;
}

int cmd_recover(const Config& cfg, const std::string& graph_file, const std::string& element_file,
                const std::string& path_spec, const std::string& family_name) {
  const auto family = parse_family(family_name);
  if (!family) throw ParseError(0, "unknown family '" + family_name + "'");
  const auto g = read_graph_file(graph_file);
  const auto a = read_element(g, element_file);
  const auto w = parse_path(g, path_spec);
  const Scalar c = recover(plan_recovery(g, w, *family, a.degree()), a);
  if (cfg.json) {
    print_json({{"schema_version", kSchemaVersion},
                {"family", to_string(*family)},
                {"path", to_string(g, w)},
                {"coefficient", Json::array({c.real(), c.imag()})},
                {"agrees", std::abs(c - a.coefficient(w)) <= cfg.tol.recovery_tol}});
  } else {
    std::printf("%s\n", complex_text(c).c_str());
  }
  return kOk;
}

int cmd_radical(const Config& cfg, const std::string& graph_file, const std::string& element_file) {
  const auto g = read_graph_file(graph_file);
  std::vector<std::string> gens;
  for (auto e : radical_edge_generators(g)) gens.push_back(g.edge(e).name);
  std::optional<bool> member;
  if (!element_file.empty()) member = is_in_radical(read_element(g, element_file));
  if (cfg.json) {
    Json doc = {{"schema_version", kSchemaVersion}, {"generators", gens}};
    if (member) doc["member"] = *member;
    print_json(doc);
  } else {
    std::printf("%-12s %s\n", "generators", gens.empty() ? "-" : join(gens, " ").c_str());
    if (member) std::printf("%-12s %s\n", "member", *member ? "yes" : "no");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nest representations of directed graph algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Seed for randomised choices");
  app.add_option("--rank-tol", cfg.tol.rank_tol, "Rank threshold for generated-algebra dimensions")->check(CLI::PositiveNumber);
  app.add_option("--norm-tol", cfg.tol.norm_tol, "Residual threshold for relation checks")->check(CLI::PositiveNumber);
  app.add_option("--recovery-tol", cfg.tol.recovery_tol, "Agreement threshold for recovered coefficients")->check(CLI::PositiveNumber);
  app.add_option("--max-len", cfg.max_len, "Path enumeration length limit")->check(CLI::PositiveNumber);
  app.add_option("--max-basis", cfg.max_basis, "Truncated Fock basis size limit")->check(CLI::PositiveNumber);

  std::string graph_file, element_file, family = "nest", emit, path_spec;
  RepArgs rep;

  auto* classify_cmd = app.add_subcommand("classify", "Decide the characterisations for a graph");
  classify_cmd->add_option("graph", graph_file)->required();

  auto* separate_cmd = app.add_subcommand("separate", "Find a representation not killing an element");
  separate_cmd->add_option("graph", graph_file)->required();
  separate_cmd->add_option("element", element_file)->required();
  separate_cmd->add_option("--family", family)->check(CLI::IsMember({"irreducible", "nest", "upper"}));
  separate_cmd->add_option("--emit", emit, "Write the representation JSON here");

  auto* rep_cmd = app.add_subcommand("rep", "Build a representation");
  rep_cmd->add_option("graph", graph_file)->required();
  rep_cmd->add_option("kind", rep.kind)->required()->check(
      CLI::IsMember({"phi", "rho", "psi", "fock", "nnest"}));
  rep_cmd->add_option("--cycle", rep.cycle, "Cycle, edges in traversal order");
  rep_cmd->add_option("--path", rep.path, "Path, edges in traversal order; @x for a vertex");
  rep_cmd->add_option("--lambda-arg", rep.turns, "Parameters as fractions of a turn")->delimiter(',');
  rep_cmd->add_option("--depth", rep.depth, "Fock truncation depth");
  rep_cmd->add_option("--prefix-len", rep.prefix_len, "Length of the truncated N-nest word");
  rep_cmd->add_option("--loops", rep.loops, "Designated loops, vertex=edge,...");

  auto* recover_cmd = app.add_subcommand("recover", "Recover one Fourier coefficient");
  recover_cmd->add_option("graph", graph_file)->required();
  recover_cmd->add_option("element", element_file)->required();
  recover_cmd->add_option("path", path_spec)->required();
  recover_cmd->add_option("--family", family)->check(CLI::IsMember({"irreducible", "nest", "upper"}));

  auto* radical_cmd = app.add_subcommand("radical", "Radical generators and membership");
  radical_cmd->add_option("graph", graph_file)->required();
  radical_cmd->add_option("--element", element_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, graph_file);
    if (*separate_cmd) return cmd_separate(cfg, graph_file, element_file, family, emit);
    if (*rep_cmd) return cmd_rep(cfg, graph_file, rep);
    if (*recover_cmd) return cmd_recover(cfg, graph_file, element_file, path_spec, family);
    if (*radical_cmd) return cmd_radical(cfg, graph_file, element_file);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GraphError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CompositionError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const ZeroElementError& e) {
    std::cerr << "zero element: " << e.what() << '\n';
    return kZero;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}
