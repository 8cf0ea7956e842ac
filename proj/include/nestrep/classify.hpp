#pragma once

// Decision procedures for finite graphs: semisimplicity, separating families,
// and the existence of faithful irreducible and nest representations.

#include <string>
#include <vector>

#include "nestrep/graph_analysis.hpp"

namespace nestrep {

struct ComponentSummary {
  std::vector<VertexIndex> vertices;
  ComponentClass kind;
  LoopMultiplicity loops;

  bool operator==(const ComponentSummary&) const = default;
};

struct GraphStats {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::vector<VertexIndex> sinks;
  std::vector<VertexIndex> sources;
  std::vector<ComponentSummary> components;  // in condensation order

  bool operator==(const GraphStats&) const = default;
};

/// The three conditions for a faithful nest representation.
struct FaithfulNestConditions {
  bool totally_ordered = false;  // reachability on components is a total order
  bool no_cycle_component = false;
  bool trivial_chain = false;    // trivial components form one simple path, as an interval
  bool trivial_chain_vacuous = false;  // there are no trivial components

  bool holds() const noexcept { return totally_ordered && no_cycle_component && trivial_chain; }

  bool operator==(const FaithfulNestConditions&) const = default;
};

enum class NNestCase { One, Three, None };
const char* to_string(NNestCase c);

struct NNestVerdict {
  NNestCase kind = NNestCase::None;
  /// The graph is a finite chain, the truncation of a pattern that only an
  /// infinite chain realises.
  bool requires_infinite = false;
  std::string detail;

  bool operator==(const NNestVerdict&) const = default;
};

/// One line per verdict naming the criterion that decided it.
struct CriterionNote {
  std::string field;
  std::string criterion;

  bool operator==(const CriterionNote&) const = default;
};

struct ClassificationReport {
  GraphStats stats;
  bool semisimple = false;           // every edge lies inside a strongly connected component
  bool strongly_semisimple = false;  // no edge generates the radical
  std::vector<EdgeIndex> radical_generators;
  bool ut_separating = false;
  bool faithful_irreducible = false;
  FaithfulNestConditions faithful_nest;
  NNestVerdict n_nest;
  std::vector<CriterionNote> criteria;

  bool operator==(const ClassificationReport&) const = default;
};

FaithfulNestConditions check_faithful_nest_conditions(const DirectedGraph& g);
NNestVerdict check_n_nest_case(const DirectedGraph& g);

/// Every vertex lying on a cycle carries a loop edge.
bool ut_separating_condition(const DirectedGraph& g);

/// Throws PreconditionError on the empty graph.
ClassificationReport classify(const DirectedGraph& g);

}  // namespace nestrep
