#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wordrank/word.hpp"

namespace wordrank {

// Serre graph labeled over the bouquet. Oriented edges are stored in pairs:
// index 2k carries the positive label of geometric edge k, and 2k+1 is its
// inverse. bar(e) = e ^ 1, label(bar(e)) = -label(e).
struct LabeledGraph {
  int num_vertices = 0;
  std::vector<int> origin;  // oriented edge -> starting vertex
  std::vector<int> label;   // oriented edge -> signed generator index

  int oriented_count() const { return static_cast<int>(origin.size()); }
  int geometric_count() const { return static_cast<int>(origin.size()) / 2; }
  static int bar(int e) { return e ^ 1; }
  int terminus(int e) const { return origin[e ^ 1]; }

  // Adds the geometric edge from..to with the given positive label and
  // returns its index.
  int add_edge(int from, int to, int positive_label);

  std::vector<int> degrees() const;
  // No two oriented edges with the same origin carry the same label.
  bool is_immersed() const;
  // Every vertex has degree >= 2.
  bool is_core() const;

  bool operator==(const LabeledGraph& o) const {
    return num_vertices == o.num_vertices && origin == o.origin && label == o.label;
  }
};

// Label-preserving simplicial map commuting with origin and bar.
struct GraphMorphism {
  LabeledGraph source;
  LabeledGraph target;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;  // oriented edge -> oriented edge

  // Throws std::logic_error when the maps do not commute with the graph
  // structure or do not preserve labels.
  void validate() const;
  bool is_isomorphism() const;
};

LabeledGraph bouquet(int rank);

int euler_char(const LabeledGraph& g);

// The cycle graph of a cyclically reduced word, with its immersion to the
// bouquet and the oriented edges listed in reading order.
struct CycleGraph {
  LabeledGraph graph;
  GraphMorphism to_bouquet;
  std::vector<int> forward;  // forward[i] = oriented edge read at step i
};
CycleGraph cycle_graph(const Word& w);

// Disjoint cycles reading the powers w^{nu_i}, covering the cycle graph of w.
struct CycleCover {
  LabeledGraph graph;
  GraphMorphism rho;               // covering onto cycle_graph(w).graph
  std::vector<int> base_vertex;    // vertex -> position in the base cycle
  std::vector<std::vector<int>> forward;  // per component, reading order
  std::vector<int> nu;
  int degree = 0;
};
CycleCover multi_cycle(const Word& w, const std::vector<int>& nu);

struct FoldResult {
  LabeledGraph graph;
  GraphMorphism map;
};

// Stallings folding to an immersed graph; the returned morphism composes all
// fold steps. The result does not depend on fold order.
FoldResult fold(const LabeledGraph& g);

// Merges each block of the partition to a single vertex, then folds.
FoldResult quotient_by_partition(const LabeledGraph& g,
                                 const std::vector<std::vector<int>>& blocks);

// Signed traversal count per geometric edge of b's target. `forward` lists
// the traversal direction of every cycle of the source (as produced by
// cycle_graph / multi_cycle). The representative orientation of a target
// edge is its positive-label side; flipping it negates the entry.
std::vector<long> signed_multiplicities(const GraphMorphism& b,
                                        const std::vector<std::vector<int>>& forward);

// b injective on every fiber of the covering (fibers given by base_vertex).
bool is_efficient(const GraphMorphism& b, const std::vector<int>& fiber);

struct QuotientLimits {
  int max_vertices = 12;
};

struct Quotient {
  LabeledGraph graph;
  GraphMorphism map;
};

// Visits the folded quotient of every partition of V(g), deduplicated by the
// fibers of the induced morphism. Throws resource_error above the cap.
void enumerate_quotients(const LabeledGraph& g, const QuotientLimits& limits,
                         const std::function<void(const Quotient&)>& visit);

// Deterministic isomorphism code for graphs immersed over the bouquet.
std::string canonical_code(const LabeledGraph& g);

}  // namespace wordrank
