#pragma once

#include <vector>

#include "wordrank/graph.hpp"
#include "wordrank/word.hpp"

namespace wordrank {

// One edge per preimage point of the morphism's target vertex. tail/head
// index into wh_vertices: tail is the image of the reversed incoming source
// edge, head the image of the outgoing one, following traversal direction.
struct WhiteheadEdge {
  int tail = -1;
  int head = -1;
  int decoration = -1;  // vertex of the base cycle graph (or source vertex id)
};

struct WhiteheadGraph {
  int at_vertex = -1;
  std::vector<int> wh_vertices;  // oriented edges of the target at at_vertex
  std::vector<WhiteheadEdge> edges;

  int wh_index_of(int oriented_edge) const;
};

// Whitehead graphs of b at every target vertex. `forward` gives the traversal
// direction of each cycle of the source; `decoration` assigns each source
// vertex its decoration (pass the covering's base_vertex map, or leave empty
// for source vertex ids).
std::vector<WhiteheadGraph> whitehead_graphs(const GraphMorphism& b,
                                             const std::vector<std::vector<int>>& forward,
                                             const std::vector<int>& decoration = {});

struct CutAnalysis {
  enum Kind { kConnected, kDisconnected, kCutVertex } kind = kConnected;
  std::vector<int> side;  // kDisconnected: wh-vertex indices of one part
  int cut = -1;           // kCutVertex: wh-vertex index
};

// Reports disconnection before cut vertices when both hold.
CutAnalysis find_cut_or_disconnect(const WhiteheadGraph& wh);

// Splits the target vertex along a cut vertex of its Whitehead graph. The
// split preserves the Euler characteristic and adds exactly one vertex;
// fold_back is the homotopy-equivalent fold recovering the original target.
struct UnfoldResult {
  GraphMorphism unfolded;
  GraphMorphism fold_back;
};
UnfoldResult unfold(const GraphMorphism& b, const std::vector<std::vector<int>>& forward,
                    int vertex, int cut_wh_index);

// Decision procedure for algebraicity of b : P -> target, P a disjoint union
// of cycles mapping to a core graph: repeatedly unfold at cut vertices until
// either some Whitehead graph disconnects (not algebraic) or none has a cut
// vertex (algebraic).
bool is_algebraic(const GraphMorphism& b, const std::vector<std::vector<int>>& forward);

// The decorated Whitehead graph of the cycle-to-bouquet immersion of w, kept
// as flat arrays: one edge per position i of the cyclic word, directed from
// the signed letter -w[i-1] to the signed letter w[i], decorated by i.
struct DecoratedWhitehead {
  int length = 0;
  std::vector<int> wh_letters;  // sorted signed letters present
  std::vector<int> tail, head;  // per position, signed letters
};
DecoratedWhitehead decorated_whitehead(const Word& w);

}  // namespace wordrank
