#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrank/graph.hpp"
#include "wordrank/linprog.hpp"
#include "wordrank/rational.hpp"
#include "wordrank/whitehead.hpp"
#include "wordrank/word.hpp"

namespace wordrank {

// A piece: a subgraph of the decorated Whitehead graph of w, recorded as the
// set of its decorations. At every touched wh-vertex the difference between
// incoming and outgoing edge counts is divisible by m (equal, when m = 0),
// and at least two wh-vertices are touched.
struct Piece {
  uint32_t decorations = 0;  // bitmask over word positions
  int vertex_count = 0;      // touched wh-vertices
  // (signed letter, bitmask of incident decorations), sorted by letter.
  std::vector<std::pair<int, uint32_t>> incidence;

  bool contains(int position) const { return (decorations >> position) & 1u; }
};

// All pieces of w for the given modulus, in increasing bitmask order.
// connected_only keeps only pieces whose underlying subgraph is connected.
std::vector<Piece> enumerate_pieces(const Word& w, int m, bool connected_only = true,
                                    int subset_cap = 22);

// The linear program of the gluing construction: one variable per piece, one
// balance equation per realized (letter, decoration-set) key, one degree
// equation for the anchor decoration. A piece vertex at wh-vertex `a` with
// decoration set S glues to a wh-vertex `a^-1` with decoration set a.S,
// where a.x steps along the outgoing a-edge of the base cycle; the balance
// rows equate the two sides for every realized key.
LinearProgram assemble_lp(const Word& w, int m, const std::vector<Piece>& pieces,
                          int anchor = 0);

// An explicit diagram scored by -chi(gamma)/degree, produced from an optimal
// LP solution by clearing denominators and gluing piece copies.
struct WitnessDiagram {
  LabeledGraph gamma;
  GraphMorphism b;  // cover -> gamma
  std::vector<std::vector<int>> forward;
  std::vector<int> base_vertex;
  std::vector<int> nu;
  int degree = 0;
  BigRational ratio;
};

WitnessDiagram extract_witness(const Word& w, int m, const std::vector<Piece>& pieces,
                               const LpSolution& solution, int anchor = 0);

struct SpmOptions {
  bool connected_only = true;
  int anchor = 0;
  bool witness = false;
  int subset_cap = 22;
};

struct SpmResult {
  bool infinite = false;
  BigRational value;  // meaningful when not infinite; -1 for the empty word
  int piece_count = 0;
  int lp_vars = 0;
  int lp_rows = 0;
  std::string shortcut;  // names the vanishing shortcut when one fired
  std::optional<LpSolution> lp_solution;
  std::optional<WitnessDiagram> witness;
  std::optional<LinearProgram> lp;  // absent when a shortcut fired

  std::string value_str() const { return infinite ? "infinity" : value.str(); }
};

// Stable mod-m primitivity rank for m != 1 (m = 1 is served by the bounded
// search oracle instead). Conjugation-invariant: the input is cyclically
// reduced internally.
SpmResult stable_mod_m_rank(const Word& w, int m, const SpmOptions& options = {});

}  // namespace wordrank
