#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordrank/graph.hpp"
#include "wordrank/rational.hpp"
#include "wordrank/word.hpp"

namespace wordrank {

struct RankResult {
  bool infinite = false;
  int value = 0;  // rank of the witness subgroup when finite
  std::optional<Quotient> witness;

  std::string value_str() const { return infinite ? "infinity" : std::to_string(value); }
};

// Least rank of a proper algebraic extension of <w>; infinity iff w is
// primitive. Conjugation-invariant (input cyclically reduced internally).
RankResult primitivity_rank(const Word& w, const QuotientLimits& limits = {});

// Least rank of a subgroup H with w in the kernel of H -> (Z/mZ)^rk(H),
// detected through signed edge multiplicities divisible by m (zero when
// m = 0). m = 1 routes to primitivity_rank.
RankResult mod_m_rank(const Word& w, int m, const QuotientLimits& limits = {});

struct SearchLimits {
  int max_degree = 4;
  int max_cover_vertices = 24;
  long max_states = 5'000'000;  // per cover shape
};

// A diagram found by the bounded search: the cover, the quotient target and
// the connecting morphism, with its score.
struct SearchDiagram {
  std::vector<int> nu;
  CycleCover cover;
  Quotient quotient;
  BigRational ratio;
  int degree = 0;
};

struct DiagramSearchResult {
  bool infinite = true;  // stays true when no valid diagram exists in range
  BigRational best_ratio;
  std::optional<SearchDiagram> best_diagram;
  int degree_bound = 0;
  // (degree, ratio) -> number of validated diagrams
  std::map<std::pair<int, BigRational>, long> census;
  std::map<int, double> per_degree_seconds;
  long states_visited = 0;

  std::string value_str() const { return infinite ? "infinity" : best_ratio.str(); }
};

// Brute-force upper bound for the stable mod-m rank: enumerates the covers
// Gamma_{w^nu} for every partition nu of every d <= max_degree and every
// efficient surjective quotient, keeping diagrams whose signed
// multiplicities all lie in mZ. Requires m != 1.
DiagramSearchResult bounded_spm_search(const Word& w, int m, const SearchLimits& limits = {});

// One quotient enumeration shared across several moduli.
std::map<int, DiagramSearchResult> bounded_spm_search_multi(const Word& w,
                                                            const std::vector<int>& ms,
                                                            const SearchLimits& limits = {});

// Same enumeration with validity "algebraic + efficient + not an isomorphism
// on any component" (the stable primitivity rank bound). connected_only
// restricts the cover to a single cycle.
DiagramSearchResult bounded_sp_search(const Word& w, const SearchLimits& limits = {},
                                      bool connected_only = false);

// Descending partitions of d, in deterministic order.
std::vector<std::vector<int>> partitions_of(int d);

}  // namespace wordrank
