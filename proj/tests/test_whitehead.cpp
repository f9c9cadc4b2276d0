#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "wordrank/graph.hpp"
#include "wordrank/whitehead.hpp"

using namespace wordrank;

namespace {

Word random_cyclic_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  for (;;) {
    Word w;
    w.rank = rank;
    while (w.length() < len) {
      int x = gen(rng) * (coin(rng) ? 1 : -1);
      if (!w.letters.empty() && w.letters.back() == -x) continue;
      w.letters.push_back(x);
    }
    if (is_cyclically_reduced(w)) return w;
  }
}

WhiteheadGraph tiny_graph(int nverts, std::vector<std::pair<int, int>> edges) {
  WhiteheadGraph wh;
  wh.at_vertex = 0;
  for (int i = 0; i < nverts; ++i) wh.wh_vertices.push_back(i);
  int dec = 0;
  for (auto [a, b] : edges) wh.edges.push_back({a, b, dec++});
  return wh;
}

}  // namespace

TEST_CASE("whitehead graph of the six-letter power word") {
  CycleGraph cg = cycle_graph(parse_word("aaabAB"));
  auto whs = whitehead_graphs(cg.to_bouquet, {cg.forward});
  REQUIRE(whs.size() == 1);
  CHECK(whs[0].wh_vertices.size() == 4);
  CHECK(whs[0].edges.size() == 6);
  // Decorations are exactly the six cycle vertices, each once.
  std::set<int> decs;
  for (const auto& e : whs[0].edges) decs.insert(e.decoration);
  CHECK(decs.size() == 6);
}

TEST_CASE("whitehead graph of an identity cycle map is a single edge per vertex") {
  CycleCover id = multi_cycle(parse_word("abaB"), {1});
  auto whs = whitehead_graphs(id.rho, id.forward);
  for (const auto& wh : whs) {
    CHECK(wh.edges.size() == 1);
    CHECK(wh.edges[0].tail != wh.edges[0].head);
  }
}

TEST_CASE("the nine-letter word has a complete bipartite whitehead graph") {
  Word w = parse_word("aBcbbaCac");
  DecoratedWhitehead dw = decorated_whitehead(w);
  CHECK(dw.wh_letters.size() == 6);
  CHECK(dw.length == 9);
  // No repeated edge pair.
  std::set<std::pair<int, int>> pairs;
  for (int i = 0; i < dw.length; ++i)
    pairs.insert({std::min(dw.tail[i], dw.head[i]), std::max(dw.tail[i], dw.head[i])});
  CHECK(pairs.size() == 9);
  // Two-colorable: greedy bipartition must close without conflicts.
  std::map<int, int> color;
  std::vector<int> stack{dw.wh_letters[0]};
  color[dw.wh_letters[0]] = 0;
  bool bipartite = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int i = 0; i < dw.length; ++i) {
      if (dw.tail[i] != u && dw.head[i] != u) continue;
      int v = dw.tail[i] == u ? dw.head[i] : dw.tail[i];
      if (!color.count(v)) {
        color[v] = 1 - color[u];
        stack.push_back(v);
      } else if (color[v] == color[u]) {
        bipartite = false;
      }
    }
  }
  CHECK(bipartite);
}

TEST_CASE("decorated whitehead agrees with the general construction") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_cyclic_word(rng, 2, 2 + trial % 7);
    DecoratedWhitehead dw = decorated_whitehead(w);
    CycleGraph cg = cycle_graph(w);
    auto whs = whitehead_graphs(cg.to_bouquet, {cg.forward});
    REQUIRE(whs.size() == 1);
    REQUIRE(static_cast<int>(whs[0].edges.size()) == dw.length);
    for (const auto& e : whs[0].edges) {
      int tail_letter = cg.to_bouquet.target.label[whs[0].wh_vertices[e.tail]];
      int head_letter = cg.to_bouquet.target.label[whs[0].wh_vertices[e.head]];
      CHECK(tail_letter == dw.tail[e.decoration]);
      CHECK(head_letter == dw.head[e.decoration]);
    }
  }
}

TEST_CASE("edge counts across whitehead graphs equal the cover size") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_cyclic_word(rng, 2, 2 + trial % 5);
    std::vector<int> nu{1 + static_cast<int>(rng() % 2)};
    if (rng() % 2) nu.push_back(1);
    std::sort(nu.rbegin(), nu.rend());
    CycleCover cover = multi_cycle(w, nu);
    auto whs = whitehead_graphs(cover.rho, cover.forward);
    size_t total = 0;
    for (const auto& wh : whs) total += wh.edges.size();
    CHECK(total == static_cast<size_t>(cover.graph.geometric_count()));
  }
}

TEST_CASE("cut analysis distinguishes the three shapes") {
  // 4-cycle: connected, no cut vertex.
  auto cyc = tiny_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(find_cut_or_disconnect(cyc).kind == CutAnalysis::kConnected);

  // Two disjoint edges: disconnected, witness side has no crossing edges.
  auto two = tiny_graph(4, {{0, 1}, {2, 3}});
  CutAnalysis a = find_cut_or_disconnect(two);
  REQUIRE(a.kind == CutAnalysis::kDisconnected);
  std::set<int> side(a.side.begin(), a.side.end());
  for (const auto& e : two.edges)
    CHECK(side.count(e.tail) == side.count(e.head));

  // Path on three vertices: the middle is a cut vertex.
  auto path = tiny_graph(3, {{0, 1}, {1, 2}});
  CutAnalysis b = find_cut_or_disconnect(path);
  REQUIRE(b.kind == CutAnalysis::kCutVertex);
  CHECK(b.cut == 1);

  // Disconnection is reported even when a cut vertex also exists.
  auto both = tiny_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(find_cut_or_disconnect(both).kind == CutAnalysis::kDisconnected);
}

TEST_CASE("unfolding splits a vertex and preserves chi") {
  // Collapsing the three-letter cycle to the bouquet leaves a path-shaped
  // Whitehead graph with a cut vertex.
  CycleGraph cg = cycle_graph(parse_word("aab"));
  FoldResult q = quotient_by_partition(cg.graph, {{0, 1, 2}});
  GraphMorphism b = q.map;
  std::vector<std::vector<int>> forward{cg.forward};
  auto whs = whitehead_graphs(b, forward);
  int vertex = -1, cut = -1;
  for (const auto& wh : whs) {
    CutAnalysis a = find_cut_or_disconnect(wh);
    if (a.kind == CutAnalysis::kCutVertex) {
      vertex = wh.at_vertex;
      cut = a.cut;
      break;
    }
  }
  REQUIRE(vertex >= 0);
  UnfoldResult u = unfold(b, forward, vertex, cut);
  CHECK(u.unfolded.target.num_vertices == b.target.num_vertices + 1);
  CHECK(euler_char(u.unfolded.target) == euler_char(b.target));
  u.unfolded.validate();
  u.fold_back.validate();

  // Refolding the split recovers the original target.
  FoldResult back = fold(u.unfolded.target);
  CHECK(canonical_code(back.graph) == canonical_code(b.target));

  // Asking to unfold at a non-cut vertex is an error.
  CycleCover id = multi_cycle(parse_word("abAB"), {1});
  CHECK_THROWS_AS(unfold(id.rho, id.forward, 0, 0), std::invalid_argument);
}

TEST_CASE("unfold round trip on random quotients") {
  std::mt19937 rng(17);
  int unfolds_seen = 0;
  for (int trial = 0; trial < 120 && unfolds_seen < 25; ++trial) {
    Word w = random_cyclic_word(rng, 2, 3 + trial % 5);
    CycleGraph cg = cycle_graph(w);
    int n = cg.graph.num_vertices;
    std::vector<std::vector<int>> blocks(1 + rng() % 3);
    for (int v = 0; v < n; ++v) blocks[rng() % blocks.size()].push_back(v);
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& bl) { return bl.empty(); }),
                 blocks.end());
    FoldResult q = quotient_by_partition(cg.graph, blocks);
    if (!q.graph.is_core()) continue;
    std::vector<std::vector<int>> forward{cg.forward};
    auto whs = whitehead_graphs(q.map, forward);
    for (const auto& wh : whs) {
      CutAnalysis a = find_cut_or_disconnect(wh);
      if (a.kind != CutAnalysis::kCutVertex) continue;
      UnfoldResult u = unfold(q.map, forward, wh.at_vertex, a.cut);
      CHECK(euler_char(u.unfolded.target) == euler_char(q.graph));
      FoldResult back = fold(u.unfolded.target);
      CHECK(canonical_code(back.graph) == canonical_code(q.graph));
      ++unfolds_seen;
      break;
    }
  }
  CHECK(unfolds_seen >= 10);
}

TEST_CASE("algebraicity decision on the basic examples") {
  // An isomorphism of cycles is algebraic.
  CycleCover id = multi_cycle(parse_word("abAB"), {1});
  CHECK(is_algebraic(id.rho, id.forward));

  // The commutator collapses to the bouquet algebraically; a primitive word
  // does not.
  CycleGraph comm = cycle_graph(parse_word("abAB"));
  CHECK(is_algebraic(comm.to_bouquet, {comm.forward}));
  CycleGraph prim = cycle_graph(parse_word("ab"));
  CHECK_FALSE(is_algebraic(prim.to_bouquet, {prim.forward}));

  // This collapse needs an unfold whose split edge is a loop before the
  // disconnection shows; the word is primitive, so the answer is negative.
  CycleGraph aab = cycle_graph(parse_word("aab"));
  CHECK_FALSE(is_algebraic(aab.to_bouquet, {aab.forward}));
}

TEST_CASE("a singly covered edge on a non-isomorphic core target is not algebraic") {
  CycleGraph cg = cycle_graph(parse_word("abAB"));
  FoldResult q = quotient_by_partition(cg.graph, {{0, 2}, {1}, {3}});
  // Every edge of this rank-2 quotient is covered exactly once.
  CHECK_FALSE(is_algebraic(q.map, {cg.forward}));
}

TEST_CASE("algebraicity is invariant under relabeling and orientation reversal") {
  std::mt19937 rng(23);
  auto relabel = [](const Word& w) {
    Word out = w;
    for (int& x : out.letters) {
      int g = std::abs(x) == 1 ? 2 : 1;  // swap generators
      x = x > 0 ? g : -g;
    }
    return out;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_cyclic_word(rng, 2, 3 + trial % 4);
    CycleGraph cg = cycle_graph(w);
    bool base = is_algebraic(cg.to_bouquet, {cg.forward});
    CycleGraph swapped = cycle_graph(relabel(w));
    CHECK(is_algebraic(swapped.to_bouquet, {swapped.forward}) == base);
    CycleGraph reversed = cycle_graph(cyclic_reduce(inverse(w)).core);
    CHECK(is_algebraic(reversed.to_bouquet, {reversed.forward}) == base);
  }
}
