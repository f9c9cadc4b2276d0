#include <doctest.h>

#include <random>
#include <stdexcept>

#include "wordrank/errors.hpp"
#include "wordrank/ranks.hpp"
#include "wordrank/spm.hpp"
#include "wordrank/whitehead.hpp"

using namespace wordrank;

TEST_CASE("primitivity rank of the basic words") {
  CHECK(primitivity_rank(parse_word("a")).infinite);
  CHECK(primitivity_rank(parse_word("ab")).infinite);
  for (int k = 2; k <= 5; ++k)
    CHECK(primitivity_rank(parse_word(std::string(k, 'a'))).value == 1);
  CHECK(primitivity_rank(parse_word("abAB")).value == 2);
  CHECK(primitivity_rank(parse_word("aBcbbaCac")).value == 3);
  // conjugation invariance through cyclic reduction
  CHECK(primitivity_rank(parse_word("babABB")).value == 2);
  CHECK(primitivity_rank(Word{}).value == 0);
}

TEST_CASE("primitivity witnesses validate") {
  RankResult r = primitivity_rank(parse_word("abAB"));
  REQUIRE(r.witness.has_value());
  CHECK(1 - euler_char(r.witness->graph) == r.value);
  CHECK_FALSE(r.witness->map.is_isomorphism());
  CycleGraph cg = cycle_graph(parse_word("abAB"));
  CHECK(is_algebraic(r.witness->map, {cg.forward}));
}

TEST_CASE("mod-m rank detects divisibility witnesses") {
  CHECK(mod_m_rank(parse_word("aa"), 2).value == 1);
  CHECK(mod_m_rank(parse_word("aa"), 3).infinite);
  CHECK(mod_m_rank(parse_word("abAB"), 0).value == 2);
  CHECK(mod_m_rank(parse_word("aaa"), 3).value == 1);
  CHECK(mod_m_rank(parse_word("aaa"), 2).infinite);
  // m = 1 routes to the primitivity rank.
  CHECK(mod_m_rank(parse_word("abAB"), 1).value == 2);
  CHECK(mod_m_rank(parse_word("a"), 1).infinite);
}

TEST_CASE("mod-m witnesses carry divisible multiplicities") {
  RankResult r = mod_m_rank(parse_word("aa"), 2);
  REQUIRE(r.witness.has_value());
  CycleGraph cg = cycle_graph(parse_word("aa"));
  for (long n : signed_multiplicities(r.witness->map, {cg.forward})) CHECK(n % 2 == 0);
  CHECK(1 - euler_char(r.witness->graph) == 1);
}

TEST_CASE("bounded spm search on the worked examples") {
  SearchLimits lim;
  lim.max_degree = 2;
  DiagramSearchResult power = bounded_spm_search(parse_word("aaa"), 2, lim);
  REQUIRE_FALSE(power.infinite);
  CHECK(power.best_ratio == BigRational(0));
  // Exactly the two rotation gluings of the two triangles at degree 2.
  CHECK(power.census.at({2, BigRational(0)}) == 2);

  lim.max_degree = 1;
  DiagramSearchResult comm = bounded_spm_search(parse_word("abAB"), 2, lim);
  REQUIRE_FALSE(comm.infinite);
  CHECK(comm.best_ratio == BigRational(1));

  lim.max_degree = 3;
  CHECK(bounded_spm_search(parse_word("a"), 2, lim).infinite);
}

TEST_CASE("bounded sp search on the worked examples") {
  SearchLimits lim;
  lim.max_degree = 1;
  DiagramSearchResult comm = bounded_sp_search(parse_word("abAB"), lim);
  REQUIRE_FALSE(comm.infinite);
  CHECK(comm.best_ratio == BigRational(1));

  lim.max_degree = 2;
  DiagramSearchResult power = bounded_sp_search(parse_word("aa"), lim);
  REQUIRE_FALSE(power.infinite);
  CHECK(power.best_ratio == BigRational(0));

  CHECK(bounded_sp_search(parse_word("a"), lim).infinite);

  // connected covers only: the degree-2 gluing of two separate cycles
  // disappears, so a proper power climbs to ratio >= 0 via single cycles.
  DiagramSearchResult conn = bounded_sp_search(parse_word("aa"), lim, true);
  if (!conn.infinite) CHECK(conn.best_ratio >= BigRational(0));
}

TEST_CASE("sp search stays at or above one on non-powers") {
  for (const char* text : {"ab", "abAB", "aab", "abb", "aabb", "abaB"}) {
    Word w = parse_word(text);
    if (is_proper_power(w)) continue;
    SearchLimits lim;
    lim.max_degree = 2;
    DiagramSearchResult r = bounded_sp_search(w, lim);
    if (!r.infinite) CHECK(r.best_ratio >= BigRational(1));
  }
}

TEST_CASE("search results are internally consistent") {
  SearchLimits lim;
  lim.max_degree = 3;
  DiagramSearchResult r = bounded_spm_search(parse_word("aaa"), 3, lim);
  REQUIRE_FALSE(r.infinite);
  REQUIRE(r.best_diagram.has_value());
  const SearchDiagram& d = *r.best_diagram;
  CHECK(d.ratio == r.best_ratio);
  CHECK(BigRational(-euler_char(d.quotient.graph), d.degree) == d.ratio);
  CHECK(d.quotient.graph.is_immersed());
  CHECK(d.quotient.graph.is_core());
  CHECK(is_efficient(d.quotient.map, d.cover.base_vertex));
  for (long n : signed_multiplicities(d.quotient.map, d.cover.forward)) CHECK(n % 3 == 0);
  // Census counts every degree at which the optimum is attained.
  long total = 0;
  for (const auto& [key, count] : r.census) {
    CHECK(count > 0);
    total += count;
  }
  CHECK(total > 0);
}

TEST_CASE("multi-modulus search agrees with single runs") {
  Word w = parse_word("aab");
  SearchLimits lim;
  lim.max_degree = 3;
  auto multi = bounded_spm_search_multi(w, {0, 2, 3}, lim);
  for (int m : {0, 2, 3}) {
    DiagramSearchResult single = bounded_spm_search(w, m, lim);
    CHECK(single.infinite == multi.at(m).infinite);
    if (!single.infinite) CHECK(single.best_ratio == multi.at(m).best_ratio);
    CHECK(single.census == multi.at(m).census);
  }
}

TEST_CASE("search caps raise resource errors") {
  SearchLimits tiny;
  tiny.max_degree = 4;
  tiny.max_cover_vertices = 8;
  CHECK_THROWS_AS(bounded_spm_search(parse_word("abAB"), 2, tiny), resource_error);
  SearchLimits starved;
  starved.max_degree = 3;
  starved.max_states = 10;
  CHECK_THROWS_AS(bounded_spm_search(parse_word("abab"), 2, starved), resource_error);
  SearchLimits bad;
  bad.max_degree = 0;
  CHECK_THROWS_AS(bounded_spm_search(parse_word("a"), 2, bad), std::invalid_argument);
  CHECK_THROWS_AS(bounded_spm_search(parse_word("a"), 1), std::invalid_argument);
}

TEST_CASE("finite ranks are bounded by the ambient rank on a corpus") {
  std::vector<int> alphabet{1, -1, 2, -2};
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> idx(len, 0);
    for (;;) {
      Word w;
      w.rank = 2;
      for (int i = 0; i < len; ++i) w.letters.push_back(alphabet[idx[i]]);
      if (is_cyclically_reduced(w)) {
        RankResult pi = primitivity_rank(w);
        if (!pi.infinite) {
          CHECK(pi.value >= 1);
          CHECK(pi.value <= 2);
        }
        // divisibility order for the non-stable rank
        RankResult r2 = mod_m_rank(w, 2);
        RankResult r4 = mod_m_rank(w, 4);
        if (!r4.infinite) {
          REQUIRE_FALSE(r2.infinite);
          CHECK(r2.value <= r4.value);
        }
      }
      int i = len - 1;
      while (i >= 0 && ++idx[i] == 4) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

TEST_CASE("bounded search improves monotonically with the degree cap") {
  for (auto [text, m] : std::vector<std::pair<const char*, int>>{{"aaa", 2}, {"abAB", 0}}) {
    BigRational prev;
    bool prev_infinite = true;
    for (int D = 1; D <= 3; ++D) {
      SearchLimits lim;
      lim.max_degree = D;
      DiagramSearchResult r = bounded_spm_search(parse_word(text), m, lim);
      if (!prev_infinite) {
        REQUIRE_FALSE(r.infinite);
        CHECK(r.best_ratio <= prev);
      }
      prev_infinite = r.infinite;
      if (!r.infinite) prev = r.best_ratio;
    }
  }
}

TEST_CASE("the lattice walk and the partition sweep enumerate the same quotients") {
  // At degree one every partition is efficient and the deck group is
  // trivial, so the cover search must visit exactly the deduplicated
  // quotient set of the plain enumeration.
  std::mt19937 rng(53);
  std::vector<int> alphabet{1, -1, 2, -2};
  for (int trial = 0; trial < 25; ++trial) {
    int len = 2 + static_cast<int>(rng() % 5);
    Word w;
    w.rank = 2;
    while (w.length() < len) {
      int x = alphabet[rng() % 4];
      if (!w.letters.empty() && x == -w.letters.back()) continue;
      w.letters.push_back(x);
    }
    if (!is_cyclically_reduced(w)) continue;
    long quotients = 0;
    enumerate_quotients(cycle_graph(w).graph, {}, [&](const Quotient&) { ++quotients; });
    SearchLimits lim;
    lim.max_degree = 1;
    DiagramSearchResult r = bounded_spm_search(w, 2, lim);
    CHECK(r.states_visited == quotients);
  }
}

TEST_CASE("a primitive three-letter word has infinite rank") {
  CHECK(primitivity_rank(parse_word("aab")).infinite);
  CHECK(primitivity_rank(parse_word("abb")).infinite);
}

TEST_CASE("partitions are enumerated completely") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(1).size() == 1);
  CHECK(partitions_of(6).size() == 11);
}
